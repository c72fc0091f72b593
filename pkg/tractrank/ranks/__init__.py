# coding=utf-8

"""Rank functions over tracts, with the data certifying each value."""
