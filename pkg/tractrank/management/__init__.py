# coding=utf-8

"""Management of the tract rank application."""
