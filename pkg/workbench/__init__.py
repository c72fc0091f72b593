# coding=utf-8

"""Workbench project for running and testing the rank commands."""
