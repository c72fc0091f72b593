# coding=utf-8

"""Tract rank application."""

__version__ = "0.1.0"

default_app_config = "tractrank.apps.TractRankConfig"
