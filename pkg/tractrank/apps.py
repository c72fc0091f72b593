# coding=utf-8

"""Application configuration."""

from django.apps import AppConfig


class TractRankConfig(AppConfig):
    """Basic application configuration."""

    name = "tractrank"
    verbose_name = "Tract Rank"
