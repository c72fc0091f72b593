# coding=utf-8

"""Developer template for creating your own `local_settings.py` file."""

# pylint: disable=wildcard-import,unused-wildcard-import

from workbench.settings.base import *


# Log level of the rank searches. Use DEBUG to follow them.
LOGGING["loggers"]["tractrank"]["level"] = "INFO"

# Tract ranks
TRACTRANK_GUARDS.update({})
TRACTRANK_SEED = 0
TRACTRANK_MATROIDAL_MODE = "bounds"
