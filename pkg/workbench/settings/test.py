# coding=utf-8

"""Testing settings."""

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "null": {
            "class": "logging.NullHandler",
        },
    },
    "loggers": {
        "tractrank": {
            "handlers": ["null"],
            "level": "DEBUG",
            "propagate": False,
        },
    },
}

# Tract ranks
TRACTRANK_GUARDS = {}
TRACTRANK_SEED = 0
TRACTRANK_MATROIDAL_MODE = "bounds"
