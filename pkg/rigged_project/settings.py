"""
Django settings for rigged_project.

The project has no database, no URLs and no middleware: it exists to host the
``rigged`` management command and the configuration it reads.
"""

import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "dev-secret-key-change-in-production")

DEBUG = os.environ.get("DEBUG", "False").lower() == "true"

INSTALLED_APPS = [
    "rigged_app",
]

DATABASES = {}

USE_TZ = True

# Rigged configuration engine
RIGGED_CONFIG = {
    # Closure generation stops with an error past this many vertices
    "MAX_VERTICES": int(os.environ.get("RIGGED_MAX_VERTICES", "1000000")),
    # fermionic_M warns when |A(λ′)| exceeds this
    "FERMIONIC_WARN_TABLEAUX": int(os.environ.get("RIGGED_FERMIONIC_WARN_TABLEAUX", "12")),
    # Largest |A(λ′)| accepted by the literal subset sum
    "LITERAL_SUBSET_LIMIT": int(os.environ.get("RIGGED_LITERAL_SUBSET_LIMIT", "10")),
}

# Logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "INFO",
    },
    "loggers": {
        "rigged_app": {
            "handlers": ["console"],
            "level": os.environ.get("RIGGED_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}
