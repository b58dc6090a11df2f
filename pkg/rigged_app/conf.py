"""Access to the RIGGED_CONFIG settings block."""

import logging
import os

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)


def _env_defaults() -> dict:
    return {
        "MAX_VERTICES": int(os.environ.get("RIGGED_MAX_VERTICES", "1000000")),
        "FERMIONIC_WARN_TABLEAUX": int(os.environ.get("RIGGED_FERMIONIC_WARN_TABLEAUX", "12")),
        "LITERAL_SUBSET_LIMIT": int(os.environ.get("RIGGED_LITERAL_SUBSET_LIMIT", "10")),
    }


def get_rigged_config() -> dict:
    """Get engine configuration from Django settings.

    Library callers that never configured Django get the environment-derived
    defaults instead of an ImproperlyConfigured error.
    """
    try:
        configured = getattr(settings, "RIGGED_CONFIG", {})
    except ImproperlyConfigured:
        configured = {}
    return {**_env_defaults(), **configured}


def max_vertices(override: int | None = None) -> int:
    """Vertex cap for closure generation, an explicit override wins."""
    if override is not None:
        return override
    return int(get_rigged_config()["MAX_VERTICES"])
