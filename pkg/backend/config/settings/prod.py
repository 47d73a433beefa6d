"""
prod.py

Production settings.
Inherits from base.py and overrides production-specific configuration:
- DEBUG
- Redis-backed certificate cache shared between CLI runs and workers
"""

from .base import *  # noqa: F403

# Debug must always remain disabled in production
DEBUG = False


# ==============================
# CACHE
# ==============================

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.redis.RedisCache",
        "LOCATION": env("REDIS_CACHE_URL", default="redis://redis:6379/2"),  # noqa: F405
    }
}
