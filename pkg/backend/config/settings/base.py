"""
base.py

Base Django settings shared across all environments (dev, prod, test).
Environment-specific settings override these defaults in dev.py / prod.py / test.py.
"""

from pathlib import Path

import environ

env = environ.Env()

# ==============================
# PATHS
# ==============================

# BASE_DIR points to the backend/ directory
BASE_DIR = Path(__file__).resolve().parent.parent.parent


# ==============================
# CORE SETTINGS
# ==============================

# Nothing is signed, but Django refuses to start without a key
SECRET_KEY = env("DJANGO_SECRET_KEY", default="unsafe-dev-key-change-me")

DEBUG = False

ALLOWED_HOSTS: list[str] = []


# ==============================
# APPLICATIONS
# ==============================

LOCAL_APPS = [
    "billiards.apps.BilliardsConfig",
]

INSTALLED_APPS = LOCAL_APPS


# ==============================
# DATABASE
# ==============================

# The tool is stateless; certificates live in the cache
DATABASES: dict = {}


# ==============================
# I18N / TIMEZONE
# ==============================

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# ==============================
# PI BILLIARDS
# ==============================

# Ceiling for the interval-arithmetic precision escalation (bits)
PI_BILLIARDS_PRECISION_BITS = env.int("PI_BILLIARDS_PRECISION_BITS", default=65536)

# Default significant digits of printed and written numbers
PI_BILLIARDS_SIGNIFICANT_DIGITS = env.int("PI_BILLIARDS_SIGNIFICANT_DIGITS", default=12)


# ==============================
# CELERY
# ==============================

# Curve tasks run in-process unless a worker is explicitly requested
CELERY_TASK_ALWAYS_EAGER = env.bool("PI_BILLIARDS_EAGER", default=True)
CELERY_TASK_EAGER_PROPAGATES = True

CELERY_BROKER_URL = env("CELERY_BROKER_URL", default="redis://redis:6379/0")

# figures collects curve results, so a result backend is required off-eager
CELERY_RESULT_BACKEND = env("CELERY_RESULT_BACKEND", default="redis://redis:6379/1")

CELERY_TASK_ACKS_LATE = True
CELERY_WORKER_PREFETCH_MULTIPLIER = 1
CELERY_TASK_REJECT_ON_WORKER_LOST = True

CELERY_TASK_TIME_LIMIT = 600
CELERY_TASK_SOFT_TIME_LIMIT = 540

CELERY_BROKER_CONNECTION_RETRY_ON_STARTUP = True

# Standard JSON-based serialization
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = "UTC"


# ==============================
# CACHE
# ==============================

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "pi-billiards",
    }
}


# ==============================
# LOGGING
# ==============================

LOG_LEVEL = env("LOG_LEVEL", default="INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "[{levelname}] {asctime} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            # stderr, so that stdout carries only command output
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": env("DJANGO_LOG_LEVEL", default=LOG_LEVEL),
            "propagate": False,
        },
        "billiards": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
        "infrastructure.billiards": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
}
