from .base import *  # noqa: F403

# Debug disabled for test environment
DEBUG = False

# Celery executed synchronously during tests
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_BROKER_URL = "memory://"
CELERY_RESULT_BACKEND = "cache+memory://"

# In-memory cache for tests
CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "test-cache",
    }
}

# Deterministic defaults regardless of the caller's environment
PI_BILLIARDS_PRECISION_BITS = 65536
PI_BILLIARDS_SIGNIFICANT_DIGITS = 12

# Minimal logging configuration for test environment
LOGGING = {
    "version": 1,
    "disable_existing_loggers": True,
}
