"""
dev.py

Development settings.
Overrides base.py with development-specific configuration.
"""

from .base import *  # noqa

# Enable debug mode in development
DEBUG = True

# Chatty numerics while developing: precision escalation, Bessel fallbacks
LOG_LEVEL = env("LOG_LEVEL", default="DEBUG")  # noqa: F405
LOGGING["loggers"]["billiards"]["level"] = LOG_LEVEL  # noqa: F405
LOGGING["loggers"]["infrastructure.billiards"]["level"] = LOG_LEVEL  # noqa: F405
