# backend/infrastructure/billiards/cache.py
import logging
from dataclasses import asdict
from typing import Optional

from django.core.cache import cache

from billiards import __version__
from billiards.domain.classical import DigitCertificate

logger = logging.getLogger(__name__)

DIGITS_CACHE_PREFIX = "billiards:digits"
DIGITS_CACHE_TTL = None  # certificates never go stale within one version


def safe_cache_get(key, default=None):
    """Fail-safe wrapper around cache.get()."""
    try:
        return cache.get(key, default)
    except Exception:
        logger.warning("Cache get failed for key=%s", key, exc_info=True)
        return default


def safe_cache_set(key, value, timeout=None):
    """Fail-safe wrapper around cache.set()."""
    try:
        cache.set(key, value, timeout=timeout)
    except Exception:
        logger.warning("Cache set failed for key=%s", key, exc_info=True)


def build_certificate_cache_key(N: int) -> str:
    """
    Key for the certificate of floor(pi * 10**N).

    The package version is part of the key, so a release never reads
    certificates written by another one.
    """
    return f"{DIGITS_CACHE_PREFIX}:v{__version__}:N={N}"


def get_cached_certificate(N: int) -> Optional[DigitCertificate]:
    data = safe_cache_get(build_certificate_cache_key(N))
    if data is None:
        return None
    try:
        return DigitCertificate(**data)
    except TypeError:
        logger.warning("Discarding malformed cached certificate for N=%s", N)
        return None


def cache_certificate(certificate: DigitCertificate) -> None:
    safe_cache_set(
        build_certificate_cache_key(certificate.N),
        asdict(certificate),
        timeout=DIGITS_CACHE_TTL,
    )
