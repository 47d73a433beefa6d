# backend/tests/infrastructure/test_cache_billiards.py
from unittest.mock import patch

import pytest
from django.core.cache import cache

from billiards import __version__
from billiards.domain.classical import DigitCertificate
from infrastructure.billiards.cache import (
    build_certificate_cache_key,
    cache_certificate,
    get_cached_certificate,
    safe_cache_get,
    safe_cache_set,
)


@pytest.fixture(autouse=True)
def clear_cache():
    cache.clear()


def test_certificate_key_carries_package_version():
    key = build_certificate_cache_key(12)
    assert key == f"billiards:digits:v{__version__}:N=12"
    assert key != build_certificate_cache_key(13)


def test_certificate_round_trips_through_cache():
    certificate = DigitCertificate(N=4, value=31415, precision_bits=104, guard_digits=10)
    assert get_cached_certificate(4) is None

    cache_certificate(certificate)

    assert get_cached_certificate(4) == certificate
    assert get_cached_certificate(5) is None


def test_malformed_entry_is_discarded():
    cache.set(build_certificate_cache_key(7), {"N": 7, "digits": "bogus"})
    assert get_cached_certificate(7) is None


def test_cache_failures_are_swallowed():
    with patch("infrastructure.billiards.cache.cache") as broken:
        broken.get.side_effect = ConnectionError("redis down")
        broken.set.side_effect = ConnectionError("redis down")

        assert safe_cache_get("key", default="fallback") == "fallback"
        safe_cache_set("key", 1)
