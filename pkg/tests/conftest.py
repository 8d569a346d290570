import pytest

from qlax.exact import NonGeneric, Rng


def retry(fn, rng, attempts=50):
    """Call fn(rng) until a draw is generic."""
    for _ in range(attempts):
        try:
            return fn(rng)
        except NonGeneric:
            continue
    raise AssertionError("no generic draw found")


@pytest.fixture
def rng():
    return Rng(20240601)
