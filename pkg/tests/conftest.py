from __future__ import annotations

import pytest

from sparsegroup import NumericalSemigroup, enumerate_genus


@pytest.fixture(scope="session")
def level():
    """Session-cached access to full genus levels of the semigroup tree."""
    cache: dict[int, list[NumericalSemigroup]] = {}

    def get(genus: int) -> list[NumericalSemigroup]:
        if genus not in cache:
            cache[genus] = list(enumerate_genus(genus))
        return cache[genus]

    return get
