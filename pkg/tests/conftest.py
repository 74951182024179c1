from __future__ import annotations

import pytest

from tokuyama.characters import sweep
from tokuyama.tableaux import Tableau, enumerate_ssyt, shape_from_weight

# The three tableaux worked out by hand in the source material.
FIRST_EXAMPLE = ((1, 1, 2, 3, 3, 5), (2, 3, 3, 4, 4), (3, 5, 5, 5), (5,))
GAP_EXAMPLE = ((1, 1, 1, 3, 4), (2, 2, 2, 4), (3, 4))
GAPLESS_EXAMPLE = ((1, 1, 2, 2, 2, 3, 3, 4), (2, 2, 3, 3, 3, 4), (4, 4, 4))

# (r, lambda) cases covered by the identity sweep.
SWEEP_CASES = list(sweep(3, 2)) + [(4, (0, 0, 0, 0)), (4, (0, 0, 2, 0))]
SMALL_CASES = [case for case in SWEEP_CASES if case[0] <= 3]


@pytest.fixture
def first_example() -> Tableau:
    return Tableau(FIRST_EXAMPLE)


@pytest.fixture
def gap_example() -> Tableau:
    return Tableau(GAP_EXAMPLE)


@pytest.fixture
def gapless_example() -> Tableau:
    return Tableau(GAPLESS_EXAMPLE)


_crystal_cache: dict[tuple[int, tuple[int, ...]], list[Tableau]] = {}


def crystal(r: int, weight: tuple[int, ...]) -> list[Tableau]:
    key = (r, tuple(weight))
    if key not in _crystal_cache:
        _crystal_cache[key] = list(enumerate_ssyt(shape_from_weight(weight, r), r + 1))
    return _crystal_cache[key]


def small_crystal_tableaux() -> list[Tableau]:
    return [tab for r, weight in SMALL_CASES for tab in crystal(r, weight)]
