"""Reference point sets, ideals and their expected Betti tables."""

from __future__ import annotations

from .exactla import DEFAULT_PRIME
from .geometry import PointSet
from .polyring import Polynomial, parse_polynomial

# columns are points
_EXAMPLE1 = [
    [1, 0, 0, 1, 1, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

_EXAMPLE3 = [
    [1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 1],
]

EXAMPLE3_IDEAL = [
    "x0*x2", "x1*x2", "x0*x3", "x1*x3", "x0^2*x1 - x0*x1^2", "x2^2*x3 - x2*x3^2",
]

REDUCED_NAMES = ["x1", "x2", "x3", "x4"]

PAIR_WLP_IDEAL = [
    "x4^2", "x3*x4", "x3^3", "x2*x3^2 - x2^2*x4", "x1*x3^2 - x1*x2*x4 + x2^2*x4",
    "x2^2*x3", "x2^3", "x1^3*x4 - x1^2*x2*x4 + x1*x2^2*x4", "x1^3*x3",
    "x1^3*x2 - x1^2*x2^2", "x1^4",
]

PAIR_FAILWLP_IDEAL = [
    "x1*x4", "x1^2", "x3*x4^2", "x2*x4^2", "x2^2*x4", "x1*x3^2", "x1*x2^2 - x3^2*x4",
    "x3^4", "x2*x3^3 - x4^4", "x2^2*x3^2", "x2^4",
]

# rows of the expected Betti tables, keyed by row index j - i; entries by column i
EXAMPLE1_BETTI = {0: [1], 1: [0, 3, 3, 1], 2: [0, 3, 4, 1], 3: [0, 0, 1, 1]}
EXAMPLE3_BETTI = {0: [1], 1: [0, 4, 4, 1], 2: [0, 2, 4, 2]}
PAIR_BETTI = {
    0: [1], 1: [0, 2, 1], 2: [0, 5, 9, 4], 3: [0, 4, 9, 5], 4: [0, 0, 2, 1], 5: [0, 0, 0, 0, 1],
}
EXAMPLE2_BETTI_A = {0: [1], 3: [0, 3, 3, 1], 4: [0, 44, 111, 90, 20], 5: [0, 0, 0, 0, 3]}
EXAMPLE2_BETTI_ASTAR = {0: [1], 3: [0, 3, 3, 1], 4: [0, 15, 27, 12]}

POINT_FIXTURES = ("example1", "example1_Xf", "example3")
IDEAL_FIXTURES = ("pair_wlp_ideal", "pair_failwlp_ideal")
FIXTURES = POINT_FIXTURES + IDEAL_FIXTURES


def ideal_fixture(name: str, p: int = DEFAULT_PRIME) -> tuple[list[str], list[Polynomial]]:
    """Variable names and generators of an ideal fixture."""
    if name == "pair_wlp_ideal":
        texts = PAIR_WLP_IDEAL
    elif name == "pair_failwlp_ideal":
        texts = PAIR_FAILWLP_IDEAL
    else:
        raise KeyError(f"unknown ideal fixture {name!r}")
    return list(REDUCED_NAMES), [parse_polynomial(t, REDUCED_NAMES, p) for t in texts]


def load_fixture(name: str, p: int = DEFAULT_PRIME) -> PointSet | list[Polynomial]:
    if name == "example1":
        return PointSet.from_columns(_EXAMPLE1, p)
    if name == "example1_Xf":
        return PointSet.from_columns([row[:7] for row in _EXAMPLE1], p)
    if name == "example3":
        return PointSet.from_columns(_EXAMPLE3, p)
    if name in IDEAL_FIXTURES:
        return ideal_fixture(name, p)[1]
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
