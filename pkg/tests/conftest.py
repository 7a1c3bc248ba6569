import numpy as np
import pytest

from koszultail.fixtures import ideal_fixture, load_fixture
from koszultail.geometry import artinian_reduction, reduce_points
from koszultail.groebner import ArtinianAlgebra, buchberger
from koszultail.polyring import parse_polynomial

P = 32003

ACCEPTANCE_LINES: list[str] = []


def algebra_from(texts, names):
    gens = [parse_polynomial(t, names) for t in texts]
    return ArtinianAlgebra(buchberger(gens, n_vars=len(names)))


def random_monomial_algebra(rng: np.random.Generator, n: int, max_power: int = 5,
                            extra: int = 4) -> ArtinianAlgebra:
    """Pure powers of every variable plus a few random monomials."""
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = int(rng.integers(2, max_power + 1))
        gens.append(tuple(e))
    for _ in range(extra):
        d = int(rng.integers(2, max_power + 1))
        e = [0] * n
        for _ in range(d):
            e[int(rng.integers(n))] += 1
        gens.append(tuple(e))
    from koszultail.polyring import Polynomial
    return ArtinianAlgebra(buchberger([Polynomial.monomial(m) for m in gens], n_vars=n))


def tail_seeded_monomial_algebra(rng: np.random.Generator, n: int, d: int) -> ArtinianAlgebra:
    """``m * (x_1..x_n)`` for a random degree-``d`` monomial ``m``, plus higher-degree monomials."""
    from koszultail.polyring import Polynomial

    m = [0] * n
    for _ in range(d):
        m[int(rng.integers(n))] += 1
    gens = []
    for i in range(n):
        e = list(m)
        e[i] += 1
        gens.append(tuple(e))
    for i in range(n):
        e = [0] * n
        e[i] = d + 2 + int(rng.integers(0, 2))
        gens.append(tuple(e))
    for _ in range(int(rng.integers(0, 4))):
        deg = d + 2 + int(rng.integers(0, 2))
        e = [0] * n
        for _ in range(deg):
            e[int(rng.integers(n))] += 1
        gens.append(tuple(e))
    return ArtinianAlgebra(buchberger([Polynomial.monomial(g) for g in gens], n_vars=n))


@pytest.fixture(scope="session")
def example1_reduction():
    return reduce_points(load_fixture("example1"), seed=0)


@pytest.fixture(scope="session")
def example1_algebra(example1_reduction):
    return example1_reduction.algebra


@pytest.fixture(scope="session")
def example3_algebra():
    return artinian_reduction(load_fixture("example3"), seed=0)


@pytest.fixture(scope="session")
def pair_algebras():
    out = {}
    for name in ("pair_wlp_ideal", "pair_failwlp_ideal"):
        names, gens = ideal_fixture(name)
        out[name] = ArtinianAlgebra(buchberger(gens, n_vars=len(names)))
    return out


@pytest.fixture(scope="session")
def example2_record():
    from koszultail.lefschetz import verify_example2

    return verify_example2(seed=0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
