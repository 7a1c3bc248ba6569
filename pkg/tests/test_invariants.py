from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koszultail.exactla import Matrix, extend_basis
from koszultail.fixtures import EXAMPLE1_BETTI, EXAMPLE3_BETTI
from koszultail.groebner import socle_dimensions
from koszultail.invariants import (
    BettiTable,
    betti_table,
    complex_defect,
    detect_koszul_tails,
    euler_check,
    has_koszul_tail,
    koszul_strand,
    verify_tail_report,
)
from koszultail.polyring import Polynomial, monomial_basis

from conftest import algebra_from, random_monomial_algebra, tail_seeded_monomial_algebra

X3 = ["x1", "x2", "x3"]


def test_strand_shapes(example3_algebra):
    A = example3_algebra
    S0 = koszul_strand(A, 0, 1)
    assert S0.shape == (0, A.dim(1))
    S1 = koszul_strand(A, 1, 2)
    assert S1.shape == (A.dim(2), 3 * A.dim(1))
    S3 = koszul_strand(A, 3, 3)
    assert S3.shape == (3 * A.dim(1), A.dim(0))


def test_strand_of_dual_numbers_is_zero():
    A = algebra_from(["x^2"], ["x"])
    # x * x = 0 in K[x]/(x^2)
    assert not koszul_strand(A, 1, 2).entries.any()
    assert koszul_strand(A, 1, 1).rank() == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_maximal_ideal_betti_is_binomial(n):
    names = [f"x{i}" for i in range(1, n + 1)]
    B = betti_table(algebra_from(names, names))
    assert B.triples() == [(i, i, comb(n, i)) for i in range(n + 1)]


def test_reference_tables_example1_and_example3(example1_algebra, example3_algebra):
    assert betti_table(example1_algebra) == BettiTable.from_rows(3, EXAMPLE1_BETTI)
    assert betti_table(example3_algebra) == BettiTable.from_rows(3, EXAMPLE3_BETTI)


def test_complete_intersection_table():
    B = betti_table(algebra_from(["x1^2", "x2^2", "x3^2"], X3))
    assert B.rows() == {0: [1, 0, 0, 0], 1: [0, 3, 0, 0], 2: [0, 0, 3, 0], 3: [0, 0, 0, 1]}


def test_euler_check(example1_algebra, example3_algebra):
    for A in (example1_algebra, example3_algebra):
        B = betti_table(A)
        assert euler_check(B, A.h_vector)
        bad = BettiTable(B.n_vars, dict(B.entries))
        key = next(iter(k for k in bad.entries if k != (0, 0)))
        bad.entries[key] += 1
        assert not euler_check(bad, A.h_vector)


def test_differential_squares_to_zero(example3_algebra, pair_algebras):
    for A in [example3_algebra, *pair_algebras.values()]:
        for i in range(1, A.n_vars):
            for j in range(i, A.socle_degree + A.n_vars + 1):
                assert not complex_defect(A, i, j)


def test_top_column_is_socle(example1_algebra, example3_algebra, pair_algebras):
    for A in [example1_algebra, example3_algebra, *pair_algebras.values()]:
        B = betti_table(A)
        n = A.n_vars
        socle = socle_dimensions(A)
        for j in range(n, A.socle_degree + n + 1):
            assert B.get(n, j) == socle[j - n]


def minimal_generator_count(A, d):
    """beta_{1,d} as dim I_d minus dim S_1 * I_{d-1}, read off the normal-form tables."""
    def ideal_basis(deg):
        return Matrix(A.normal_form_matrix(deg), A.p).kernel_basis()

    basis = monomial_basis(A.n_vars, d)
    idx = {m: k for k, m in enumerate(basis)}
    products = []
    for row in ideal_basis(d - 1):
        f = Polynomial.from_vector(row, A.n_vars, d - 1, A.p)
        for j in range(A.n_vars):
            products.append((f * Polynomial.variable(j, A.n_vars, A.p)).to_vector(d))
    inside = np.array(products, dtype=np.int64).reshape(-1, len(idx))
    return len(extend_basis(inside, ideal_basis(d), A.p, len(idx)))


def test_first_column_counts_minimal_generators(example1_algebra, example3_algebra, pair_algebras):
    for A in [example1_algebra, example3_algebra, *pair_algebras.values()]:
        B = betti_table(A)
        for d in range(1, A.socle_degree + 2):
            assert B.get(1, d) == minimal_generator_count(A, d)


@given(st.integers(0, 2**32 - 1), st.integers(2, 4))
@settings(max_examples=25, deadline=None)
def test_random_monomial_tables_consistent(seed, n):
    A = random_monomial_algebra(np.random.default_rng(seed), n, max_power=4)
    B = betti_table(A)
    assert euler_check(B, A.h_vector)
    assert B.get(0, 0) == 1 and B.totals()[0] == 1
    assert [B.get(n, j) for j in range(n, A.socle_degree + n + 1)] == socle_dimensions(A)


def test_tail_detector_examples(example1_algebra, example3_algebra):
    rep = detect_koszul_tails(betti_table(example1_algebra))
    assert rep.tails == [(3, 1)] and rep.maximal == 1
    assert rep.describe() == "(3,1), maximal"
    rep = detect_koszul_tails(betti_table(example3_algebra))
    assert rep.tails == [] and rep.describe() == "none"


def test_tail_detector_nonmaximal(example2_record):
    rep = example2_record.tails_A
    assert rep.maximal is None
    assert (3, 3) in rep.tails
    assert "(3,3), not maximal" in rep.describe()
    assert example2_record.tails_Astar.maximal == 3


def test_tail_detector_pair(pair_algebras):
    for A in pair_algebras.values():
        assert detect_koszul_tails(betti_table(A)).maximal is None


def test_tail_detector_rejects_noncyclic():
    B = BettiTable(3, {(0, 0): 1, (0, 1): 1})
    with pytest.raises(ValueError):
        detect_koszul_tails(B)


def test_has_tail_needs_clean_rows_above():
    B = BettiTable.from_rows(3, {0: [1], 1: [0, 1], 2: [0, 3, 3, 1]})
    assert not has_koszul_tail(B, 3, 2)
    B = BettiTable.from_rows(3, {0: [1], 2: [0, 3, 3, 1], 3: [0, 5, 9, 4]})
    assert has_koszul_tail(B, 3, 2)


@pytest.mark.parametrize("seed", range(8))
def test_tail_seeded_algebras(seed):
    rng = np.random.default_rng(seed)
    n = 3 + seed % 2
    d = 1 + seed % 3
    A = tail_seeded_monomial_algebra(rng, n, d)
    B = betti_table(A)
    rep = detect_koszul_tails(B)
    assert verify_tail_report(B, rep)
    # m * (x1..xn) with deg m = d makes row d start with the Koszul block
    assert rep.maximal == d


def test_render_format(example3_algebra):
    text = betti_table(example3_algebra).render()
    assert text.splitlines() == [
        "       0 1 2 3",
        "total: 1 6 8 3",
        "    0: 1 . . .",
        "    1: . 4 4 1",
        "    2: . 2 4 2",
    ]
