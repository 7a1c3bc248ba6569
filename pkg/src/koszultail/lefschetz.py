"""Weak and strong Lefschetz verdicts, and the theorem harnesses.

A general linear form is modelled by random forms over GF(p): the rank of
``.l^k`` is maximal off a proper closed set, so the maximum over a few random
trials equals the generic rank with overwhelming probability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .exactla import DEFAULT_PRIME, Matrix, matmul
from .geometry import (
    HypersurfaceConfiguration,
    all_but_one_configuration,
    further_quotient,
    line_configuration,
    reduce_points,
)
from .groebner import ArtinianAlgebra
from .invariants import BettiTable, KoszulTailReport, betti_table, detect_koszul_tails
from .polyring import LinearForm

DEFAULT_TRIALS = 3


class TheoremViolation(AssertionError):
    """A harness assertion failed; carries everything needed to reproduce it."""

    def __init__(self, message: str, witness: dict):
        self.witness = witness
        super().__init__(f"{message}\nwitness: {witness}")


def multiplication_matrix(A: ArtinianAlgebra, l: LinearForm | Sequence[int], i: int, k: int = 1) -> Matrix:
    """Matrix of ``.l^k : A_i -> A_{i+k}`` in the standard monomial bases."""
    if i < 0 or k < 1:
        raise ValueError("need i >= 0 and k >= 1")
    coeffs = l.coefficients if isinstance(l, LinearForm) else tuple(l)
    M = np.eye(A.dim(i), dtype=np.int64)
    for t in range(k):
        M = matmul(A.linear_matrix(coeffs, i + t), M, A.p)
    return Matrix(M, A.p)


@dataclass(frozen=True)
class MapRecord:
    source_degree: int
    power: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == min(self.source_dim, self.target_dim)

    @property
    def kind(self) -> str:
        inj = self.rank == self.source_dim
        surj = self.rank == self.target_dim
        if inj and surj:
            return "bijective"
        return "injective" if inj else "surjective" if surj else "neither"

    def describe(self) -> str:
        arrow = f"{self.source_degree}->{self.source_degree + self.power}"
        power = "" if self.power == 1 else f"^{self.power}"
        status = "full" if self.full_rank else "NOT full"
        return (f"  l{power}: A_{arrow}  dims {self.source_dim}->{self.target_dim}  "
                f"rank {self.rank}  {status} ({self.kind})")


@dataclass
class LefschetzReport:
    property: str
    records: list[MapRecord]
    trials: int
    seed: int

    @property
    def holds(self) -> bool:
        return all(r.full_rank for r in self.records)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def failures(self) -> list[MapRecord]:
        return [r for r in self.records if not r.full_rank]

    @property
    def failure_degrees(self) -> list[int]:
        return [r.source_degree for r in self.failures if r.power == 1]

    def record(self, i: int, k: int = 1) -> MapRecord:
        for r in self.records:
            if (r.source_degree, r.power) == (i, k):
                return r
        raise KeyError((i, k))

    def render(self) -> str:
        lines = [f"{self.property} seed={self.seed} trials={self.trials}"]
        lines += [r.describe() for r in self.records]
        lines.append(f"{self.property} {self.verdict}")
        if not self.holds:
            lines.append("failing maps: " + ", ".join(
                f"{r.source_degree}->{r.source_degree + r.power}" for r in self.failures))
        return "\n".join(lines)


def _random_forms(A: ArtinianAlgebra, trials: int, seed: int) -> list[LinearForm]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if A.n_vars == 0:
        return []
    rng = np.random.default_rng(seed)
    return [LinearForm.random(A.n_vars, rng, A.p) for _ in range(trials)]


def _best_rank(A: ArtinianAlgebra, forms: Sequence[LinearForm], i: int, k: int) -> int:
    src, tgt = A.dim(i), A.dim(i + k)
    best = 0
    for l in forms:
        best = max(best, multiplication_matrix(A, l, i, k).rank())
        if best == min(src, tgt):
            break
    return best


def wlp(A: ArtinianAlgebra, trials: int = DEFAULT_TRIALS, seed: int = 0) -> LefschetzReport:
    forms = _random_forms(A, trials, seed)
    records = [
        MapRecord(i, 1, A.dim(i), A.dim(i + 1), _best_rank(A, forms, i, 1))
        for i in range(A.socle_degree)
    ]
    return LefschetzReport("WLP", records, trials, seed)


def slp(A: ArtinianAlgebra, trials: int = DEFAULT_TRIALS, seed: int = 0) -> LefschetzReport:
    """All maps ``.l^k : A_i -> A_{i+k}`` with ``i + k <= socle degree``.

    Each trial draws one form and uses it for every ``(i, k)``; a map's rank
    is the best over trials.
    """
    forms = _random_forms(A, trials, seed)
    pairs = [(i, k) for i in range(A.socle_degree) for k in range(1, A.socle_degree - i + 1)]
    best = {pk: 0 for pk in pairs}
    for l in forms:
        for i, k in pairs:
            if best[(i, k)] < min(A.dim(i), A.dim(i + k)):
                best[(i, k)] = max(best[(i, k)], multiplication_matrix(A, l, i, k).rank())
    records = [MapRecord(i, k, A.dim(i), A.dim(i + k), best[(i, k)]) for i, k in pairs]
    return LefschetzReport("SLP", records, trials, seed)


# -- harnesses ---------------------------------------------------------------


@dataclass
class Theorem1Record:
    n: int
    d: int
    seed: int
    sizes: dict[str, int]
    h_vector: tuple[int, ...]
    dims: tuple[int, int]
    expected_dims: tuple[int, int]
    report: LefschetzReport
    witness_in_kernel: bool

    def render(self) -> str:
        s = self.sizes
        return "\n".join([
            f"theorem1 n={self.n} d={self.d} seed={self.seed}",
            f"points: {s['on_hypersurface']} fixing f + {s['off']} off V(f) + {s['extra']} extra on V(f) = {s['total']}",
            f"h-vector: {list(self.h_vector)}",
            f"dim A_{self.d} = {self.dims[0]} (expected {self.expected_dims[0]}), "
            f"dim A_{self.d + 1} = {self.dims[1]} (expected {self.expected_dims[1]})",
            f"reduced f in kernel of every l: {self.witness_in_kernel}",
            self.report.render(),
            "verified",
        ])


def verify_theorem1(n: int, d: int, seed: int = 0, trials: int = DEFAULT_TRIALS,
                    config: HypersurfaceConfiguration | None = None,
                    p: int = DEFAULT_PRIME) -> Theorem1Record:
    if n < 3 or d < 1:
        raise ValueError("need n >= 3 and d >= 1")
    cfg = config or all_but_one_configuration(n, d, seed, p)
    red = reduce_points(cfg.points, seed)
    A = red.algebra
    rep = wlp(A, trials, seed)
    expected = (comb(n - 1 + d, n - 1), comb(n + d, n - 1) - n)
    dims = (A.dim(d), A.dim(d + 1))
    f_bar = red.reduce(cfg.hypersurface)
    coords = A.coordinates(f_bar) if not f_bar.is_zero() else np.zeros(A.dim(d), dtype=np.int64)
    forms = _random_forms(A, trials, seed)
    in_kernel = bool(coords.any()) and all(
        not multiplication_matrix(A, l, d, 1).apply(coords).any() for l in forms
    ) and all(not matmul(A.variable_matrix(j, d), coords.reshape(-1, 1), A.p).any() for j in range(A.n_vars))
    sizes = {
        "on_hypersurface": len(cfg.on_hypersurface), "off": len(cfg.off),
        "extra": len(cfg.extra), "total": len(cfg.points),
    }
    record = Theorem1Record(n, d, seed, sizes, A.h_vector, dims, expected, rep, in_kernel)
    problems = []
    if d not in rep.failure_degrees:
        problems.append(f"WLP does not fail at degree {d}")
    if dims != expected:
        problems.append(f"dims {dims} != {expected}")
    if not in_kernel:
        problems.append("reduced f is not a nonzero kernel element")
    if problems:
        raise TheoremViolation("; ".join(problems), {
            "n": n, "d": d, "seed": seed, "points": cfg.points.points,
            "f": str(cfg.hypersurface), "form": red.form.coefficients,
            "h_vector": A.h_vector, "records": [r.describe() for r in rep.records],
        })
    return record


@dataclass
class Theorem2Record:
    betti: BettiTable
    tails: KoszulTailReport
    report: LefschetzReport

    @property
    def applicable(self) -> bool:
        return self.tails.maximal is not None and self.betti.n_vars >= 3

    def render(self) -> str:
        lines = [str(self.betti), f"Koszul tails: {self.tails.describe()}", self.report.render()]
        if self.applicable:
            d = self.tails.maximal
            lines.append(f"maximal ({self.betti.n_vars},{d}) tail forces failure at {d}->{d + 1}: verified")
        else:
            lines.append("not applicable: no maximal Koszul tail")
        return "\n".join(lines)


def verify_theorem2(A: ArtinianAlgebra, trials: int = DEFAULT_TRIALS, seed: int = 0) -> Theorem2Record:
    if A.n_vars < 3:
        raise ValueError("the tail criterion needs at least 3 variables")
    B = betti_table(A)
    tails = detect_koszul_tails(B)
    rep = wlp(A, trials, seed)
    record = Theorem2Record(B, tails, rep)
    if record.applicable and tails.maximal not in rep.failure_degrees:
        raise TheoremViolation(
            f"maximal ({A.n_vars},{tails.maximal}) tail but WLP does not fail at {tails.maximal}",
            {"gb": [str(g) for g in A.gb.generators], "betti": B.triples(),
             "records": [r.describe() for r in rep.records], "seed": seed},
        )
    return record


@dataclass
class Example2Record:
    seed: int
    attempts: int
    config: HypersurfaceConfiguration
    betti_A: BettiTable
    wlp_A: LefschetzReport
    betti_Astar: BettiTable
    tails_Astar: KoszulTailReport
    wlp_Astar: LefschetzReport
    tails_A: KoszulTailReport
    matches: bool

    def render(self) -> str:
        c = self.config
        return "\n".join([
            f"example2 seed={self.seed} attempts={self.attempts}",
            f"points: {len(c.on_hypersurface)} + {len(c.extra)} on a cubic, {len(c.off)} on a line off it",
            "Betti(A):", str(self.betti_A),
            f"Koszul tails of A: {self.tails_A.describe()}",
            f"A: WLP {self.wlp_A.verdict}",
            "Betti(A*):", str(self.betti_Astar),
            f"Koszul tails of A*: {self.tails_Astar.describe()}",
            self.wlp_Astar.render(),
            "verified" if self.matches else "MISMATCH",
        ])


def verify_example2(seed: int = 0, trials: int = DEFAULT_TRIALS, max_resamples: int = 5,
                    p: int = DEFAULT_PRIME) -> Example2Record:
    """Build the 70-point configuration in P^4 and check both expected tables.

    A configuration that misses the expected tables is resampled (the count is
    reported in ``attempts``); after ``max_resamples`` the last one is returned
    with ``matches=False``.
    """
    from .fixtures import EXAMPLE2_BETTI_A, EXAMPLE2_BETTI_ASTAR

    want_A = BettiTable.from_rows(4, EXAMPLE2_BETTI_A)
    want_Astar = BettiTable.from_rows(3, EXAMPLE2_BETTI_ASTAR)
    record = None
    for attempt in range(1, max_resamples + 1):
        s = seed + 1000 * (attempt - 1)
        cfg = line_configuration(4, 3, 5, seed=s, p=p)
        A = reduce_points(cfg.points, s).algebra
        A_star = further_quotient(A, s)
        bA, bS = betti_table(A), betti_table(A_star)
        tails_S = detect_koszul_tails(bS)
        rep_A, rep_S = wlp(A, trials, s), wlp(A_star, trials, s)
        ok = (bA == want_A and bS == want_Astar and rep_A.holds
              and tails_S.maximal == 3 and 3 in rep_S.failure_degrees)
        record = Example2Record(seed, attempt, cfg, bA, rep_A, bS, tails_S, rep_S,
                                detect_koszul_tails(bA), ok)
        if ok:
            break
    return record
