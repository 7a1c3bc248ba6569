"""Graded Betti tables from Koszul homology, and Koszul-tail detection.

``beta_{i,j} = dim Tor_i(A, K)_j`` is the homology of the Koszul complex
``A (x) Lambda^i`` in internal degree ``j``. Each strand is a matrix over the
standard monomial bases of ``A``, so only ranks are needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

import numpy as np

from .exactla import Matrix, matmul
from .groebner import ArtinianAlgebra


def koszul_strand(A: ArtinianAlgebra, i: int, j: int) -> Matrix:
    """Differential ``(A (x) Lambda^i)_j -> (A (x) Lambda^{i-1})_j``.

    Source basis: ``m (x) e_S`` with ``|S| = i`` (subsets in lexicographic
    order, outer) and ``m`` a standard monomial of degree ``j - i`` (inner).
    ``m (x) e_S`` goes to ``sum_t (-1)^(t+1) x_{s_t} m (x) e_{S - s_t}``.
    """
    n, p = A.n_vars, A.p
    if not 0 <= i <= n + 1:
        raise ValueError(f"homological degree {i} outside 0..{n + 1}")
    src_subsets = list(combinations(range(n), i)) if i <= n else []
    src_dim = A.dim(j - i)
    cols = len(src_subsets) * src_dim
    if i == 0:
        return Matrix.zeros(0, cols, p)
    tgt_subsets = list(combinations(range(n), i - 1))
    tgt_index = {S: k for k, S in enumerate(tgt_subsets)}
    tgt_dim = A.dim(j - i + 1)
    M = np.zeros((len(tgt_subsets) * tgt_dim, cols), dtype=np.int64)
    if src_dim and tgt_dim:
        for c, S in enumerate(src_subsets):
            for t, s in enumerate(S):
                T = S[:t] + S[t + 1:]
                r = tgt_index[T]
                block = A.variable_matrix(s, j - i)
                if t % 2:
                    block = (-block) % p
                M[r * tgt_dim:(r + 1) * tgt_dim, c * src_dim:(c + 1) * src_dim] = block
    return Matrix(M, p)


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}``; zero entries are omitted."""

    n_vars: int
    entries: dict[tuple[int, int], int]
    artinian: bool = True

    def __post_init__(self) -> None:
        self.entries = {k: int(v) for k, v in self.entries.items() if v}

    @classmethod
    def from_rows(cls, n_vars: int, rows: Mapping[int, Sequence[int]], artinian: bool = True) -> "BettiTable":
        """Build from displayed rows: ``rows[r][i] = beta_{i, i+r}``."""
        entries = {}
        for r, row in rows.items():
            for i, b in enumerate(row):
                if b:
                    entries[(i, i + r)] = b
        return cls(n_vars, entries, artinian)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n_vars == other.n_vars and self.entries == other.entries

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def max_row(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def max_column(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def row(self, r: int, width: int | None = None) -> list[int]:
        width = self.max_column + 1 if width is None else width
        return [self.get(i, i + r) for i in range(width)]

    def rows(self) -> dict[int, list[int]]:
        return {r: self.row(r) for r in range(self.max_row + 1)}

    def totals(self) -> list[int]:
        return [sum(b for (i, _), b in self.entries.items() if i == c) for c in range(self.max_column + 1)]

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self.entries.items())

    def render(self) -> str:
        ncols = self.max_column + 1
        cells = [[str(c) for c in range(ncols)], [str(t) for t in self.totals()]]
        labels = ["", "total:"]
        for r in range(self.max_row + 1):
            labels.append(f"{r}:")
            cells.append([str(b) if b else "." for b in self.row(r, ncols)])
        lw = max(len(s) for s in labels)
        widths = [max(len(row[c]) for row in cells) for c in range(ncols)]
        lines = []
        for label, row in zip(labels, cells):
            parts = [label.rjust(lw)] + [cell.rjust(w) for cell, w in zip(row, widths)]
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def betti_table(A: ArtinianAlgebra) -> BettiTable:
    n = A.n_vars
    top = A.socle_degree + n
    ranks: dict[tuple[int, int], int] = {}

    def strand_rank(i: int, j: int) -> int:
        if (i, j) not in ranks:
            ranks[(i, j)] = koszul_strand(A, i, j).rank() if 0 < i <= n else 0
        return ranks[(i, j)]

    entries = {}
    for i in range(n + 1):
        for j in range(i, top + 1):
            chain_dim = comb(n, i) * A.dim(j - i)
            if chain_dim == 0:
                continue
            b = chain_dim - strand_rank(i, j) - strand_rank(i + 1, j)
            if b:
                entries[(i, j)] = b
    return BettiTable(n, entries, artinian=True)


def euler_check(B: BettiTable, h: Sequence[int]) -> bool:
    """Alternating Betti sums must match the numerator ``h(t) (1-t)^n``."""
    n = B.n_vars
    numerator = [0] * (len(h) + n)
    for d, hd in enumerate(h):
        for k in range(n + 1):
            numerator[d + k] += hd * comb(n, k) * (-1) ** k
    top = max(len(numerator) - 1, max((j for _, j in B.entries), default=0))
    for j in range(top + 1):
        alt = sum((-1) ** i * b for (i, jj), b in B.entries.items() if jj == j)
        if alt != (numerator[j] if j < len(numerator) else 0):
            return False
    return True


@dataclass
class KoszulTailReport:
    n_vars: int
    tails: list[tuple[int, int]] = field(default_factory=list)
    maximal: int | None = None

    def describe(self) -> str:
        if not self.tails:
            return "none"
        parts = []
        for width, d in self.tails:
            tag = "maximal" if (width == self.n_vars and self.maximal == d) else "not maximal"
            parts.append(f"({width},{d}), {tag}")
        return "; ".join(parts)


def has_koszul_tail(B: BettiTable, width: int, d: int) -> bool:
    """Whether the upper-left block of ``B`` is the ``(width, d)`` Koszul block."""
    if B.get(0, 0) != 1:
        return False
    for i in range(width + 1):
        for r in range(d):
            if (i, r) != (0, 0) and B.get(i, i + r):
                return False
    if B.get(0, d):
        return False
    return all(B.get(i, i + d) == comb(width, i) for i in range(1, width + 1))


def detect_koszul_tails(B: BettiTable) -> KoszulTailReport:
    if any(B.get(0, j) for j in range(1, B.max_row + 1)):
        raise ValueError("Betti table is not that of a cyclic module: beta_{0,j} != 0 for some j > 0")
    report = KoszulTailReport(B.n_vars)
    for width in range(2, B.n_vars + 1):
        for d in range(1, B.max_row + 1):
            if has_koszul_tail(B, width, d):
                report.tails.append((width, d))
                if width == B.n_vars and B.artinian:
                    report.maximal = d
    return report


def verify_tail_report(B: BettiTable, report: KoszulTailReport) -> bool:
    """Re-check every reported tail entry by entry."""
    for width, d in report.tails:
        if B.get(0, 0) != 1:
            return False
        for i in range(1, width + 1):
            if B.get(i, i + d) != comb(width, i):
                return False
            if any(B.get(i, i + r) for r in range(d)):
                return False
    return True


def complex_defect(A: ArtinianAlgebra, i: int, j: int) -> bool:
    """True when ``strand(i, j) o strand(i+1, j)`` is not the zero map."""
    upper = koszul_strand(A, i + 1, j)
    lower = koszul_strand(A, i, j)
    if upper.cols == 0 or lower.rows == 0:
        return False
    return bool(matmul(lower.entries, upper.entries, A.p).any())
