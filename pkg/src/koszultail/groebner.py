"""Buchberger's algorithm and finite-dimensional graded quotients.

Internally a polynomial is a ``dict`` from exponent tuples to residues; the
public surface trades in :class:`~koszultail.polyring.Polynomial`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exactla import DEFAULT_PRIME, Matrix, kernel_basis, matmul, rank
from .polyring import (
    ArityError,
    LinearForm,
    Monomial,
    Polynomial,
    divides,
    grevlex_key,
    monomial_basis,
    monomial_index,
)


class NotArtinianError(ValueError):
    """The quotient is infinite-dimensional."""

    def __init__(self, variable: int, names: Sequence[str] | None = None):
        self.variable = variable
        name = names[variable] if names else f"x{variable}"
        super().__init__(f"quotient is not Artinian: no power of {name} lies in the initial ideal")


def _heap_key(m: Monomial) -> tuple:
    # min-heap order on this key is grevlex-descending order on monomials
    return (-sum(m), m[::-1], m)


def _reduce(f: dict, basis: Sequence[tuple[Monomial, dict]], p: int) -> dict:
    """Full division of ``f`` by monic ``basis`` elements ``(lm, poly)``."""
    f = dict(f)
    heap = [_heap_key(m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        m = heapq.heappop(heap)[2]
        c = f.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if all(a <= b for a, b in zip(lm, m)):
                break
        else:
            rem[m] = c
            continue
        q = tuple(a - b for a, b in zip(m, lm))
        for t, gc in g.items():
            if t == lm:
                continue
            tm = tuple(a + b for a, b in zip(t, q))
            old = f.get(tm)
            v = ((old or 0) - c * gc) % p
            if v:
                if old is None:
                    heapq.heappush(heap, _heap_key(tm))
                f[tm] = v
            elif old is not None:
                del f[tm]
    return rem


def _leading(f: dict) -> Monomial:
    return max(f, key=grevlex_key)


def _monic(f: dict, p: int) -> tuple[Monomial, dict]:
    lm = _leading(f)
    s = pow(f[lm], -1, p)
    return lm, {m: c * s % p for m, c in f.items()}


def _spoly(a: tuple[Monomial, dict], b: tuple[Monomial, dict], p: int) -> dict:
    (la, fa), (lb, fb) = a, b
    lcm = tuple(max(x, y) for x, y in zip(la, lb))
    qa = tuple(x - y for x, y in zip(lcm, la))
    qb = tuple(x - y for x, y in zip(lcm, lb))
    out: dict = {}
    for t, c in fa.items():
        if t != la:
            out[tuple(x + y for x, y in zip(t, qa))] = c
    for t, c in fb.items():
        if t == lb:
            continue

        tm = tuple(x + y for x, y in zip(t, qb))
        v = (out.get(tm, 0) - c) % p
        if v:
            out[tm] = v
        else:
            out.pop(tm, None)
    return out


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class GroebnerBasis:
    """A reduced grevlex Groebner basis with monic generators."""

    order = "grevlex"

    def __init__(self, n_vars: int, generators: Iterable[Polynomial], p: int = DEFAULT_PRIME):
        self.n_vars = n_vars
        self.p = p
        self.generators = tuple(generators)
        self._basis = [(g.leading_monomial, dict(g.coeffs)) for g in self.generators]

    def __repr__(self) -> str:
        gens = ", ".join(g.format() for g in self.generators)
        return f"GroebnerBasis(n_vars={self.n_vars}, [{gens}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.n_vars, self.p) == (other.n_vars, other.p) and set(self.generators) == set(other.generators)

    def __hash__(self) -> int:
        return hash((self.n_vars, self.p, frozenset(self.generators)))

    def __len__(self) -> int:
        return len(self.generators)

    @cached_property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(lm for lm, _ in self._basis)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_standard(self, m: Monomial) -> bool:
        return not any(divides(lm, m) for lm in self.leading_monomials)

    def standard_monomials(self, d: int) -> list[Monomial]:
        return standard_monomials(self, d)

    def hilbert_function(self, through: int) -> list[int]:
        return hilbert_function(self, through)

    def non_artinian_variable(self) -> int | None:
        """Index of a variable with no pure power among the leading monomials."""
        for i in range(self.n_vars):
            if not any(sum(lm) == lm[i] for lm in self.leading_monomials):
                return i
        return None

    def is_artinian(self) -> bool:
        return self.non_artinian_variable() is None


def buchberger(gens: Sequence[Polynomial], n_vars: int | None = None,
               p: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by homogeneous ``gens``.

    Pairs are processed by increasing degree of their lcm (the normal
    strategy) with the Gebauer-Moeller criteria pruning the pair set.
    """
    gens = [g for g in gens if not g.is_zero()]
    if n_vars is None:
        if not gens:
            raise ValueError("n_vars required for an empty generator list")
        n_vars = gens[0].n_vars
    if p is None:
        p = gens[0].p if gens else DEFAULT_PRIME
    for g in gens:
        if g.n_vars != n_vars:
            raise ArityError(f"generator in {g.n_vars} variables, expected {n_vars}")
        if g.p != p:
            raise ValueError("generators over different fields")
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")

    polys: list[tuple[Monomial, dict]] = []
    active: list[int] = []
    pairs: set[tuple[int, int]] = set()
    pair_heap: list = []
    pending = sorted(((g.degree, k) for k, g in enumerate(gens)))
    pending_heap = list(pending)
    heapq.heapify(pending_heap)

    def push_pair(i: int, j: int) -> None:
        lcm = _lcm(polys[i][0], polys[j][0])
        pairs.add((i, j))
        heapq.heappush(pair_heap, (sum(lcm), lcm[::-1], i, j))

    def update(h: int) -> None:
        lh = polys[h][0]
        cands = list(active)
        kept: list[int] = []
        while cands:
            g1 = cands.pop(0)
            l1 = _lcm(lh, polys[g1][0])
            if _coprime(lh, polys[g1][0]) or not any(
                divides(_lcm(lh, polys[g2][0]), l1) for g2 in cands + kept
            ):
                kept.append(g1)
        for pr in list(pairs):
            a, b = pr
            lab = _lcm(polys[a][0], polys[b][0])
            if divides(lh, lab) and _lcm(polys[a][0], lh) != lab and _lcm(polys[b][0], lh) != lab:
                pairs.discard(pr)
        for g in kept:
            if not _coprime(lh, polys[g][0]):
                push_pair(g, h)
        active[:] = [g for g in active if not divides(lh, polys[g][0])] + [h]

    def reducers() -> list[tuple[Monomial, dict]]:
        return [polys[g] for g in active]

    while pair_heap or pending_heap:
        while pair_heap and (pair_heap[0][2], pair_heap[0][3]) not in pairs:
            heapq.heappop(pair_heap)
        take_gen = bool(pending_heap) and (not pair_heap or pending_heap[0][0] <= pair_heap[0][0])
        if take_gen:
            _, k = heapq.heappop(pending_heap)
            s = dict(gens[k].coeffs)
        elif pair_heap:
            _, _, i, j = heapq.heappop(pair_heap)
            pairs.discard((i, j))
            s = _spoly(polys[i], polys[j], p)
        else:
            continue
        h = _reduce(s, reducers(), p)
        if h:
            polys.append(_monic(h, p))
            update(len(polys) - 1)

    final = [polys[g] for g in active]
    reduced = []
    for lm, g in final:
        tail = {m: c for m, c in g.items() if m != lm}
        t = _reduce(tail, final, p)
        t[lm] = 1
        reduced.append(Polynomial._trusted(n_vars, t, p))
    reduced.sort(key=lambda g: grevlex_key(g.leading_monomial))
    return GroebnerBasis(n_vars, reduced, p)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if f.n_vars != gb.n_vars:
        raise ArityError(f"polynomial in {f.n_vars} variables, basis in {gb.n_vars}")
    return Polynomial._trusted(f.n_vars, _reduce(f.coeffs, gb._basis, f.p), f.p)


def standard_monomials(gb: GroebnerBasis, d: int) -> list[Monomial]:
    lms = gb.leading_monomials
    return [m for m in monomial_basis(gb.n_vars, d) if not any(divides(lm, m) for lm in lms)]


def hilbert_function(gb: GroebnerBasis, through: int) -> list[int]:
    return [len(standard_monomials(gb, d)) for d in range(through + 1)]


class ArtinianAlgebra:
    """A finite-dimensional graded quotient ``R/I`` given by a Groebner basis.

    Holds, for every degree up to one past the socle degree, the standard
    monomial basis and the normal-form matrix sending each monomial of that
    degree to its coordinates in the standard basis. Multiplication by a
    variable is then a column selection from the next degree's table.
    """

    def __init__(self, gb: GroebnerBasis):
        bad = gb.non_artinian_variable()
        if bad is not None:
            raise NotArtinianError(bad)
        self.gb = gb
        self.n_vars = gb.n_vars
        self.p = gb.p
        std: list[list[Monomial]] = []
        d = 0
        while True:
            s = standard_monomials(gb, d)
            if not s:
                break
            std.append(s)
            d += 1
        self.std_monomials: tuple[tuple[Monomial, ...], ...] = tuple(tuple(s) for s in std)
        self.h_vector: tuple[int, ...] = tuple(len(s) for s in std)
        self.socle_degree = len(std) - 1
        self._nf: list[np.ndarray] = []
        self._build_nf_tables()
        self._mult_cache: dict[tuple[int, int], np.ndarray] = {}

    def __repr__(self) -> str:
        return f"ArtinianAlgebra(n_vars={self.n_vars}, h_vector={list(self.h_vector)})"

    @property
    def dimension(self) -> int:
        return sum(self.h_vector)

    def dim(self, d: int) -> int:
        return self.h_vector[d] if 0 <= d <= self.socle_degree else 0

    def basis(self, d: int) -> tuple[Monomial, ...]:
        return self.std_monomials[d] if 0 <= d <= self.socle_degree else ()

    def _build_nf_tables(self) -> None:
        p, n = self.p, self.n_vars
        lead = {g.leading_monomial: g for g in self.gb.generators}
        for d in range(self.socle_degree + 2):
            monos = monomial_basis(n, d)
            idx = monomial_index(n, d)
            std = self.basis(d)
            pos = {m: i for i, m in enumerate(std)}
            N = np.zeros((len(std), len(monos)), dtype=np.int64)
            for m in reversed(monos):  # ascending grevlex
                col = idx[m]
                if m in pos:
                    N[pos[m], col] = 1
                elif m in lead:
                    for t, c in lead[m].coeffs.items():
                        if t != m:
                            N[pos[t], col] = (-c) % p
                else:
                    for j in range(n):
                        if m[j] == 0:
                            continue
                        below = m[:j] + (m[j] - 1,) + m[j + 1:]
                        if not self.gb.is_standard(below):
                            break
                    else:  # unreachable for a reduced basis
                        raise AssertionError(f"{m} is a minimal non-standard monomial with no basis element")
                    v = self._nf[d - 1][:, monomial_index(n, d - 1)[below]]
                    cols = self._shift_columns(d - 1, j)
                    nz = np.flatnonzero(v)
                    if nz.size:
                        N[:, col] = matmul(N[:, cols[nz]], v[nz].reshape(-1, 1), p).ravel()
            self._nf.append(N)

    def _shift_columns(self, d: int, j: int) -> np.ndarray:
        """Indices in degree ``d+1`` of ``x_j * s`` for the standard basis ``s`` of degree ``d``."""
        idx = monomial_index(self.n_vars, d + 1)
        return np.array(
            [idx[s[:j] + (s[j] + 1,) + s[j + 1:]] for s in self.basis(d)], dtype=np.int64
        )

    def normal_form_matrix(self, d: int) -> np.ndarray:
        """Matrix taking degree-``d`` monomial coordinates to standard coordinates."""
        if d < 0:
            raise ValueError("negative degree")
        if d < len(self._nf):
            return self._nf[d]
        return np.zeros((0, len(monomial_basis(self.n_vars, d))), dtype=np.int64)

    def coordinates(self, f: Polynomial) -> np.ndarray:
        """Coordinates of the class of homogeneous ``f`` in the standard basis."""
        if f.n_vars != self.n_vars:
            raise ArityError(f"polynomial in {f.n_vars} variables, algebra in {self.n_vars}")
        if f.is_zero():
            raise ValueError("zero polynomial has no degree; pass a degree explicitly")
        d = f.degree
        return matmul(self.normal_form_matrix(d), np.array(f.to_vector(d)).reshape(-1, 1), self.p).ravel()

    def element(self, coords: Sequence[int], d: int) -> Polynomial:
        basis = self.basis(d)
        return Polynomial(self.n_vars, {m: int(c) for m, c in zip(basis, coords)}, self.p)

    def variable_matrix(self, j: int, d: int) -> np.ndarray:
        """Multiplication by ``x_j`` as a ``dim A_{d+1} x dim A_d`` matrix."""
        key = (j, d)
        if key not in self._mult_cache:
            if self.dim(d) == 0 or self.dim(d + 1) == 0:
                M = np.zeros((self.dim(d + 1), self.dim(d)), dtype=np.int64)
            else:
                M = self._nf[d + 1][:, self._shift_columns(d, j)]
            self._mult_cache[key] = M
        return self._mult_cache[key]

    def linear_matrix(self, coefficients: Sequence[int], d: int) -> np.ndarray:
        M = np.zeros((self.dim(d + 1), self.dim(d)), dtype=np.int64)
        for j, a in enumerate(coefficients):
            if a % self.p:
                M = (M + (a % self.p) * self.variable_matrix(j, d)) % self.p
        return M

    def socle_dimensions(self) -> list[int]:
        return socle_dimensions(self)


def make_artinian_algebra(gb: GroebnerBasis) -> ArtinianAlgebra:
    return ArtinianAlgebra(gb)


def socle_dimensions(A: ArtinianAlgebra) -> list[int]:
    """Per-degree dimension of the elements killed by every variable."""
    dims = []
    for i in range(A.socle_degree + 1):
        if A.dim(i + 1) == 0 or A.n_vars == 0:
            dims.append(A.dim(i))
            continue
        stacked = np.vstack([A.variable_matrix(j, i) for j in range(A.n_vars)])
        dims.append(A.dim(i) - rank(Matrix(stacked, A.p)))
    return dims
