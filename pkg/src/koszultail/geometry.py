"""Finite point sets in P^n, their vanishing ideals and Artinian reductions."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .exactla import DEFAULT_PRIME, Matrix, extend_basis, kernel_matrix, rref
from .groebner import ArtinianAlgebra, GroebnerBasis, buchberger
from .polyring import (
    LinearForm,
    Polynomial,
    Substitution,
    monomial_basis,
    monomial_index,
)


class GenericityError(RuntimeError):
    """Random sampling failed to reach a generic configuration."""


class SamplingError(RuntimeError):
    pass


class ConstructionError(RuntimeError):
    pass


def normalize_point(coords: Sequence[int], p: int) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    c = [int(x) % p for x in coords]
    for x in c:
        if x:
            s = pow(x, -1, p)
            return tuple(y * s % p for y in c)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class PointSet:
    ambient_dim: int
    points: tuple[tuple[int, ...], ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        pts = []
        for pt in self.points:
            if len(pt) != self.ambient_dim + 1:
                raise ValueError(
                    f"point {tuple(pt)} has {len(pt)} coordinates, expected {self.ambient_dim + 1}"
                )
            pts.append(normalize_point(pt, self.p))
        if len(set(pts)) != len(pts):
            raise ValueError("points are not pairwise distinct")
        object.__setattr__(self, "points", tuple(pts))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> "PointSet":
        """Build from a coordinate matrix whose columns are the points."""
        cols = list(zip(*columns))
        return cls(len(columns) - 1, tuple(cols), p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        try:
            return normalize_point(pt, self.p) in set(self.points)
        except ValueError:
            return False

    @property
    def n_vars(self) -> int:
        return self.ambient_dim + 1

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.ambient_dim, self.points + other.points, self.p)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self), self.n_vars)


def evaluation_matrix(X: PointSet, d: int) -> Matrix:
    """Rows are points, columns are degree-``d`` monomials (grevlex descending)."""
    p = X.p
    monos = np.array(monomial_basis(X.n_vars, d), dtype=np.int64).reshape(-1, X.n_vars)
    P = X.as_array()
    powers = np.ones((d + 1,) + P.shape, dtype=np.int64)
    for e in range(1, d + 1):
        powers[e] = powers[e - 1] * P % p
    out = np.ones((len(X), len(monos)), dtype=np.int64)
    for v in range(X.n_vars):
        out = out * powers[monos[:, v], :, v].T % p
    return Matrix(out, p)


def multiply_by_variables(rows: np.ndarray, n_vars: int, d: int, p: int) -> np.ndarray:
    """Stack ``x_j * g`` for every row ``g`` (degree ``d``) and every variable ``x_j``."""
    src = monomial_basis(n_vars, d)
    dst = monomial_index(n_vars, d + 1)
    width = len(dst)
    blocks = []
    for j in range(n_vars):
        cols = [dst[m[:j] + (m[j] + 1,) + m[j + 1:]] for m in src]
        block = np.zeros((rows.shape[0], width), dtype=np.int64)
        block[:, cols] = rows
        blocks.append(block)
    if not blocks:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(blocks) % p


@dataclass
class GradedIdealSlices:
    """Degree-by-degree bases of a homogeneous ideal plus minimal generators.

    ``slices[d]`` holds a basis of ``I_d`` as rows over ``monomial_basis(n_vars, d)``
    in reduced echelon form.
    """

    n_vars: int
    p: int
    slices: dict[int, np.ndarray]
    generators: list[Polynomial]
    hilbert: list[int]
    regularity_index: int

    def dim(self, d: int) -> int:
        if d in self.slices:
            return self.slices[d].shape[0]
        raise KeyError(f"degree {d} was not computed")

    def polynomials(self, d: int) -> list[Polynomial]:
        return [Polynomial.from_vector(r, self.n_vars, d, self.p) for r in self.slices[d]]

    def generator_degrees(self) -> list[int]:
        return [g.degree for g in self.generators]


def vanishing_ideal(X: PointSet) -> GradedIdealSlices:
    """Interpolate ``I_X`` from kernels of evaluation matrices.

    Kernels are computed until the Hilbert function reaches ``|X|`` at some
    degree ``r``; generators live in degrees ``<= r + 1``, and one further
    degree is computed to confirm that nothing new appears there.
    """
    if len(X) == 0:
        raise ValueError("empty point set")
    n_vars, p = X.n_vars, X.p
    slices: dict[int, np.ndarray] = {}
    gens: list[Polynomial] = []
    hilbert: list[int] = []
    r = None
    d = 0
    while True:
        E = evaluation_matrix(X, d)
        K, _ = rref(kernel_matrix(E), p)
        hilbert.append(E.rank())
        if d > 0:
            products = multiply_by_variables(slices[d - 1], n_vars, d - 1, p)
            new = extend_basis(products, K, p, width=K.shape[1])
        else:
            new = list(K)
        slices[d] = K
        if r is not None and d == r + 2:
            if new:
                raise AssertionError(f"new generators in degree {d}, past the regularity bound")
            break
        gens.extend(Polynomial.from_vector(v, n_vars, d, p) for v in new)
        if r is None and hilbert[-1] == len(X):
            r = d
        d += 1
    return GradedIdealSlices(n_vars, p, slices, gens, hilbert, r)


@dataclass
class Reduction:
    """The Artinian reduction of a point set together with how it was made."""

    points: PointSet
    ideal: GradedIdealSlices
    form: LinearForm
    variable: int
    substitution: Substitution
    algebra: ArtinianAlgebra

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.substitution(f)


def _first_nonzero(coeffs: Sequence[int]) -> int:
    return next(i for i, a in enumerate(coeffs) if a)


def reduce_points(X: PointSet, seed=0, ideal: GradedIdealSlices | None = None,
                  max_resamples: int = 100) -> Reduction:
    rng = np.random.default_rng(seed)
    for _ in range(max_resamples):
        L = LinearForm.random(X.n_vars, rng, X.p)
        if all(L(pt) for pt in X):
            break
    else:
        raise GenericityError(f"no linear form missing all {len(X)} points after {max_resamples} tries")
    if ideal is None:
        ideal = vanishing_ideal(X)
    k = _first_nonzero(L.coefficients)
    sub = Substitution(L, k)
    gb = buchberger([sub(g) for g in ideal.generators], n_vars=X.n_vars - 1, p=X.p)
    return Reduction(X, ideal, L, k, sub, ArtinianAlgebra(gb))


def artinian_reduction(X: PointSet, seed=0) -> ArtinianAlgebra:
    return reduce_points(X, seed).algebra


def further_quotient(A: ArtinianAlgebra, seed=0) -> ArtinianAlgebra:
    """Quotient by one more random linear form, dropping a variable."""
    if A.n_vars < 1:
        raise ValueError("no variable left to eliminate")
    rng = np.random.default_rng(seed)
    L = LinearForm.random(A.n_vars, rng, A.p)
    sub = Substitution(L, _first_nonzero(L.coefficients))
    gb = buchberger([sub(g) for g in A.gb.generators], n_vars=A.n_vars - 1, p=A.p)
    return ArtinianAlgebra(gb)


def sample_point_on_hypersurface(f: Polynomial, seed=0, max_tries: int = 100) -> tuple[int, ...]:
    """A point of V(f): random coordinates except one, which is scanned over GF(p)."""
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("need a nonzero homogeneous polynomial")
    rng = np.random.default_rng(seed)
    p, n = f.p, f.n_vars
    free = [i for i in range(n) if any(m[i] for m in f.coeffs)]
    if not free:
        raise SamplingError("constant polynomial has no zeros")
    t = np.arange(p, dtype=np.int64)
    for _ in range(max_tries):
        k = free[int(rng.integers(len(free)))]
        pt = [int(x) for x in rng.integers(0, p, size=n)]
        univariate = [0] * (f.degree + 1)
        for m, c in f.coeffs.items():
            v = c
            for i, e in enumerate(m):
                if i != k and e:
                    v = v * pow(pt[i], e, p) % p
            univariate[m[k]] = (univariate[m[k]] + v) % p
        vals = np.zeros(p, dtype=np.int64)
        for c in reversed(univariate):
            vals = (vals * t + c) % p
        roots = np.flatnonzero(vals == 0)
        if roots.size == 0:
            continue
        pt[k] = int(roots[int(rng.integers(roots.size))])
        if any(pt):
            return normalize_point(pt, p)
    raise SamplingError(f"no point found on V({f}) after {max_tries} tries")


def random_points(count: int, ambient_dim: int, rng: np.random.Generator,
                  p: int = DEFAULT_PRIME, avoid: Iterable[tuple[int, ...]] = ()) -> list[tuple[int, ...]]:
    seen = set(avoid)
    out = []
    while len(out) < count:
        v = rng.integers(0, p, size=ambient_dim + 1)
        if not v.any():
            continue
        pt = normalize_point(v, p)
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def ideal_dim(X: PointSet, d: int) -> int:
    """``dim (I_X)_d`` from the rank of the evaluation matrix."""
    return comb(X.n_vars - 1 + d, d) - evaluation_matrix(X, d).rank()


@dataclass
class HypersurfaceConfiguration:
    """Points mostly on one hypersurface V(f), plus points off it."""

    ambient_dim: int
    hypersurface: Polynomial
    on_hypersurface: list[tuple[int, ...]]
    extra: list[tuple[int, ...]]
    off: list[tuple[int, ...]]
    p: int = DEFAULT_PRIME
    attempts: int = 1
    points: PointSet = field(init=False)

    def __post_init__(self) -> None:
        self.points = PointSet(self.ambient_dim, tuple(self.on_hypersurface + self.off + self.extra), self.p)


def _unique_hypersurface(n: int, d: int, rng: np.random.Generator, p: int):
    """``C(n+d, d) - 1`` random points and the degree-``d`` form through them, if unique."""
    pts = random_points(comb(n + d, d) - 1, n, rng, p)
    K = kernel_matrix(evaluation_matrix(PointSet(n, tuple(pts), p), d))
    if K.shape[0] != 1:
        return pts, None
    return pts, Polynomial.from_vector(K[0], n + 1, d, p).monic()


def _points_on(f: Polynomial, count: int, rng: np.random.Generator, avoid) -> list[tuple[int, ...]]:
    seen = set(avoid)
    out = []
    while len(out) < count:
        pt = sample_point_on_hypersurface(f, rng)
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def all_but_one_configuration(n: int, d: int, seed=0, p: int = DEFAULT_PRIME,
                              max_attempts: int = 20) -> HypersurfaceConfiguration:
    """All points but ``[1:0:...:0]`` on a unique degree-``d`` hypersurface.

    ``C(n+d, d) - 1`` random points fix ``f``; ``C(n+d, d+1) - n`` further
    points are sampled on ``V(f)``. Returned only once ``dim (I_X)_d = 0`` and
    ``dim (I_X)_{d+1} = n`` have been checked.
    """
    if n < 3 or d < 1:
        raise ValueError("need n >= 3 and d >= 1")
    rng = np.random.default_rng(seed)
    q = (1,) + (0,) * n
    m = comb(n + d, d + 1) - n
    for attempt in range(1, max_attempts + 1):
        pts, f = _unique_hypersurface(n, d, rng, p)
        if f is None or f(q) == 0 or q in pts:
            continue
        extra = _points_on(f, m, rng, avoid=pts + [q])
        cfg = HypersurfaceConfiguration(n, f, pts, extra, [q], p, attempt)
        if ideal_dim(cfg.points, d) == 0 and ideal_dim(cfg.points, d + 1) == n:
            return cfg
    raise ConstructionError(
        f"no generic configuration for (n={n}, d={d}) after {max_attempts} attempts; try another seed"
    )


def construct_all_but_one(n: int, d: int, seed=0, p: int = DEFAULT_PRIME) -> PointSet:
    return all_but_one_configuration(n, d, seed, p).points


def line_configuration(n: int = 4, d: int = 3, off_count: int = 5, seed=0,
                       p: int = DEFAULT_PRIME, max_attempts: int = 20) -> HypersurfaceConfiguration:
    """Points on a unique hypersurface plus ``off_count`` points on a line missing it.

    With the defaults this is a 70-point set in P^4: 34 points fixing a
    cubic, 31 more on it, and 5 on a random line off the cubic.
    """
    rng = np.random.default_rng(seed)
    m = comb(n + d, d + 1) - n
    for attempt in range(1, max_attempts + 1):
        pts, f = _unique_hypersurface(n, d, rng, p)
        if f is None:
            continue
        extra = _points_on(f, m, rng, avoid=pts)
        a, b = random_points(2, n, rng, p)
        line = []
        seen = set(pts + extra)
        tries = 0
        while len(line) < off_count and tries < 50 * off_count:
            tries += 1
            s, t = (int(x) for x in rng.integers(0, p, size=2))
            v = [(s * x + t * y) % p for x, y in zip(a, b)]
            if not any(v):
                continue
            pt = normalize_point(v, p)
            if pt in seen or f(pt) == 0:
                continue
            seen.add(pt)
            line.append(pt)
        if len(line) < off_count:
            continue
        return HypersurfaceConfiguration(n, f, pts, extra, line, p, attempt)
    raise ConstructionError(f"no line configuration after {max_attempts} attempts")
