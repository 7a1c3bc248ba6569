"""Dense linear algebra over a prime field GF(p).

Matrices are numpy ``int64`` arrays with entries reduced into ``[0, p)``.
With ``p < 2**31`` every product of two reduced entries fits in int64, so
elimination never needs object arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = 32003


class PreconditionError(ValueError):
    """An operation was called with arguments violating its contract."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p). Elements are plain ints in ``[0, p)``."""

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p >= 2**31:
            raise ValueError("modulus must be below 2**31 for int64 elimination")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        return int(rng.integers(lo, self.p))


def inv(a: int, p: int = DEFAULT_PRIME) -> int:
    return PrimeField(p).inv(a)


@dataclass(frozen=True, eq=False)
class Matrix:
    """Immutable dense matrix over GF(p)."""

    entries: np.ndarray
    p: int = DEFAULT_PRIME
    _rref: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        a = a % self.p
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> "Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> "Matrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int, p: int = DEFAULT_PRIME) -> "Matrix":
        if len(rows) == 0:
            return cls.zeros(0, cols, p)
        return cls(np.array(rows, dtype=np.int64).reshape(len(rows), cols), p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.entries.T.copy(), self.p)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.p != other.p:
            raise ValueError("field mismatch")
        return Matrix(matmul(self.entries, other.entries, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.p, self.entries.shape, self.entries.tobytes()))

    def is_zero(self) -> bool:
        return not self.entries.any()

    def rref(self) -> tuple[np.ndarray, tuple[int, ...]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        if self._rref is None:
            object.__setattr__(self, "_rref", rref(self.entries, self.p))
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[np.ndarray]:
        return kernel_basis(self)

    def apply(self, v: Sequence[int]) -> np.ndarray:
        return matmul(self.entries, np.asarray(v, dtype=np.int64).reshape(-1, 1), self.p).ravel()


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p without int64 overflow in the accumulation."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # each partial product < p**2 < 2**62; sum in chunks that cannot overflow
    chunk = max(1, (2**63 - 1) // ((p - 1) ** 2 + 1) - 1)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, a.shape[1], chunk):
        out = (out + a[:, start:start + chunk] @ b[start:start + chunk, :]) % p
    return out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Gauss-Jordan elimination over GF(p) with first-nonzero pivoting.

    Returns the nonzero rows of the reduced row echelon form together with
    the pivot column indices. Deterministic: no pivot search by magnitude.
    """
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


def _as_matrix(M: Matrix | np.ndarray | Sequence[Sequence[int]], p: int | None) -> Matrix:
    if isinstance(M, Matrix):
        return M
    return Matrix(np.asarray(M, dtype=np.int64), DEFAULT_PRIME if p is None else p)


def rank(M: Matrix | np.ndarray, p: int | None = None) -> int:
    return _as_matrix(M, p).rank()


def kernel_basis(M: Matrix | np.ndarray, p: int | None = None) -> list[np.ndarray]:
    """Canonical kernel basis read off the reduced row echelon form.

    One vector per free column ``f``: it has a 1 in position ``f``, zeros in
    the other free positions, and ``-R[k, f]`` in pivot position ``k``.
    """
    M = _as_matrix(M, p)
    R, pivots = M.rref()
    q = M.p
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = np.zeros(M.cols, dtype=np.int64)
        v[f] = 1
        for k, c in enumerate(pivots):
            v[c] = (-R[k, f]) % q
        basis.append(v)
    return basis


def kernel_matrix(M: Matrix | np.ndarray, p: int | None = None) -> np.ndarray:
    """Kernel basis stacked as rows; shape ``(nullity, cols)``."""
    M = _as_matrix(M, p)
    vs = kernel_basis(M)
    if not vs:
        return np.zeros((0, M.cols), dtype=np.int64)
    return np.vstack(vs)


def _stack(vectors: Iterable[Sequence[int]] | np.ndarray, width: int | None) -> np.ndarray:
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return vectors.astype(np.int64)
    vs = [np.asarray(v, dtype=np.int64) for v in vectors]
    if not vs:
        if width is None:
            raise ValueError("cannot infer vector length from an empty list")
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(vs)


def extend_basis(
    inside: Iterable[Sequence[int]] | np.ndarray,
    ambient: Iterable[Sequence[int]] | np.ndarray,
    p: int = DEFAULT_PRIME,
    width: int | None = None,
) -> list[np.ndarray]:
    """Vectors completing a basis of ``span(inside)`` to one of ``span(ambient)``.

    The complement is returned in reduced echelon form relative to the
    pivots of ``inside``, so the answer depends only on the two spans.
    """
    amb = _stack(ambient, width) % p
    width = amb.shape[1] if width is None else width
    ins = _stack(inside, width) % p
    if ins.shape[1] != amb.shape[1]:
        raise ValueError("inside and ambient vectors have different lengths")
    R_in, piv_in = rref(ins, p)
    R_amb, _ = rref(amb, p)
    if len(piv_in):
        # clear the pivot columns of inside from every ambient vector
        resid = (R_amb - matmul(R_amb[:, list(piv_in)], R_in, p)) % p
    else:
        resid = R_amb
    both, _ = rref(np.vstack([R_in, R_amb]), p)
    if both.shape[0] != R_amb.shape[0]:
        raise PreconditionError("span(inside) is not contained in span(ambient)")
    R_new, _ = rref(resid, p)
    return [row.copy() for row in R_new]
