"""Sparse homogeneous polynomials over GF(p) in the grevlex order.

A monomial is a tuple of exponents. A :class:`Polynomial` owns a dict from
monomials to nonzero residues; ``terms`` exposes them sorted descending in
grevlex.
"""

from __future__ import annotations

import re
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .exactla import DEFAULT_PRIME

Monomial = tuple[int, ...]


class ArityError(ValueError):
    """Objects living in polynomial rings with different numbers of variables."""


class EliminationError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        loc = "" if position is None else f" at column {position + 1}"
        super().__init__(f"{message}{loc}" + (f": {text!r}" if text else ""))


def grevlex_key(m: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def grevlex_compare(a: Monomial, b: Monomial) -> int:
    """Return 1 if ``a > b``, -1 if ``a < b`` and 0 if equal, in grevlex."""
    if len(a) != len(b):
        raise ArityError(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


@lru_cache(maxsize=None)
def monomial_basis(n_vars: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``n_vars`` variables, grevlex descending."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if n_vars == 0:
        return ((),) if d == 0 else ()
    monos = []
    for combo in combinations_with_replacement(range(n_vars), d):
        e = [0] * n_vars
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    monos.sort(key=grevlex_key, reverse=True)
    return tuple(monos)


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomial_basis(n_vars, d))}


def count_monomials(n_vars: int, d: int) -> int:
    if n_vars == 0:
        return int(d == 0)
    return comb(n_vars - 1 + d, d)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial over GF(p)."""

    def __init__(self, n_vars: int, coeffs: Mapping[Monomial, int] | None = None,
                 p: int = DEFAULT_PRIME):
        self.n_vars = n_vars
        self.p = p
        clean: dict[Monomial, int] = {}
        for m, c in (coeffs or {}).items():
            if len(m) != n_vars:
                raise ArityError(f"monomial {m} in a ring with {n_vars} variables")
            c %= p
            if c:
                clean[tuple(m)] = c
        self._coeffs = clean

    @classmethod
    def _trusted(cls, n_vars: int, coeffs: dict[Monomial, int], p: int) -> "Polynomial":
        f = cls.__new__(cls)
        f.n_vars, f.p, f._coeffs = n_vars, p, coeffs
        return f

    @classmethod
    def zero(cls, n_vars: int, p: int = DEFAULT_PRIME) -> "Polynomial":
        return cls._trusted(n_vars, {}, p)

    @classmethod
    def constant(cls, c: int, n_vars: int, p: int = DEFAULT_PRIME) -> "Polynomial":
        return cls(n_vars, {(0,) * n_vars: c}, p)

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1, p: int = DEFAULT_PRIME) -> "Polynomial":
        return cls(len(m), {tuple(m): c}, p)

    @classmethod
    def variable(cls, i: int, n_vars: int, p: int = DEFAULT_PRIME) -> "Polynomial":
        e = [0] * n_vars
        e[i] = 1
        return cls._trusted(n_vars, {tuple(e): 1}, p)

    @classmethod
    def from_vector(cls, vec: Sequence[int], n_vars: int, d: int,
                    p: int = DEFAULT_PRIME) -> "Polynomial":
        """Polynomial with coordinates ``vec`` over ``monomial_basis(n_vars, d)``."""
        basis = monomial_basis(n_vars, d)
        if len(vec) != len(basis):
            raise ArityError(f"vector of length {len(vec)} for {len(basis)} monomials")
        return cls(n_vars, {m: int(c) for m, c in zip(basis, vec) if int(c) % p}, p)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[Monomial, int]:
        return self._coeffs

    @cached_property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return tuple(sorted(self._coeffs.items(), key=lambda t: grevlex_key(t[0]), reverse=True))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        return self.terms[0][1] if self._coeffs else 0

    @property
    def degree(self) -> int:
        if not self._coeffs:
            return -1
        return max(sum(m) for m in self._coeffs)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._coeffs}) <= 1

    def coefficient(self, m: Monomial) -> int:
        return self._coeffs.get(tuple(m), 0)

    def to_vector(self, d: int | None = None) -> list[int]:
        """Coordinates over ``monomial_basis(n_vars, d)`` (homogeneous only)."""
        if d is None:
            d = max(self.degree, 0)
        idx = monomial_index(self.n_vars, d)
        vec = [0] * len(idx)
        for m, c in self._coeffs.items():
            if sum(m) != d:
                raise ValueError(f"term {m} is not of degree {d}")
            vec[idx[m]] = c
        return vec

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.n_vars != other.n_vars:
            raise ArityError(f"rings with {self.n_vars} and {other.n_vars} variables")
        if self.p != other.p:
            raise ValueError(f"fields GF({self.p}) and GF({other.p})")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(other, self.n_vars, self.p)
        return other

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        self._check(other)
        out = dict(self._coeffs)
        p = self.p
        for m, c in other._coeffs.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._trusted(self.n_vars, out, p)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.p
        return Polynomial._trusted(self.n_vars, {m: p - c for m, c in self._coeffs.items()}, p)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def scale(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return Polynomial.zero(self.n_vars, self.p)
        p = self.p
        return Polynomial._trusted(self.n_vars, {m: v * c % p for m, v in self._coeffs.items()}, p)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(1, self.n_vars, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "Polynomial":
        if not self._coeffs:
            return self
        return self.scale(pow(self.leading_coefficient, -1, self.p))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n_vars, self.p)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.n_vars, self.p) == (other.n_vars, other.p) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n_vars, self.p, frozenset(self._coeffs.items())))

    def __call__(self, point: Sequence[int]) -> int:
        return evaluate(self, point)

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i}" for i in range(self.n_vars)]
        if not self._coeffs:
            return "0"
        half = self.p // 2
        out = []
        for m, c in self.terms:
            sign = "-" if c > half else "+"
            a = self.p - c if c > half else c
            factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
            body = "*".join(factors)
            if not body:
                body = str(a)
            elif a != 1:
                body = f"{a}*{body}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r}, n_vars={self.n_vars}, p={self.p})"


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    p = f.p
    out: dict[Monomial, int] = {}
    for m1, c1 in f._coeffs.items():
        for m2, c2 in g._coeffs.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = (out.get(m, 0) + c1 * c2) % p
    return Polynomial._trusted(f.n_vars, {m: c for m, c in out.items() if c}, p)


def evaluate(f: Polynomial, point: Sequence[int]) -> int:
    if len(point) != f.n_vars:
        raise ArityError(f"point of length {len(point)} for {f.n_vars} variables")
    p = f.p
    pt = [int(x) % p for x in point]
    total = 0
    for m, c in f._coeffs.items():
        v = c
        for x, e in zip(pt, m):
            if e:
                v = v * pow(x, e, p) % p
        total += v
    return total % p


class LinearForm:
    """A nonzero linear form ``sum a_i x_i``."""

    __slots__ = ("coefficients", "p")

    def __init__(self, coefficients: Sequence[int], p: int = DEFAULT_PRIME):
        coeffs = tuple(int(a) % p for a in coefficients)
        if not any(coeffs):
            raise ValueError("linear form is identically zero")
        self.coefficients = coeffs
        self.p = p

    @property
    def n_vars(self) -> int:
        return len(self.coefficients)

    def polynomial(self) -> Polynomial:
        n = self.n_vars
        coeffs = {}
        for i, a in enumerate(self.coefficients):
            e = [0] * n
            e[i] = 1
            coeffs[tuple(e)] = a
        return Polynomial(n, coeffs, self.p)

    def __call__(self, point: Sequence[int]) -> int:
        return sum(a * int(x) for a, x in zip(self.coefficients, point)) % self.p

    def __repr__(self) -> str:
        return f"LinearForm({list(self.coefficients)}, p={self.p})"

    @classmethod
    def random(cls, n_vars: int, rng, p: int = DEFAULT_PRIME) -> "LinearForm":
        while True:
            coeffs = [int(a) for a in rng.integers(0, p, size=n_vars)]
            if any(coeffs):
                return cls(coeffs, p)


class Substitution:
    """Eliminates ``x_k`` by the relation ``L = 0`` and re-indexes.

    ``x_k`` becomes ``-(1/a_k) sum_{i != k} a_i x_i``; the surviving variables
    keep their relative order. Powers of the substituted form are cached, so
    one instance should be reused for a whole ideal.
    """

    def __init__(self, L: LinearForm, k: int):
        a = L.coefficients
        p = L.p
        if not 0 <= k < len(a):
            raise EliminationError(f"variable index {k} out of range")
        if a[k] == 0:
            raise EliminationError(f"linear form has zero coefficient on variable {k}")
        self.L, self.k, self.p = L, k, p
        self.n_vars = len(a)
        m = self.n_vars - 1
        scale = (-pow(a[k], -1, p)) % p
        coeffs = {}
        for i, ai in enumerate(a):
            if i == k or ai == 0:
                continue
            j = i if i < k else i - 1
            e = [0] * m
            e[j] = 1
            coeffs[tuple(e)] = ai * scale % p
        self.image = Polynomial(m, coeffs, p)
        self._powers = [Polynomial.constant(1, m, p)]

    def _power(self, e: int) -> Polynomial:
        while len(self._powers) <= e:
            self._powers.append(self._powers[-1] * self.image)
        return self._powers[e]

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.n_vars != self.n_vars:
            raise ArityError(f"polynomial in {f.n_vars} variables, form in {self.n_vars}")
        k, p = self.k, self.p
        m = self.n_vars - 1
        out: dict[Monomial, int] = {}
        for mono, c in f.coeffs.items():
            rest = mono[:k] + mono[k + 1:]
            for pm, pc in self._power(mono[k]).coeffs.items():
                t = tuple(x + y for x, y in zip(rest, pm))
                out[t] = (out.get(t, 0) + c * pc) % p
        return Polynomial._trusted(m, {t: c for t, c in out.items() if c}, p)


def eliminate_variable(f: Polynomial, L: LinearForm, k: int) -> Polynomial:
    return Substitution(L, k)(f)


# -- text grammar -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


def default_names(n_vars: int, start: int = 0) -> list[str]:
    return [f"x{i}" for i in range(start, start + n_vars)]


def parse_polynomial(text: str, names: Sequence[str], p: int = DEFAULT_PRIME) -> Polynomial:
    """Parse a sum of signed terms such as ``x0*x2 - x1^2`` or ``3x1^2*x3``.

    A term is an optional integer coefficient, optionally followed by ``*``,
    then ``var`` or ``var^exp`` factors joined by ``*``. Whitespace is ignored.
    """
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise ParseError("unexpected character", text, pos)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    if not tokens:
        raise ParseError("empty polynomial", text)

    i = 0
    coeffs: dict[Monomial, int] = {}

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    first = True
    while i < len(tokens):
        sign = 1
        kind, val, at = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, at)
        first = False
        coeff = None
        expo = [0] * n
        kind, val, at = peek()
        if kind == "num":
            coeff = int(val)
            i += 1
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, at = peek()
                if kind != "var":
                    raise ParseError("expected a variable after '*'", text, at)
        saw_var = False
        while kind == "var":
            if val not in index:
                raise ParseError(f"unknown variable {val!r}", text, at)
            i += 1
            e = 1
            kind2, val2, at2 = peek()
            if kind2 == "op" and val2 == "^":
                i += 1
                kind3, val3, at3 = peek()
                if kind3 != "num":
                    raise ParseError("expected an exponent after '^'", text, at3)
                e = int(val3)
                i += 1
            expo[index[val]] += e
            saw_var = True
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, at = peek()
                if kind != "var":
                    raise ParseError("expected a variable after '*'", text, at)
            elif kind == "var":
                raise ParseError("factors must be joined by '*'", text, at)
        if coeff is None and not saw_var:
            raise ParseError("expected a term", text, at)
        m = tuple(expo)
        coeffs[m] = (coeffs.get(m, 0) + sign * (1 if coeff is None else coeff)) % p
        kind, val, at = peek()
        if kind is not None and not (kind == "op" and val in "+-"):
            raise ParseError(f"unexpected token {val!r}", text, at)
    return Polynomial(n, coeffs, p)
