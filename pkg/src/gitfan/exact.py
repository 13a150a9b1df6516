"""Exact scalars and small dense linear algebra over the integers and rationals.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`GaussRat` adds the imaginary unit on top of them.
Vectors are plain tuples; integer vectors used as rays or normals are kept
primitive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction
IntVector = tuple  # tuple[int, ...]


@dataclass(frozen=True, slots=True)
class GaussRat:
    """Element ``re + im*i`` of the Gaussian rationals Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussRat.of(other)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussRat.of(other)
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRat.of(other) - self

    def __mul__(self, other):
        o = GaussRat.of(other)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def inverse(self) -> "GaussRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRat.of(other).inverse()

    def __rtruediv__(self, other):
        return GaussRat.of(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            o = GaussRat.of(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if self.im == 0:
            return f"GaussRat({self.re})"
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussRat(0, 1)
ZERO = GaussRat(0, 0)
ONE = GaussRat(1, 0)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Iterable) -> IntVector:
    """Scale a rational vector to the primitive integer vector on the same ray.

    The zero vector maps to itself.
    """
    v = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalize(v: IntVector) -> IntVector:
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        piv = m[rk]
        a = piv[c]
        for i in range(rk + 1, len(m)):
            b = m[i][c]
            if b:
                m[i] = [a * x - b * y for x, y in zip(m[i], piv)]
        rk += 1
        if rk == len(m):
            break
    return rk


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[IntVector]:
    """Primitive integer basis of ``{x : row . x = 0 for every row}``."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(primitive(x))
    return basis


def canonical_basis(vectors: Sequence[Sequence], ncols: int) -> tuple[IntVector, ...]:
    """Canonical primitive integer basis of a linear span (scaled RREF rows)."""
    red, _ = rref(vectors)
    return tuple(primitive(r) for r in red)


def project_out(v: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``."""
    if not basis:
        return tuple(Fraction(x) for x in v)
    k = len(basis)
    gram = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(b, v)) for b in basis]
    coef = solve(gram, rhs)
    out = [Fraction(x) for x in v]
    for c, b in zip(coef, basis):
        if c:
            out = [o - c * bi for o, bi in zip(out, b)]
    return tuple(out)


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the nonsingular square system ``a x = b`` over Q."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if len(pivots) != n or pivots[-1] == n:
        raise ZeroDivisionError("singular system")
    return [row[n] for row in red]
