"""Exact arithmetic in real quadratic extensions Q(sqrt(D)).

Accumulation rays of wild rank-two subcategories have coordinates that are
quadratic irrationals.  Storing them as ``u + v*sqrt(D)`` with rational
u, v and squarefree D keeps ray identity and tangency tests exact; floats
are derived views.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def squarefree_split(n: int) -> tuple[int, int]:
    """n = k*k*d with d squarefree (n > 0); returns (k, d)."""
    if n <= 0:
        raise ValueError("positive integer required")
    k = 1
    d = n
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            k *= f
        f += 1
    return k, d


@dataclass(frozen=True)
class QuadExt:
    """u + v*sqrt(root) with Fraction u, v and squarefree root; root == 0
    marks a plain rational (v forced to 0)."""

    u: Fraction
    v: Fraction
    root: int

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.root == 1:
            object.__setattr__(self, "u", self.u + self.v)
            object.__setattr__(self, "v", Fraction(0))
            object.__setattr__(self, "root", 0)
        if self.v == 0 and self.root != 0:
            object.__setattr__(self, "root", 0)
        if self.v != 0 and self.root <= 0:
            raise ValueError("irrational part needs a positive root")

    @staticmethod
    def of(x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return QuadExt(Fraction(x), Fraction(0), 0)

    def _join(self, other) -> int:
        if self.root and other.root and self.root != other.root:
            raise ValueError("mixed quadratic fields")
        return self.root or other.root

    def __add__(self, other):
        other = QuadExt.of(other)
        d = self._join(other)
        return QuadExt(self.u + other.u, self.v + other.v, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.root)

    def __sub__(self, other):
        return self + (-QuadExt.of(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QuadExt.of(other)
        d = self._join(other)
        return QuadExt(
            self.u * other.u + self.v * other.v * d,
            self.u * other.v + self.v * other.u,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QuadExt.of(other)
        d = self._join(other)
        norm = other.u * other.u - other.v * other.v * d
        if norm == 0:
            raise ZeroDivisionError
        return self * QuadExt(other.u / norm, -other.v / norm, other.root)

    def __rtruediv__(self, other):
        return QuadExt.of(other) / self

    def is_rational(self) -> bool:
        return self.v == 0

    def sign(self) -> int:
        if self.v == 0:
            return -1 if self.u < 0 else (0 if self.u == 0 else 1)
        if self.u == 0 or (self.u > 0) == (self.v > 0):
            return 1 if self.v > 0 else -1
        lhs = self.u * self.u
        rhs = self.v * self.v * self.root
        if self.u > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.u, self.v, self.root) == (other.u, other.v, other.root)
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.root))

    def __float__(self):
        if self.v == 0:
            return float(self.u)
        return float(self.u) + float(self.v) * math.sqrt(self.root)

    def __repr__(self):
        if self.v == 0:
            return f"{self.u}"
        return f"({self.u} + {self.v}*sqrt({self.root}))"


def sqrt_exact(x) -> QuadExt:
    """Exact square root of a nonnegative rational as a QuadExt."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return QuadExt.of(0)
    kn, dn = squarefree_split(x.numerator)
    kd, dd = squarefree_split(x.denominator)
    g = gcd(dn, dd)
    d = (dn // g) * (dd // g)
    scale = Fraction(kn * g, kd * dd)
    if d == 1:
        return QuadExt.of(scale)
    return QuadExt(Fraction(0), scale, d)


def quadratic_roots(a, b, c) -> tuple:
    """Roots of a*x^2 + b*x + c (rational coefficients, a != 0), exact.

    Returns (smaller, larger); entries are Fraction-valued QuadExt when the
    discriminant is a perfect square.  Raises ValueError if complex.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError("complex roots")
    s = sqrt_exact(disc)
    r1 = (QuadExt.of(-b) - s) / (2 * a)
    r2 = (QuadExt.of(-b) + s) / (2 * a)
    if a < 0:
        r1, r2 = r2, r1
    return r1, r2
