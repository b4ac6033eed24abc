"""Exact arithmetic over real quadratic extensions Q(sqrt(d)).

A value is (p + q*sqrt(d)) / den with arbitrary-precision integers, kept
canonical so that equality is structural:

  * den > 0 and gcd(p, q, den) == 1,
  * d is squarefree (square factors of the radicand are folded into q),
  * rational values are stored with q == 0 and d == 0.

Floors, ceilings and comparisons use integer arithmetic only (isqrt), so
evaluations that land exactly on an integer never misround the way a
double-precision sqrt path can.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError

__all__ = [
    "QuadExt",
    "discriminant",
    "slope_r0",
    "field_arith",
    "floor_q",
    "ceil_q",
    "floor_mul_sqrt",
    "isqrt",
]


def _split_square(d):
    """Return (s, d0) with d == s*s*d0 and d0 squarefree.

    Trial division; intended for the small radicands that arise as
    discriminants of small parameters, not for cryptographic sizes.
    """
    s = 1
    while d % 4 == 0:
        d //= 4
        s *= 2
    f = 3
    while f * f <= d:
        ff = f * f
        while d % ff == 0:
            d //= ff
            s *= f
        f += 2
    return s, d


def floor_mul_sqrt(q, d):
    """floor(q * sqrt(d)) for integer q (any sign) and integer d >= 0."""
    if d < 0:
        raise DomainError(f"negative radicand {d}")
    if q >= 0:
        return isqrt(q * q * d)
    w = q * q * d
    r = isqrt(w)
    return -r if r * r == w else -r - 1


class QuadExt:
    """One element of Q(sqrt(d)), exact and canonical."""

    __slots__ = ("p", "q", "den", "d")

    def __init__(self, p, q=0, den=1, d=0):
        if den == 0:
            raise DomainError("zero denominator")
        if d < 0:
            raise DomainError(f"negative radicand {d} (complex values unsupported)")
        if den < 0:
            p, q, den = -p, -q, -den
        if q == 0 or d == 0:
            q, d = 0, 0
        else:
            s, d = _split_square(d)
            q *= s
            if d == 1:
                p, q, d = p + q, 0, 0
        g = gcd(gcd(abs(p), abs(q)), den)
        if g > 1:
            p, q, den = p // g, q // g, den // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def from_fraction(cls, value):
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, 0)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return QuadExt(other)
        if isinstance(other, Fraction):
            return QuadExt(other.numerator, 0, other.denominator, 0)
        return NotImplemented

    def _joint_radicand(self, other):
        # rational values (d == 0) live in every field
        if self.d == 0 or other.d == 0 or self.d == other.d:
            return max(self.d, other.d)
        raise DomainError(
            f"mixed radicands {self.d} and {other.d}; same-field operands required"
        )

    # -- ring / field operations ------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._joint_radicand(other)
        return QuadExt(
            self.p * other.den + other.p * self.den,
            self.q * other.den + other.q * self.den,
            self.den * other.den,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.den, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._joint_radicand(other)
        return QuadExt(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            self.den * other.den,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._joint_radicand(other)
        # 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - q^2 d); the norm is
        # nonzero for squarefree d unless the value itself is zero
        norm = other.p * other.p - other.q * other.q * d
        if norm == 0:
            raise ZeroDivisionError("division by zero field element")
        return QuadExt(
            (self.p * other.p - self.q * other.q * d) * other.den,
            (self.q * other.p - self.p * other.q) * other.den,
            self.den * norm,
            d,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def conjugate(self):
        """Galois conjugate: sqrt(d) -> -sqrt(d)."""
        return QuadExt(self.p, -self.q, self.den, self.d)

    # -- order -------------------------------------------------------------

    def _sign(self):
        """Sign of the real value, computed exactly."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        # compare p with -q*sqrt(d) by comparing squares on matched signs
        if p >= 0 and q > 0:
            return 1
        if p <= 0 and q < 0:
            return -1
        lhs, rhs = p * p, q * q * d
        if lhs == rhs:
            return 0
        bigger_p = lhs > rhs
        return 1 if bigger_p == (p > 0) else -1

    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other)._sign()

    def __eq__(self, other):
        # canonical form is unique, so equality is structural; this also
        # makes values from different fields compare unequal instead of
        # raising the way ordering does
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.p, self.q, self.den, self.d) == (
            other.p,
            other.q,
            other.den,
            other.d,
        )

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        # rational values must hash like the numbers they equal
        if self.d == 0:
            return hash(Fraction(self.p, self.den))
        return hash((self.p, self.q, self.den, self.d))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    # -- rounding / conversion ----------------------------------------------

    def __floor__(self):
        # floor((p + q*sqrt(d))/den) = floor((p + floor(q*sqrt(d)))/den)
        # because den > 0 and floor(t/den) = floor(floor(t)/den)
        return (self.p + floor_mul_sqrt(self.q, self.d)) // self.den

    def __ceil__(self):
        return -((-self).__floor__())

    def is_rational(self):
        return self.d == 0

    def as_fraction(self):
        if self.d != 0:
            raise DomainError(f"{self} is irrational")
        return Fraction(self.p, self.den)

    def to_decimal(self, digits=50):
        """Decimal approximation, correct to `digits` significant digits."""
        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            val = decimal.Decimal(self.p)
            if self.q:
                val += decimal.Decimal(self.q) * decimal.Decimal(self.d).sqrt()
            val /= decimal.Decimal(self.den)
            ctx.prec = digits
            return +val

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.den

    def __repr__(self):
        return f"QuadExt({self.p}, {self.q}, {self.den}, {self.d})"

    def __str__(self):
        if self.q == 0:
            body = str(self.p)
        else:
            root = f"{abs(self.q)}*" if abs(self.q) != 1 else ""
            root += f"sqrt({self.d})"
            if self.p == 0:
                body = root if self.q > 0 else f"-{root}"
            else:
                sign = "+" if self.q > 0 else "-"
                body = f"{self.p} {sign} {root}"
        if self.den == 1:
            return body
        return f"({body})/{self.den}"


def discriminant(y, z):
    """z**2 + 4*(y - z), the discriminant of t**2 - z*t - (y - z)."""
    return z * z + 4 * (y - z)


def slope_r0(y, z):
    """Dominant root (z + sqrt(z**2 + 4(y-z)))/2 of t**2 = z*t + (y - z).

    This is the growth rate a(n)/n of the j=0 sequence with hit increment
    y and miss increment z (y > z > 0).  DomainError if the discriminant
    is negative.
    """
    disc = discriminant(y, z)
    if disc < 0:
        raise DomainError(f"negative discriminant {disc} for y={y}, z={z}")
    return QuadExt(z, 1, 2, disc)


def field_arith(op, lhs, rhs):
    """Dispatch helper: op in {'add', 'sub', 'mul', 'div'}."""
    try:
        fn = {
            "add": QuadExt.__add__,
            "sub": QuadExt.__sub__,
            "mul": QuadExt.__mul__,
            "div": QuadExt.__truediv__,
        }[op]
    except KeyError:
        raise DomainError(f"unknown operation {op!r}") from None
    out = fn(lhs, rhs)
    if out is NotImplemented:
        raise DomainError(f"cannot {op} {lhs!r} and {rhs!r}")
    return out


def floor_q(value):
    """Exact floor of a QuadExt (or anything with __floor__)."""
    return math.floor(value)


def ceil_q(value):
    """Exact ceiling of a QuadExt (or anything with __ceil__)."""
    return math.ceil(value)
