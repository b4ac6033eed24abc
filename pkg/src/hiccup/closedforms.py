"""Closed forms for hiccup sequences.

Four families:

  * Beatty-style floors a(n) = floor(n*r - c) over Q(sqrt(d)), covering the
    two nondegenerate increment families (y = z + 1 and z = y + 1),
  * integer-only formulas for the three zero-discriminant lattice
    sequences (isqrt only, no field arithmetic),
  * the meta-Fibonacci family b_k and the tree leaf-count identity,
  * binary morphic fixed points, whose letter positions reproduce the
    x = 1, y = 2, z = 4 sequence for the canonical substitution.

Every evaluator is exact; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import isqrt

from . import engine
from .errors import DomainError, IdentityViolation, RangeError
from .qfield import QuadExt, floor_mul_sqrt, slope_r0

__all__ = [
    "BeattyForm",
    "slope_a",
    "slope_b",
    "beatty_form_a",
    "beatty_form_b",
    "eval_beatty",
    "ramsey_form",
    "thumbtack_form",
    "hex_form",
    "metafib_b",
    "leaf_count",
    "MorphismRules",
    "morphic_fixed_point",
    "positions_of",
]


# ---------------------------------------------------------------------------
# Beatty-style forms


@dataclass(frozen=True)
class BeattyForm:
    """a(n) = floor(n*slope - offset), valid for n >= start_index."""

    slope: QuadExt
    offset: QuadExt
    start_index: int = 1

    def __post_init__(self):
        if self.slope.d == 0:
            raise DomainError("slope must be irrational")
        if self.offset.d not in (0, self.slope.d):
            raise DomainError(
                f"offset radicand {self.offset.d} differs from slope radicand {self.slope.d}"
            )

    @cached_property
    def _ints(self):
        # n*slope - offset over the common denominator, as plain integers
        s, o = self.slope, self.offset
        return (s.p * o.den, s.q * o.den, o.p * s.den, o.q * s.den,
                s.den * o.den, s.d)


def eval_beatty(form: BeattyForm, n: int) -> int:
    """Exact floor(n*slope - offset); RangeError below the form's start."""
    if n < form.start_index:
        raise RangeError(f"n={n} below start index {form.start_index}")
    sp, sq, op, oq, den, d = form._ints
    p = sp * n - op
    q = sq * n - oq
    return (p + floor_mul_sqrt(q, d)) // den


def slope_a(Z: int) -> QuadExt:
    """(Z + sqrt(Z*Z + 4))/2, the slope for the y = Z + 1, z = Z family."""
    _check_Z(Z)
    return slope_r0(Z + 1, Z)


def slope_b(Z: int) -> QuadExt:
    """(Z + 1 + sqrt(Z*Z + 2Z - 3))/2, the slope for y = Z, z = Z + 1."""
    _check_Z(Z)
    return slope_r0(Z, Z + 1)


def _check_Z(Z):
    if Z < 2:
        raise DomainError(f"Z must be >= 2, got {Z}")


def _check_x(x):
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")


def beatty_form_a(x: int, Z: int) -> BeattyForm:
    """Closed form for S(x, Z+1, Z): hit increment one above miss.

    The offset depends on where x sits relative to Z:

      x = 0, Z = 2   offset (3 + 4*sqrt(2)) / (2 + sqrt(2)), start n = 2
      x = 0, Z >= 3  anchor c = Z + 1
      x = 1          anchor c = Z
      x >= 2         anchor c = Z - x

    with offset (c*r - 1)/(r + 1) for anchor c and slope r.  Valid through
    x <= Z + 2; larger x leaves the regime the form describes.
    """
    _check_x(x)
    _check_Z(Z)
    r = slope_a(Z)
    if x == 0 and Z == 2:
        offset = (QuadExt(3) + QuadExt(0, 4, 1, 2)) / (QuadExt(2) + QuadExt(0, 1, 1, 2))
        return BeattyForm(slope=r, offset=offset, start_index=2)
    if x == 0:
        c = Z + 1
    elif x == 1:
        c = Z
    else:
        c = Z - x
    offset = (r * c - 1) / (r + 1)
    return BeattyForm(slope=r, offset=offset, start_index=1)


def beatty_form_b(x: int, Z: int) -> BeattyForm:
    """Closed form for S(x, Z, Z+1): miss increment one above hit.

      x = 0   anchor c = Z - 1
      x = 1   anchor c = Z - 2, start n = 2
      x >= 2  anchor c = Z - x

    with offset (c*r + 1)/(r - 1) for anchor c and slope r.  Valid through
    x <= Z + 1.  At x = Z + 1 the offset collapses to -1, i.e. the form is
    the plain ceiling a(n) = ceil(n*r).
    """
    _check_x(x)
    _check_Z(Z)
    r = slope_b(Z)
    start = 1
    if x == 0:
        c = Z - 1
    elif x == 1:
        c = Z - 2
        start = 2
    else:
        c = Z - x
    offset = (r * c + 1) / (r - 1)
    return BeattyForm(slope=r, offset=offset, start_index=start)


# ---------------------------------------------------------------------------
# Zero-discriminant lattice forms (integer arithmetic only)


def ramsey_form(n: int) -> int:
    """S(3, 1, 2)(n) = n + (isqrt(8n - 7) + 3) // 2."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return n + (isqrt(8 * n - 7) + 3) // 2


def thumbtack_form(n: int) -> int:
    """S(4, 1, 2)(n) = n + isqrt(4n - 3) + 2."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return n + isqrt(4 * n - 3) + 2


def _hex_layer(n):
    """Smallest m >= 1 with 3m(m+1)/2 >= n."""
    # invert the cumulative count 3m(m+1)/2; adjust for isqrt truncation
    m = (isqrt(24 * n + 9) - 3) // 6
    if m < 1:
        m = 1
    while 3 * m * (m + 1) // 2 < n:
        m += 1
    while m > 1 and 3 * (m - 1) * m // 2 >= n:
        m -= 1
    return m


def hex_form(n: int) -> int:
    """S(5, 1, 2)(n) via the hexagonal-layer decomposition."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    m = _hex_layer(n)
    pos = n - 1 - 3 * m * (m - 1) // 2
    return n + 3 * m + 1 + pos // m


# ---------------------------------------------------------------------------
# Meta-Fibonacci family and leaf counts


@lru_cache(maxsize=16)
def _metafib_trace(k, horizon):
    return engine.generate(engine.SequenceParams(x=k + 1, y=1, z=k + 1), horizon)


def metafib_b(k: int, n: int) -> int:
    """b_k(n) = S(k+1, 1, k+1)(n) for k >= 2."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    # grow cached horizons geometrically so repeated point queries stay O(1)
    horizon = 1 << max(10, n.bit_length())
    return _metafib_trace(k, horizon).a(n)


def leaf_count(k: int, n: int) -> int:
    """Leaves in the n-node k-ary labeled tree: (b_k(n) - n) / k, exactly.

    The difference is asserted to be divisible by k; a remainder would
    falsify the identity the formula rests on.
    """
    b = metafib_b(k, n)
    quot, rem = divmod(b - n, k)
    if rem:
        raise IdentityViolation(
            f"b_{k}({n}) - {n} = {b - n} is not divisible by {k}"
        )
    return quot


# ---------------------------------------------------------------------------
# Morphic fixed points


@dataclass(frozen=True)
class MorphismRules:
    """Binary substitution 0 -> image0, 1 -> image1 over the alphabet {0,1}."""

    image0: str
    image1: str

    def __post_init__(self):
        for name, img in (("image0", self.image0), ("image1", self.image1)):
            if not img:
                raise DomainError(f"{name} must be nonempty")
            bad = set(img) - {"0", "1"}
            if bad:
                raise DomainError(f"{name} contains letters outside {{0,1}}: {sorted(bad)}")
        if self.image0[0] != "0":
            raise DomainError("image0 must start with '0' for a fixed point at 0")


def morphic_fixed_point(rules: MorphismRules, n_letters: int) -> str:
    """First n_letters letters of the fixed point starting at 0.

    Built lazily: expand the image of each already-produced letter in
    order.  The word is a fixed point because image0 starts with 0, so
    each expansion pass extends rather than rewrites the prefix.  If
    expansion stops growing before reaching the target length the
    morphism has no infinite fixed point and that is a DomainError.
    """
    if n_letters < 1:
        raise DomainError(f"n_letters must be >= 1, got {n_letters}")
    images = {"0": rules.image0, "1": rules.image1}
    word = list(rules.image0)
    i = 1
    while len(word) < n_letters:
        if i >= len(word):
            raise DomainError("morphism does not generate an infinite fixed point")
        word.extend(images[word[i]])
        i += 1
    return "".join(word[:n_letters])


def positions_of(word: str, letter) -> list:
    """1-based positions of the given letter ('0' or '1') in the word."""
    letter = str(letter)
    if letter not in ("0", "1"):
        raise DomainError(f"letter must be 0 or 1, got {letter!r}")
    return [i + 1 for i, ch in enumerate(word) if ch == letter]
