"""Generator for self-referential "hiccup" sequences.

The rule: a(1) = x, and for k > 1

    a(k) = a(k-1) + y   if k - j appears among a(1), ..., a(k-1)   (a hit)
    a(k) = a(k-1) + z   otherwise                                  (a miss)

with all four parameters nonnegative integers.  Because increments are
nonnegative the stored values are nondecreasing, so membership of the
probe k - j can be decided by a read cursor that only ever moves forward:
amortized O(1) per term, O(n) per sequence.  The probe is taken literally;
k - j <= 0 is simply never a member.

A compiled kernel (hiccup._kernel) runs the same loop over int64 storage
when every value provably fits; otherwise a pure Python loop with
arbitrary-precision integers is used.  Both produce identical traces.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DomainError, RangeError

try:
    from . import _kernel
except ImportError:  # extension not built; pure path only
    _kernel = None

# headroom under 2**63 so intermediate sums cannot wrap in the kernel
_I64_CAP = 2 ** 62


def kernel_loaded():
    """True when the compiled generation kernel is available."""
    return _kernel is not None


@dataclass(frozen=True)
class SequenceParams:
    """Parameters (j, x, y, z); j defaults to 0, the plain hiccup rule."""

    x: int
    y: int
    z: int
    j: int = 0

    def __post_init__(self):
        for name in ("x", "y", "z", "j"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise DomainError(f"{name} must be nonnegative, got {value}")


@dataclass(frozen=True)
class SequenceTrace:
    """First n terms of one sequence plus the per-index hit flags.

    values holds a(1..n) (1-based indexing via .a()); hits[i] flags index
    k = i + 2, since index 1 is the seed and has no flag.
    """

    params: SequenceParams
    values: Sequence[int]
    hits: bytes

    def __len__(self):
        return len(self.values)

    def a(self, k):
        """a(k), 1-based."""
        if not 1 <= k <= len(self.values):
            raise RangeError(f"index {k} outside generated range 1..{len(self.values)}")
        return self.values[k - 1]

    def hit(self, k):
        """Whether index k (k >= 2) was a hit."""
        if not 2 <= k <= len(self.values):
            raise RangeError(f"index {k} outside flagged range 2..{len(self.values)}")
        return bool(self.hits[k - 2])

    @cached_property
    def increments(self):
        """[a(k+1) - a(k) for k = 1..n-1]; each entry is y or z."""
        v = self.values
        return [v[i + 1] - v[i] for i in range(len(v) - 1)]


def _fits_int64(params, n_terms):
    p = params
    if max(p.j, p.x, p.y, p.z) >= _I64_CAP:
        return False
    return p.x + n_terms * max(p.y, p.z) < _I64_CAP


def _generate_py(j, x, y, z, n_terms, int64=False):
    """Pure Python generation loop; mirrors the compiled kernel exactly."""
    values = array("q", bytes(8 * n_terms)) if int64 else [0] * n_terms
    hits = bytearray(n_terms - 1 if n_terms > 1 else 0)
    values[0] = x
    cur = x
    c = 0
    for k in range(2, n_terms + 1):
        target = k - j
        limit = k - 1
        while c < limit and values[c] < target:
            c += 1
        if c < limit and values[c] == target:
            cur += y
            hits[k - 2] = 1
        else:
            cur += z
        values[k - 1] = cur
    return values, bytes(hits)


def generate(params: SequenceParams, n_terms: int) -> SequenceTrace:
    """Generate the first n_terms terms of the sequence given by params."""
    if not isinstance(n_terms, int) or isinstance(n_terms, bool):
        raise DomainError(f"n_terms must be an integer, got {n_terms!r}")
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    p = params
    fits = _fits_int64(p, n_terms)
    if _kernel is not None and fits:
        values, hits = _kernel.generate(p.j, p.x, p.y, p.z, n_terms)
    else:
        values, hits = _generate_py(p.j, p.x, p.y, p.z, n_terms, int64=fits)
    return SequenceTrace(params=p, values=values, hits=hits)


def miss_indices(trace: SequenceTrace) -> list:
    """Indices k >= 2 that were misses, ascending."""
    return [i + 2 for i, flag in enumerate(trace.hits) if not flag]


def image_complement(trace: SequenceTrace, bound: int) -> list:
    """Positive integers <= bound that never occur as a value.

    The trace must reach past the bound (its last value >= bound),
    otherwise membership of the largest candidates would be undecidable.
    """
    values = trace.values
    if bound > values[-1]:
        raise RangeError(
            f"bound {bound} exceeds last generated value {values[-1]}"
        )
    out = []
    i = 0
    n = len(values)
    for m in range(1, bound + 1):
        while i < n and values[i] < m:
            i += 1
        if i == n or values[i] != m:
            out.append(m)
    return out
