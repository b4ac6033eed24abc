"""Aggregate structure of generated traces.

Hit-count prefixes and the increment identity, the inverse counting
function N(t), empirical density against the exact slope, eventual
periodicity of increments for y = 0, and the four-term recurrence those
periodic traces satisfy.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional

from .engine import SequenceParams, SequenceTrace, generate
from .errors import DomainError, IdentityViolation, RangeError
from .qfield import QuadExt, slope_r0

__all__ = [
    "hits_prefix",
    "counting_function",
    "DensityReport",
    "density_report",
    "PeriodicityReport",
    "detect_periodicity",
    "verify_linear_recurrence",
    "slope_y0",
]


def hits_prefix(trace: SequenceTrace) -> list:
    """H(1..n): cumulative hit counts, H(1) = 0.

    Asserts the defining identity a(n) = x + z*(n-1) + (y-z)*H(n) at every
    index while accumulating; a failure is an IdentityViolation with the
    first offending index.
    """
    p = trace.params
    if p.j != 0:
        raise DomainError(f"hit-count identity requires j = 0, got j = {p.j}")
    x, y, z = p.x, p.y, p.z
    values = trace.values
    hits = trace.hits
    out = [0]
    h = 0
    for k in range(2, len(values) + 1):
        h += hits[k - 2]
        out.append(h)
        expected = x + z * (k - 1) + (y - z) * h
        if values[k - 1] != expected:
            raise IdentityViolation(
                f"a({k}) = {values[k - 1]} but x + z(n-1) + (y-z)H(n) = {expected}"
            )
    return out


def counting_function(trace: SequenceTrace, t: int) -> int:
    """N(t) = #{n : a(n) <= t}, by bisection over the stored values.

    Requires strictly increasing values (min(y, z) >= 1) and t below the
    last generated value so the count cannot be truncated.
    """
    p = trace.params
    if min(p.y, p.z) < 1:
        raise DomainError("counting function requires strictly increasing values")
    values = trace.values
    if t >= values[-1]:
        raise RangeError(f"t = {t} not below last generated value {values[-1]}")
    return bisect.bisect_right(values, t)


@dataclass(frozen=True)
class DensityReport:
    """Empirical a(n)/n at the horizon against the exact limit slope."""

    params: SequenceParams
    horizon: int
    ratio: Fraction
    target: QuadExt
    gap: Decimal


def density_report(params: SequenceParams, horizon: int) -> DensityReport:
    """Measure a(horizon)/horizon against slope_r0(y, z); y > z > 0 only."""
    if params.j != 0:
        raise DomainError(f"density limit requires j = 0, got j = {params.j}")
    if not params.y > params.z > 0:
        raise DomainError(
            f"density limit requires y > z > 0, got y = {params.y}, z = {params.z}"
        )
    trace = generate(params, horizon)
    ratio = Fraction(trace.values[-1], horizon)
    target = slope_r0(params.y, params.z)
    # copy_abs is context-free; abs() would re-round to the ambient precision
    gap = (QuadExt.from_fraction(ratio) - target).to_decimal(40).copy_abs()
    return DensityReport(
        params=params, horizon=horizon, ratio=ratio, target=target, gap=gap
    )


@dataclass(frozen=True)
class PeriodicityReport:
    """Eventual periodicity of the increment stream.

    preperiod is the first sequence index k whose increment a(k+1) - a(k)
    already lies in the periodic part; increment_pattern is one period
    starting at that index.
    """

    preperiod: int
    period: int
    increment_pattern: list


def detect_periodicity(trace: SequenceTrace, max_period: Optional[int] = None):
    """Find the minimal eventual period of the increments, or None.

    A candidate period p is accepted when the increment stream matches its
    own p-shift from some point on, the stable tail covers at least three
    full periods, and the preperiod uses at most half the horizon (so the
    claim is about behavior, not about running out of data).  Periods are
    tried in increasing order and the preperiod is minimal for the period
    returned.
    """
    d = trace.increments
    m = len(d)
    if max_period is None:
        max_period = m // 3
    for p in range(1, max_period + 1):
        s = 0
        for i in range(m - p - 1, -1, -1):
            if d[i] != d[i + p]:
                s = i + 1
                break
        if m - s < 3 * p:
            continue
        if 2 * s > m:
            continue
        # increments are 0-based from index 1; entry s covers a(s+2)-a(s+1)
        return PeriodicityReport(
            preperiod=s + 1, period=p, increment_pattern=list(d[s:s + p])
        )
    return None


def verify_linear_recurrence(trace: SequenceTrace, z: Optional[int] = None):
    """Smallest K with a(n) = a(n-1) + a(n-z) - a(n-z-1) for all n in [K, horizon].

    Returns None when the recurrence has not stabilized by the end of the
    trace.  The trace must be longer than z + 1 so at least one window fits.
    """
    if z is None:
        z = trace.params.z
    if z < 1:
        raise DomainError(f"recurrence lag requires z >= 1, got {z}")
    values = trace.values
    m = len(values)
    if m <= z + 1:
        raise DomainError(f"horizon {m} too short for lag z = {z}")
    first_valid = z + 2
    last_violation = 0
    for n in range(first_valid, m + 1):
        lhs = values[n - 1]
        rhs = values[n - 2] + values[n - z - 1] - values[n - z - 2]
        if lhs != rhs:
            last_violation = n
    if last_violation == m:
        return None
    return max(first_valid, last_violation + 1)


def slope_y0(trace: SequenceTrace) -> Fraction:
    """Average increment of an S(x, 0, z) trace over one period: exactly z - 1.

    Runs the periodicity detector, averages one period of increments, and
    asserts the average equals z - 1 before returning it.
    """
    p = trace.params
    if p.y != 0 or p.j != 0:
        raise DomainError("slope_y0 applies to j = 0, y = 0 traces only")
    report = detect_periodicity(trace)
    if report is None:
        raise DomainError("no eventual periodicity detected within the horizon")
    avg = Fraction(sum(report.increment_pattern), report.period)
    if avg != p.z - 1:
        raise IdentityViolation(
            f"period-average increment {avg} != z - 1 = {p.z - 1}"
        )
    return avg
