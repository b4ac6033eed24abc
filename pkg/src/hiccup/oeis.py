"""OEIS-facing tooling: b-files, the compendium of known matches, crosschecks.

A b-file is the OEIS exchange format: one "index value" pair per line,
'#' comments and blank lines ignored, indices contiguous and ascending.
The compendium lists the published sequences this family reproduces, and
crosscheck() aligns a generated trace against reference data, tolerating
a small index shift (OEIS offsets differ from our fixed 1-based start).
"""

from __future__ import annotations

import os
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .engine import SequenceParams, generate
from .errors import BFileParseError, DomainError

__all__ = [
    "BFile",
    "parse_bfile",
    "emit_bfile",
    "CompendiumEntry",
    "compendium",
    "compendium_lookup",
    "fixtures_dir",
    "load_fixture",
    "fetch_bfile",
    "CrosscheckReport",
    "crosscheck",
]

FIXTURES_ENV = "HICCUP_FIXTURES"


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: ((index, value), ...) plus an optional source id."""

    records: tuple
    source_id: Optional[str] = None

    def __len__(self):
        return len(self.records)

    @property
    def first_index(self):
        if not self.records:
            raise BFileParseError("empty b-file has no first index")
        return self.records[0][0]

    @property
    def values(self):
        return [v for _, v in self.records]


def parse_bfile(stream, source_id=None) -> BFile:
    """Parse b-file text (str or bytes).  Malformed input raises
    BFileParseError with the offending 1-based line number."""
    if isinstance(stream, bytes):
        try:
            stream = stream.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise BFileParseError(f"not valid UTF-8 text: {exc}") from None
    records = []
    prev_index = None
    for lineno, raw in enumerate(stream.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(
                f"expected 'index value', got {len(fields)} fields", lineno
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {line!r}", lineno) from None
        if prev_index is not None and index != prev_index + 1:
            raise BFileParseError(
                f"index {index} does not follow {prev_index} contiguously", lineno
            )
        prev_index = index
        records.append((index, value))
    return BFile(records=tuple(records), source_id=source_id)


def emit_bfile(trace, start_index: int = 1) -> str:
    """Render a trace (or any value sequence) as b-file text.

    Round-trips through parse_bfile; an empty sequence yields an empty
    stream.
    """
    values = getattr(trace, "values", trace)
    return "".join(
        f"{start_index + i} {v}\n" for i, v in enumerate(values)
    )


@dataclass(frozen=True)
class CompendiumEntry:
    """One published sequence and the (j, x, y, z) that reproduces it."""

    oeis_id: str
    j: int
    x: int
    y: int
    z: int

    @property
    def params(self):
        return SequenceParams(x=self.x, y=self.y, z=self.z, j=self.j)


_COMPENDIUM = (
    CompendiumEntry("A000201", 1, 1, 2, 1),
    CompendiumEntry("A003156", 1, 1, 3, 1),
    CompendiumEntry("A004956", 0, 2, 2, 1),
    CompendiumEntry("A007066", 0, 1, 2, 3),
    CompendiumEntry("A026352", 1, 1, 2, 3),
    CompendiumEntry("A026356", 0, 2, 2, 3),
    CompendiumEntry("A045412", 0, 3, 1, 3),
    CompendiumEntry("A064437", 0, 1, 3, 2),
    CompendiumEntry("A080578", 0, 1, 1, 3),
    CompendiumEntry("A080579", 0, 1, 1, 4),
    CompendiumEntry("A080580", 0, 1, 2, 4),
    CompendiumEntry("A080590", 0, 1, 3, 4),
    CompendiumEntry("A080600", 0, 4, 4, 3),
    CompendiumEntry("A080652", 0, 2, 3, 2),
    CompendiumEntry("A080667", 0, 3, 4, 3),
    CompendiumEntry("A080903", 0, 1, 4, 2),
    CompendiumEntry("A081834", 0, 1, 4, 3),
    CompendiumEntry("A081835", 0, 1, 5, 4),
    CompendiumEntry("A081839", 0, 0, 4, 5),
    CompendiumEntry("A081840", 0, 0, 3, 4),
    CompendiumEntry("A081841", 0, 0, 3, 2),
    CompendiumEntry("A081842", 0, 0, 4, 3),
    CompendiumEntry("A081843", 0, 0, 5, 4),
    CompendiumEntry("A086377", 1, 1, 3, 2),
    CompendiumEntry("A086398", 1, 1, 4, 2),
    CompendiumEntry("A284753", 0, 2, 4, 2),
)


def compendium() -> tuple:
    """All compendium entries, in published order."""
    return _COMPENDIUM


def compendium_lookup(oeis_id: str) -> CompendiumEntry:
    for entry in _COMPENDIUM:
        if entry.oeis_id == oeis_id:
            return entry
    raise DomainError(f"{oeis_id} is not in the compendium")


def fixtures_dir() -> Path:
    """Directory holding bundled b-file fixtures; HICCUP_FIXTURES overrides."""
    override = os.environ.get(FIXTURES_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "fixtures"


def load_fixture(oeis_id: str) -> BFile:
    path = fixtures_dir() / f"{oeis_id}.txt"
    if not path.is_file():
        raise DomainError(f"no fixture for {oeis_id} at {path}")
    return parse_bfile(path.read_text(), source_id=oeis_id)


def fetch_bfile(oeis_id: str, timeout: float = 30.0) -> BFile:
    """Download the live b-file from oeis.org (network access required)."""
    if not (oeis_id.startswith("A") and oeis_id[1:].isdigit() and len(oeis_id) == 7):
        raise DomainError(f"bad OEIS id {oeis_id!r}; expected like 'A000201'")
    url = f"https://oeis.org/{oeis_id}/b{oeis_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        data = resp.read()
    return parse_bfile(data, source_id=oeis_id)


@dataclass(frozen=True)
class CrosscheckReport:
    """Alignment of a generated trace against reference records."""

    params: SequenceParams
    source_id: Optional[str]
    matched: bool
    shift_applied: int
    compared_count: int
    first_divergence: Optional[tuple]  # (reference index, expected, actual)


def crosscheck(params: SequenceParams, reference: BFile, max_shift: int = 2):
    """Compare the generated sequence against reference records.

    Reference index i is matched against generated index i + s for shifts
    s tried in order 0, 1, -1, 2, -2, ...; the first shift that matches
    every overlapping record wins.  If none matches, the report carries
    the shift with the longest agreeing prefix and its first divergence.
    """
    if not reference.records:
        raise DomainError("reference b-file has no records")
    if max_shift < 0:
        raise DomainError(f"max_shift must be >= 0, got {max_shift}")
    max_index = reference.records[-1][0]
    n_terms = max(1, max_index + max_shift)
    trace = generate(params, n_terms)
    values = trace.values

    shifts = sorted(range(-max_shift, max_shift + 1), key=lambda s: (abs(s), s < 0))
    best = None  # (agreement count, shift, compared, first_divergence)
    for s in shifts:
        compared = 0
        agreement = 0
        first_divergence = None
        for i, expected in reference.records:
            k = i + s
            if not 1 <= k <= n_terms:
                continue
            compared += 1
            actual = values[k - 1]
            if actual == expected:
                if first_divergence is None:
                    agreement += 1
            elif first_divergence is None:
                first_divergence = (i, expected, actual)
        if compared and first_divergence is None:
            return CrosscheckReport(
                params=params,
                source_id=reference.source_id,
                matched=True,
                shift_applied=s,
                compared_count=compared,
                first_divergence=None,
            )
        if best is None or agreement > best[0]:
            best = (agreement, s, compared, first_divergence)
    _, s, compared, first_divergence = best
    return CrosscheckReport(
        params=params,
        source_id=reference.source_id,
        matched=False,
        shift_applied=s,
        compared_count=compared,
        first_divergence=first_divergence,
    )
