"""Self-referential "hiccup" integer sequences.

a(1) = x; after that the sequence looks back at itself: index k gains y
when k - j already occurred as a value and z otherwise.  This package
generates such sequences at scale, evaluates their exact closed forms
over quadratic fields, checks the structural identities they satisfy,
and crosschecks everything against published OEIS data.
"""

from .analysis import (
    DensityReport,
    PeriodicityReport,
    counting_function,
    density_report,
    detect_periodicity,
    hits_prefix,
    slope_y0,
    verify_linear_recurrence,
)
from .closedforms import (
    BeattyForm,
    MorphismRules,
    beatty_form_a,
    beatty_form_b,
    eval_beatty,
    hex_form,
    leaf_count,
    metafib_b,
    morphic_fixed_point,
    positions_of,
    ramsey_form,
    slope_a,
    slope_b,
    thumbtack_form,
)
from .engine import (
    SequenceParams,
    SequenceTrace,
    generate,
    image_complement,
    kernel_loaded,
    miss_indices,
)
from .errors import (
    BFileParseError,
    DomainError,
    HiccupError,
    IdentityViolation,
    RangeError,
)
from .oeis import (
    BFile,
    CompendiumEntry,
    CrosscheckReport,
    compendium,
    compendium_lookup,
    crosscheck,
    emit_bfile,
    fetch_bfile,
    load_fixture,
    parse_bfile,
)
from .qfield import (
    QuadExt,
    ceil_q,
    discriminant,
    field_arith,
    floor_q,
    isqrt,
    slope_r0,
)

__version__ = "0.1.0"
