"""Command-line interface.

Subcommands: gen, closed-form, verify <selector>, density, crosscheck,
morphic, table.  Exit codes: 0 success/match, 1 verification failure or
crosscheck mismatch, 2 usage or domain errors.  --format json emits one
object with the fields command, params, result, witnesses for every
subcommand.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, closedforms, oeis
from .engine import SequenceParams, generate
from .qfield import ceil_q
from .errors import (
    BFileParseError,
    DomainError,
    IdentityViolation,
    RangeError,
)

_FORMATS = ("plain", "csv", "bfile", "json")

# verification grids, kept conservative so the default run is fast
_GRID_Z = range(2, 7)
_GRID_SMALL = range(0, 7)
_GRID_X_Y0 = range(0, 10)
_GRID_K = range(2, 6)
_DEFAULT_HORIZON = 10_000


def _emit_json(command, params, result, witnesses):
    def fallback(obj):
        if isinstance(obj, Fraction):
            return {"numerator": obj.numerator, "denominator": obj.denominator}
        return str(obj)

    print(json.dumps(
        {
            "command": command,
            "params": params,
            "result": result,
            "witnesses": witnesses,
        },
        default=fallback,
    ))


def _emit_values(args, command, params, start_index, values):
    """Shared output path for integer-sequence-producing subcommands."""
    fmt = args.format
    if fmt == "plain":
        for v in values:
            print(v)
    elif fmt == "csv":
        print("n,value")
        for i, v in enumerate(values):
            print(f"{start_index + i},{v}")
    elif fmt == "bfile":
        sys.stdout.write(oeis.emit_bfile(values, start_index=start_index))
    else:
        _emit_json(command, params,
                   {"start_index": start_index, "values": list(values)}, [])
    return 0


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args):
    params = SequenceParams(x=args.x, y=args.y, z=args.z, j=args.j)
    trace = generate(params, args.n)
    return _emit_values(
        args, "gen",
        {"j": args.j, "x": args.x, "y": args.y, "z": args.z, "n": args.n},
        1, list(trace.values),
    )


# ---------------------------------------------------------------------------
# closed-form


def _closed_form_values(args):
    family = args.family
    if family in ("A", "B"):
        if args.x is None or args.Z is None:
            raise DomainError(f"family {family} requires --x and --Z")
        build = closedforms.beatty_form_a if family == "A" else closedforms.beatty_form_b
        form = build(args.x, args.Z)
        start = form.start_index
        if args.n < start:
            raise DomainError(f"-n {args.n} is below the form's start index {start}")
        return start, [closedforms.eval_beatty(form, n) for n in range(start, args.n + 1)]
    if family == "metafib":
        if args.k is None:
            raise DomainError("family metafib requires --k")
        return 1, [closedforms.metafib_b(args.k, n) for n in range(1, args.n + 1)]
    fn = {
        "ramsey": closedforms.ramsey_form,
        "thumbtack": closedforms.thumbtack_form,
        "hex": closedforms.hex_form,
    }[family]
    return 1, [fn(n) for n in range(1, args.n + 1)]


def _cmd_closed_form(args):
    start, values = _closed_form_values(args)
    params = {"family": args.family, "n": args.n}
    for name in ("x", "Z", "k"):
        if getattr(args, name) is not None:
            params[name] = getattr(args, name)
    return _emit_values(args, "closed-form", params, start, values)


# ---------------------------------------------------------------------------
# verify

def _check(name, ok, witness=None, detail=""):
    return {"name": name, "pass": bool(ok), "witness": witness, "detail": detail}


def _first_divergence(form, params, horizon):
    """Compare closed form against the engine; None or (n, formula, engine)."""
    start = form.start_index
    trace = generate(params, horizon)
    for n in range(start, horizon + 1):
        formula = closedforms.eval_beatty(form, n)
        actual = trace.a(n)
        if formula != actual:
            return (n, formula, actual)
    return None


def _beatty_cells(args):
    """Cells (family, x, Z) to verify: one explicit cell or the proven grid."""
    families = (args.family,) if args.family else ("A", "B")
    if args.x is not None or args.Z is not None:
        if args.x is None or args.Z is None or args.family is None:
            raise DomainError("single-cell verify needs --family, --x and --Z")
        return [(args.family, args.x, args.Z)]
    cells = []
    for family in families:
        for Z in _GRID_Z:
            top = Z + 2 if family == "A" else Z + 1
            for x in range(0, top + 1):
                cells.append((family, x, Z))
    return cells


def _verify_beatty(args, checks):
    horizon = args.n
    for family, x, Z in _beatty_cells(args):
        build = closedforms.beatty_form_a if family == "A" else closedforms.beatty_form_b
        form = build(x, Z)
        params = SequenceParams(x=x, y=(Z + 1 if family == "A" else Z),
                                z=(Z if family == "A" else Z + 1))
        div = _first_divergence(form, params, horizon)
        name = f"beatty {family} x={x} Z={Z}"
        if div is None:
            checks.append(_check(name, True,
                                 detail=f"MATCH {form.start_index}..{horizon}"))
        else:
            n, formula, actual = div
            checks.append(_check(
                name, False,
                witness={"n": n, "formula": formula, "engine": actual},
                detail=f"MISMATCH at n={n} (formula {formula}, engine {actual})",
            ))


def _verify_ceiling(args, checks):
    """x = Z+1 in both families turns the form into ceil(n*r)."""
    horizon = args.n
    for family in ("A", "B"):
        for Z in _GRID_Z:
            x = Z + 1
            build = closedforms.beatty_form_a if family == "A" else closedforms.beatty_form_b
            slope = closedforms.slope_a(Z) if family == "A" else closedforms.slope_b(Z)
            form = build(x, Z)
            params = SequenceParams(x=x, y=(Z + 1 if family == "A" else Z),
                                    z=(Z if family == "A" else Z + 1))
            trace = generate(params, horizon)
            witness = None
            for n in range(form.start_index, horizon + 1):
                c = ceil_q(slope * n)
                if c != trace.a(n):
                    witness = {"n": n, "ceiling": c, "engine": trace.a(n)}
                    break
            checks.append(_check(
                f"ceiling {family} Z={Z}", witness is None, witness=witness,
                detail="ceil(n*r) equals the engine" if witness is None else "diverged",
            ))


def _verify_lattice(args, checks):
    horizon = args.n
    forms = {
        "ramsey": (closedforms.ramsey_form, SequenceParams(x=3, y=1, z=2)),
        "thumbtack": (closedforms.thumbtack_form, SequenceParams(x=4, y=1, z=2)),
        "hex": (closedforms.hex_form, SequenceParams(x=5, y=1, z=2)),
    }
    which = ("ramsey", "thumbtack", "hex") if args.which == "all" else (args.which,)
    for name in which:
        fn, params = forms[name]
        trace = generate(params, horizon)
        witness = None
        for n in range(1, horizon + 1):
            v = fn(n)
            if v != trace.a(n):
                witness = {"n": n, "formula": v, "engine": trace.a(n)}
                break
        checks.append(_check(
            f"lattice {name}", witness is None, witness=witness,
            detail=f"MATCH 1..{horizon}" if witness is None else "diverged",
        ))


def _verify_hits(args, checks):
    horizon = args.n
    if args.x is not None or args.y is not None or args.z is not None:
        if None in (args.x, args.y, args.z):
            raise DomainError("single-cell verify needs --x, --y and --z")
        cells = [(args.x, args.y, args.z)]
    else:
        cells = [(x, y, z) for x in _GRID_SMALL for y in _GRID_SMALL for z in _GRID_SMALL]
    for x, y, z in cells:
        name = f"hits x={x} y={y} z={z}"
        try:
            analysis.hits_prefix(generate(SequenceParams(x=x, y=y, z=z), horizon))
        except IdentityViolation as exc:
            checks.append(_check(name, False, witness={"error": str(exc)},
                                 detail="identity falsified"))
        else:
            checks.append(_check(name, True, detail=f"identity holds 1..{horizon}"))


def _verify_recurrence(args, checks):
    horizon = args.n
    zs = (args.z,) if args.z is not None else _GRID_Z
    xs = (args.x,) if args.x is not None else _GRID_X_Y0
    for z in zs:
        if z < 1:
            raise DomainError(f"recurrence checks need z >= 1, got {z}")
        for x in xs:
            name = f"y0 x={x} z={z}"
            params = SequenceParams(x=x, y=0, z=z)
            trace = generate(params, horizon)
            witness = None
            K = analysis.verify_linear_recurrence(trace, z)
            if K is None or K > 10 * z:
                witness = {"recurrence_start": K}
            else:
                report = analysis.detect_periodicity(trace)
                if report is None or z % report.period != 0:
                    witness = {"period": report.period if report else None}
                else:
                    avg = Fraction(sum(report.increment_pattern), report.period)
                    if avg != z - 1:
                        witness = {"average_increment": str(avg)}
                    else:
                        bad = next((v for v in trace.values if v % z != x % z), None)
                        if bad is not None:
                            witness = {"value_mod_z": bad}
            checks.append(_check(
                name, witness is None, witness=witness,
                detail="recurrence, period, slope and residues all check"
                if witness is None else "violated",
            ))


def _verify_metafib(args, checks):
    horizon = args.n
    ks = (args.k,) if args.k is not None else _GRID_K
    for k in ks:
        if k < 2:
            raise DomainError(f"metafib checks need k >= 2, got {k}")
        name = f"metafib k={k}"
        trace = generate(SequenceParams(x=k + 1, y=1, z=k + 1), horizon)
        witness = None
        prev = None
        for n in range(1, horizon + 1):
            b = trace.a(n)
            if (b - n) % k != 0:
                witness = {"n": n, "b": b, "remainder": (b - n) % k}
                break
            leaves = (b - n) // k
            if prev is not None and leaves - prev not in (0, 1):
                witness = {"n": n, "leaf_step": leaves - prev}
                break
            prev = leaves
        checks.append(_check(
            name, witness is None, witness=witness,
            detail=f"divisibility and leaf monotonicity hold 1..{horizon}"
            if witness is None else "violated",
        ))
    # the k = 3 member is a published sequence; crosscheck the fixture
    entry = oeis.compendium_lookup("A045412")
    report = oeis.crosscheck(entry.params, oeis.load_fixture("A045412"))
    checks.append(_check(
        "metafib A045412 fixture", report.matched,
        witness=None if report.matched else {"first_divergence": report.first_divergence},
        detail=f"matched shift {report.shift_applied} over {report.compared_count} terms"
        if report.matched else "fixture mismatch",
    ))


_CANON_RULES = closedforms.MorphismRules(image0="01", image1="1101")
_MORPHIC_PREFIX_16 = "0111011101110101"


def _verify_morphic(args, checks):
    horizon = args.n
    word = closedforms.morphic_fixed_point(_CANON_RULES, max(horizon, 16))
    ok16 = word[:16] == _MORPHIC_PREFIX_16
    checks.append(_check(
        "morphic prefix 16", ok16,
        witness=None if ok16 else {"prefix": word[:16]},
        detail=f"first 16 letters are {_MORPHIC_PREFIX_16}" if ok16 else "prefix differs",
    ))
    positions = closedforms.positions_of(word[:horizon], "0")
    params = SequenceParams(x=1, y=2, z=4)
    trace = generate(params, max(len(positions), 1))
    witness = None
    for i, pos in enumerate(positions, start=1):
        if trace.a(i) != pos:
            witness = {"n": i, "position": pos, "engine": trace.a(i)}
            break
    checks.append(_check(
        "morphic zero positions", witness is None, witness=witness,
        detail=f"positions of '0' equal the x=1,y=2,z=4 sequence "
               f"({len(positions)} terms)" if witness is None else "diverged",
    ))


def _cmd_verify(args):
    checks = []
    selector = args.selector
    if selector in ("beatty", "all"):
        _verify_beatty(args, checks)
        if selector == "all":
            _verify_ceiling(args, checks)
    if selector in ("lattice", "all"):
        _verify_lattice(args, checks)
    if selector in ("hits", "all"):
        _verify_hits(args, checks)
    if selector in ("recurrence", "all"):
        _verify_recurrence(args, checks)
    if selector in ("metafib", "all"):
        _verify_metafib(args, checks)
    if selector in ("morphic", "all"):
        _verify_morphic(args, checks)

    failures = [c for c in checks if not c["pass"]]
    params = {"selector": selector, "horizon": args.n}
    for name in ("family", "x", "y", "z", "Z", "k", "which"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    if args.format == "json":
        _emit_json(
            "verify", params,
            {"status": "fail" if failures else "pass", "checks": checks},
            [c["witness"] for c in failures],
        )
    else:
        single = len(checks) == 1
        for c in checks:
            if single:
                print(c["detail"])
            else:
                print(f"{c['name']}: {'PASS' if c['pass'] else 'FAIL'} ({c['detail']})")
        if not single:
            print(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# density


def _cmd_density(args):
    params = SequenceParams(x=args.x, y=args.y, z=args.z)
    report = analysis.density_report(params, args.n)
    if args.format == "json":
        _emit_json(
            "density",
            {"x": args.x, "y": args.y, "z": args.z, "horizon": args.n},
            {
                "ratio": str(report.ratio),
                "target": str(report.target),
                "gap": str(report.gap),
            },
            [],
        )
    else:
        print(f"ratio a({args.n})/{args.n} = {report.ratio} "
              f"~ {float(report.ratio):.12f}")
        print(f"target r0 = {report.target} ~ {float(report.target):.12f}")
        print(f"gap = {report.gap}")
    return 0


# ---------------------------------------------------------------------------
# crosscheck


def _cmd_crosscheck(args):
    explicit = [v for v in (args.x, args.y, args.z) if v is not None]
    if explicit and len(explicit) != 3:
        raise DomainError("explicit parameters need all of --x, --y, --z")
    if explicit:
        params = SequenceParams(x=args.x, y=args.y, z=args.z, j=args.j or 0)
    elif args.id:
        params = oeis.compendium_lookup(args.id).params
    else:
        raise DomainError("crosscheck needs --id or explicit --x/--y/--z")

    if args.bfile:
        with open(args.bfile, "rb") as fh:
            reference = oeis.parse_bfile(fh.read(), source_id=args.id)
    elif args.fetch:
        if not args.id:
            raise DomainError("--fetch requires --id")
        reference = oeis.fetch_bfile(args.id)
    else:
        if not args.id:
            raise DomainError("crosscheck needs --bfile when --id is absent")
        reference = oeis.load_fixture(args.id)

    report = oeis.crosscheck(params, reference, max_shift=args.max_shift)
    if args.format == "json":
        _emit_json(
            "crosscheck",
            {"id": args.id, "j": params.j, "x": params.x, "y": params.y,
             "z": params.z, "max_shift": args.max_shift},
            {
                "matched": report.matched,
                "shift": report.shift_applied,
                "compared": report.compared_count,
            },
            [] if report.matched else [{"first_divergence": report.first_divergence}],
        )
    else:
        label = args.id or f"S({params.x},{params.y},{params.z})"
        if report.matched:
            print(f"{label}: matched, shift {report.shift_applied}, "
                  f"{report.compared_count} terms compared")
        else:
            print(f"{label}: MISMATCH (best shift {report.shift_applied}, "
                  f"first divergence {report.first_divergence})")
    return 0 if report.matched else 1


# ---------------------------------------------------------------------------
# morphic


def _cmd_morphic(args):
    rules = closedforms.MorphismRules(image0=args.rule0, image1=args.rule1)
    word = closedforms.morphic_fixed_point(rules, args.n)
    params = {"rule0": args.rule0, "rule1": args.rule1, "n": args.n}
    if args.positions_of is not None:
        positions = closedforms.positions_of(word, args.positions_of)
        params["positions_of"] = args.positions_of
        return _emit_values(args, "morphic", params, 1, positions)
    if args.format == "json":
        _emit_json("morphic", params, {"word": word}, [])
    elif args.format == "csv":
        print("n,letter")
        for i, ch in enumerate(word, start=1):
            print(f"{i},{ch}")
    elif args.format == "bfile":
        sys.stdout.write(oeis.emit_bfile([int(ch) for ch in word]))
    else:
        print(word)
    return 0


# ---------------------------------------------------------------------------
# table


def _cmd_table(args):
    rows = oeis.compendium()
    if args.format == "json":
        _emit_json(
            "table", {},
            [{"oeis_id": e.oeis_id, "j": e.j, "x": e.x, "y": e.y, "z": e.z}
             for e in rows],
            [],
        )
    elif args.format == "csv":
        print("oeis_id,j,x,y,z")
        for e in rows:
            print(f"{e.oeis_id},{e.j},{e.x},{e.y},{e.z}")
    elif args.format == "bfile":
        raise DomainError("the compendium table has no b-file representation")
    else:
        for e in rows:
            print(f"{e.oeis_id}  j={e.j} x={e.x} y={e.y} z={e.z}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_format(p):
    p.add_argument("--format", choices=_FORMATS, default="plain")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hiccup",
        description="Self-referential hiccup sequences: generate, verify, crosscheck.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="generate sequence terms")
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("-n", "--terms", dest="n", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("closed-form", help="evaluate a closed form for n = start..N")
    p.add_argument("--family", required=True,
                   choices=("A", "B", "ramsey", "thumbtack", "hex", "metafib"))
    p.add_argument("--x", type=int)
    p.add_argument("--Z", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("-n", "--terms", dest="n", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_closed_form)

    p = sub.add_parser("verify", help="check the proved identities against the engine")
    p.add_argument("selector",
                   choices=("beatty", "lattice", "recurrence", "hits",
                            "metafib", "morphic", "all"))
    p.add_argument("--family", choices=("A", "B"))
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--Z", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--which", choices=("ramsey", "thumbtack", "hex", "all"),
                   default="all")
    p.add_argument("-n", "--horizon", dest="n", type=int, default=_DEFAULT_HORIZON)
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("density", help="empirical slope against the exact limit")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("-n", "--horizon", dest="n", type=int, default=_DEFAULT_HORIZON)
    _add_format(p)
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("crosscheck", help="compare against OEIS reference data")
    p.add_argument("--id")
    p.add_argument("--bfile")
    p.add_argument("--fetch", action="store_true")
    p.add_argument("--j", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--max-shift", type=int, default=2)
    _add_format(p)
    p.set_defaults(handler=_cmd_crosscheck)

    p = sub.add_parser("morphic", help="morphic fixed-point words")
    p.add_argument("--rule0", default="01")
    p.add_argument("--rule1", default="1101")
    p.add_argument("--positions-of", choices=("0", "1"))
    p.add_argument("-n", "--letters", dest="n", type=int, default=64)
    _add_format(p)
    p.set_defaults(handler=_cmd_morphic)

    p = sub.add_parser("table", help="print the compendium of published matches")
    _add_format(p)
    p.set_defaults(handler=_cmd_table)

    return parser


def run(argv=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (DomainError, RangeError, BFileParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IdentityViolation as exc:
        print(f"identity violated: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
