"""Command line front end.

Subcommands: cohomology, regularity, acm, koszul, check, audit.  Output
is deterministic: the same invocation always produces identical bytes.
Exit codes: 0 on success, 1 when --strict is set and a violation or
mismatch was found, 2 on invalid input (one-line CODE: message on
stderr).
"""

import argparse
import json
import re
import sys
from pathlib import Path

from . import criteria, koszul, regularity
from .core import (
    InputError,
    LineBundleSum,
    Shape,
    bundle_from_json,
    bundle_to_json,
    cohomology_table,
    sum_cohomology_dim,
)


class _Parser(argparse.ArgumentParser):
    # twist vectors like -3,-3 must parse as option values, not option names
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(?:,-?\d+)*$")

    def error(self, message):
        print(f"E_USAGE: {message}", file=sys.stderr)
        raise SystemExit(2)


def _int_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError("E_USAGE", f"{what} must be comma-separated integers, got {text!r}")


def _load_bundle(source: str) -> LineBundleSum:
    text = source.strip()
    if not text.startswith("{"):
        try:
            text = Path(source).read_text()
        except OSError as e:
            raise InputError("E_JSON", f"cannot read bundle file {source!r}: {e}")
    return bundle_from_json(text)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _flatten(row: dict, columns: list[tuple[str, int]]) -> list:
    cells = []
    for name, width in columns:
        value = row[name]
        if width:
            cells.extend(value)
        else:
            cells.append(value)
    return cells


def _headers(columns: list[tuple[str, int]]) -> list[str]:
    names = []
    for name, width in columns:
        if width:
            names.extend(f"{name}_{k}" for k in range(1, width + 1))
        else:
            names.append(name)
    return names


def emit_table(rows: list[dict], columns: list[tuple[str, int]], fmt: str) -> str:
    """Render rows deterministically.

    columns lists (field, vector_width) pairs, vector_width 0 for scalar
    fields.  json keeps vectors as arrays and yields one array document
    (a single row still becomes a one-element array); csv flattens
    vectors into field_1 ... field_s under a fixed header, emitted even
    when there are no rows; table is an aligned human-readable layout.
    Rows are sorted by their cell values, so insertion order never leaks
    into the output.
    """
    rows = sorted(rows, key=lambda row: _flatten(row, columns))
    if fmt == "json":
        ordered = [{name: row[name] for name, _ in columns} for row in rows]
        return _dump(ordered)
    headers = _headers(columns)
    if fmt == "csv":
        lines = [",".join(headers)]
        for row in rows:
            lines.append(",".join(str(cell) for cell in _flatten(row, columns)))
        return "\n".join(lines)
    cells = [headers] + [[str(c) for c in _flatten(row, columns)] for row in rows]
    widths = [max(len(line[k]) for line in cells) for k in range(len(headers))]
    lines = ["  ".join(text.rjust(w) for text, w in zip(line, widths)) for line in cells]
    return "\n".join(lines)


def _cmd_cohomology(args) -> int:
    E = _load_bundle(args.bundle)
    s = E.shape.s
    columns = [("t", 0), ("twist", s), ("dim", 0)]
    if args.t is None and args.box is None:
        raise InputError("E_USAGE", "cohomology needs --t or --box")
    if args.t is not None:
        d = _int_vector(args.twist, "--twist") if args.twist else (0,) * s
        dim = sum_cohomology_dim(E, d, args.t)
        rows = [{"t": args.t, "twist": list(d), "dim": dim}]
    else:
        table = cohomology_table(E, args.box)
        rows = table.to_rows()
    print(emit_table(rows, columns, args.format))
    return 0


def _cmd_regularity(args) -> int:
    E = _load_bundle(args.bundle)
    verdict = regularity.is_zero_regular(E)
    doc = {"zero_regular": verdict.regular, "reg_index": regularity.regularity_index(E)}
    if not verdict.regular:
        doc["witnesses"] = verdict.to_json()["witnesses"]
    if args.m is not None:
        m = _int_vector(args.m, "--m")
        doc["m"] = list(m)
        doc["m_regular"] = regularity.is_m_regular(E, m).regular
    if args.format == "json":
        print(_dump(doc))
    elif args.format == "csv":
        columns = [("t", 0), ("j", E.shape.s), ("dim", 0)]
        rows = [{"t": t, "j": list(j), "dim": dim} for t, j, dim in verdict.witnesses]
        print(emit_table(rows, columns, "csv"))
    else:
        lines = [f"zero_regular: {verdict.regular}", f"reg_index: {doc['reg_index']}"]
        for t, j, dim in verdict.witnesses:
            lines.append(f"  nonzero H^{t} at j={list(j)} (dim {dim})")
        if args.m is not None:
            lines.append(f"m_regular at {doc['m']}: {doc['m_regular']}")
        print("\n".join(lines))
    return 0


def _cmd_acm(args) -> int:
    E = _load_bundle(args.bundle)
    acm, witnesses = regularity.is_acm(E)
    doc = {"acm": acm, "witnesses": [{"i": i, "t": t} for i, t in witnesses]}
    if E.rank == 1:
        doc["closed_form"] = regularity.acm_closed_form(E.summands[0][0], E.shape)
    if args.format == "json":
        print(_dump(doc))
    elif args.format == "csv":
        print(emit_table(doc["witnesses"], [("i", 0), ("t", 0)], "csv"))
    else:
        lines = [f"acm: {acm}"]
        for i, t in witnesses:
            lines.append(f"  nonzero H^{i} at diagonal twist {t}")
        print("\n".join(lines))
    return 0


def _cmd_koszul(args) -> int:
    shape = Shape(_int_vector(args.shape, "--shape"))
    if args.iso:
        pairs = koszul.proposition_iso_dims(shape)
        if args.format == "json":
            print(_dump({"pairs": [list(p) for p in pairs]}))
        else:
            rows = [{"lhs": a, "rhs": b} for a, b in pairs]
            print(emit_table(rows, [("lhs", 0), ("rhs", 0)], args.format))
        return 0
    if args.factor is None:
        raise InputError("E_USAGE", "koszul needs --factor (1-based) or --iso")
    if not 1 <= args.factor <= shape.s:
        raise InputError("E_RANGE", f"--factor must be in [1, {shape.s}]")
    d = _int_vector(args.d, "--d") if args.d else (0,) * shape.s
    complex_ = koszul.koszul_factor_complex(shape, args.factor - 1, d)
    doc = complex_.to_json()
    doc["euler_exact"] = koszul.euler_exactness_check(complex_)
    if args.format == "json":
        print(_dump(doc))
    else:
        rows = []
        for pos, term in enumerate(complex_.terms):
            for degree, mult in term.summands:
                rows.append({"position": pos, "degree": list(degree), "mult": mult})
        print(emit_table(rows, [("position", 0), ("degree", shape.s), ("mult", 0)], args.format))
    return 0


def _cmd_check(args) -> int:
    E = _load_bundle(args.bundle)
    s = E.shape.s
    r = _int_vector(args.r, "--r") if args.r else None
    if args.criterion == "thm12":
        if r is not None:
            raise InputError("E_USAGE", "--r does not apply to thm12")
        report = criteria.thm12_violations(E)
    elif args.criterion == "thm13":
        if r is None:
            raise InputError("E_USAGE", "thm13 needs --r")
        report = criteria.thm13_violations(E, r)
    elif args.criterion == "miyazaki":
        report = criteria.miyazaki_violations(E, r)
    else:
        if r is not None:
            raise InputError("E_USAGE", "--r does not apply to lemma14")
        report = criteria.lemma14_check(E)
        if args.format == "json":
            print(_dump(report.to_json()))
        else:
            columns = [("condition", 0), ("t", 0), ("j", s), ("tau", 0), ("dim", 0)]
            print(emit_table(report.to_rows(), columns, args.format))
        return 1 if (args.strict and not report.conditions_hold) else 0
    columns = [("i", 0), ("j", s), ("t", 0), ("dim", 0)]
    print(emit_table(report.to_rows(), columns, args.format))
    return 1 if (args.strict and not report.empty) else 0


def _cmd_audit(args) -> int:
    shape = Shape(_int_vector(args.shape, "--shape"))
    r = _int_vector(args.r, "--r") if args.r else None
    report = criteria.desk_scale_audit(
        shape, args.bound, args.max_rank, args.criterion, r=r, jobs=args.jobs
    )
    if args.format == "json":
        print(_dump(report.to_json()))
    elif args.format == "csv":
        lines = ["bundle,hypothesis,conclusion"]
        for E, hyp, concl in report.mismatches:
            quoted = bundle_to_json(E).replace('"', '""')
            lines.append(f'"{quoted}",{hyp},{concl}')
        print("\n".join(lines))
    else:
        lines = [
            f"total: {report.total}",
            f"both: {report.both}",
            f"hyp_only: {report.hyp_only}",
            f"concl_only: {report.concl_only}",
            f"neither: {report.neither}",
        ]
        for E, hyp, concl in report.mismatches:
            lines.append(f"  mismatch {E} hypothesis={hyp} conclusion={concl}")
        print("\n".join(lines))
    return 1 if (args.strict and report.mismatches) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multicoh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")

    p = sub.add_parser("cohomology", help="dimensions of H^t(E(twist))")
    p.add_argument("--bundle", required=True, help="bundle JSON, inline or a file path")
    p.add_argument("--twist", help="twist vector a,b,...")
    p.add_argument("--t", type=int, help="single cohomological degree")
    p.add_argument("--box", type=int, help="tabulate nonzero dims over twists in [-B,B]^s")
    add_format(p)

    p = sub.add_parser("regularity", help="0-regularity, regularity index, witnesses")
    p.add_argument("--bundle", required=True)
    p.add_argument("--m", help="also test m-regularity at this twist vector")
    add_format(p)

    p = sub.add_parser("acm", help="intermediate diagonal cohomology test")
    p.add_argument("--bundle", required=True)
    add_format(p)

    p = sub.add_parser("koszul", help="factor coordinate-form complexes")
    p.add_argument("--shape", required=True, help="factor dimensions n1,n2,...")
    p.add_argument("--factor", type=int, help="factor index, 1-based")
    p.add_argument("--d", help="starting degree vector, default zero")
    p.add_argument("--iso", action="store_true", help="corner cohomology dimension pairs")
    add_format(p)

    p = sub.add_parser("check", help="run a splitting-criterion hypothesis check")
    p.add_argument("criterion", choices=["thm12", "thm13", "lemma14", "miyazaki"])
    p.add_argument("--bundle", required=True)
    p.add_argument("--r", help="per-axis excess caps a,b,... (thm13/miyazaki)")
    p.add_argument("--strict", action="store_true", help="exit 1 when violations are found")
    add_format(p)

    p = sub.add_parser("audit", help="enumerate bundles and cross-check a criterion")
    p.add_argument("--shape", required=True)
    p.add_argument("--criterion", required=True, choices=["thm12", "thm13", "lemma14"])
    p.add_argument("--bound", type=int, required=True, help="degree box half-width B")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--r", help="per-axis excess caps (thm13 only)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="exit 1 when mismatches are found")
    add_format(p)

    return parser


_COMMANDS = {
    "cohomology": _cmd_cohomology,
    "regularity": _cmd_regularity,
    "acm": _cmd_acm,
    "koszul": _cmd_koszul,
    "check": _cmd_check,
    "audit": _cmd_audit,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except InputError as e:
        print(f"{e.code}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
