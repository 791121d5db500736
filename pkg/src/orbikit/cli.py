"""Command-line interface: diamond, check, partners, reconstruct, catalog.

Exit codes are stable: 0 success/compatible, 1 a requested check failed or
the inputs are incompatible/inconsistent, 2 parse error (including unknown
catalog entries), 3 validation error, 4 dimension mismatch, 5 unsupported
dimension range.  Machine output is exact: integers and "a/b" strings,
never floats.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import catalog_entries, load_catalog_presentation
from .diamond import ColumnVector, HodgeDiamond, check_symmetries, format_grade
from .errors import (
    DimensionMismatchError,
    InconsistentError,
    ParseError,
    UnsupportedDimensionError,
    ValidationError,
)
from .formats import diamond_from_obj, diamond_to_obj, dumps, grade_to_json, loads, presentation_from_obj
from .inertia import OrbifoldPresentation, assemble_diamond, is_gorenstein
from .invariants import Mismatch, PartnerReport, Verdict, check_partners, reconstruct_gorenstein

PARTNER_NOTE = "note: necessary conditions only; this never certifies derived equivalence"


def _read_source(source: str):
    """Resolve a CLI input: (json_obj, None) for files, (None, presentation) for catalog names."""
    path = Path(source)
    if path.is_file():
        return loads(path.read_text(encoding="utf-8")), None
    entries = catalog_entries()
    if source in entries:
        return None, load_catalog_presentation(entries[source])
    raise ParseError(f"unknown catalog entry: {source}")


def _load_presentation(source: str) -> OrbifoldPresentation:
    obj, presentation = _read_source(source)
    if presentation is not None:
        return presentation
    if isinstance(obj, dict) and "entries" in obj:
        raise ParseError(f"{source}: expected an orbifold file, got a bare diamond file")
    return presentation_from_obj(obj)


def _load_any_diamond(source: str) -> tuple[str, HodgeDiamond]:
    """Orbifold sources are assembled; diamond files are taken as-is."""
    obj, presentation = _read_source(source)
    if presentation is None:
        if isinstance(obj, dict) and "entries" in obj:
            return diamond_from_obj(obj)
        presentation = presentation_from_obj(obj)
    return presentation.name, assemble_diamond(presentation)


def _grade_axis(d: HodgeDiamond) -> list[Fraction]:
    values = {Fraction(i) for i in range(d.dim_n + 1)}
    for p, q in d.keys():
        values.add(p)
        values.add(q)
    return sorted(values)


def render_table(name: str, d: HodgeDiamond) -> str:
    axis = _grade_axis(d)
    header = [r"q\p"] + [format_grade(p) for p in axis]
    rows = [header]
    for q in reversed(axis):
        rows.append([format_grade(q)] + [str(d.entry(p, q)) for p in axis])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [f"{name}  (dim {d.dim_n}, level {d.level})"]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


def render_csv(d: HodgeDiamond) -> str:
    lines = ["p,q,h"]
    for (p, q), h in d.items():
        lines.append(f"{format_grade(p)},{format_grade(q)},{h}")
    return "\n".join(lines)


def render_tex(d: HodgeDiamond) -> str:
    axis = _grade_axis(d)
    cols = "r|" + "c" * len(axis)
    lines = [rf"\begin{{tabular}}{{{cols}}}"]
    head = " & ".join(f"${format_grade(p)}$" for p in axis)
    lines.append(rf"$q \backslash p$ & {head} \\")
    lines.append(r"\hline")
    for q in reversed(axis):
        body = " & ".join(f"${d.entry(p, q)}$" for p in axis)
        lines.append(rf"${format_grade(q)}$ & {body} \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def render_diamond(name: str, d: HodgeDiamond, fmt: str) -> str:
    if fmt == "table":
        return render_table(name, d)
    if fmt == "json":
        return dumps(diamond_to_obj(name, d))
    if fmt == "csv":
        return render_csv(d)
    if fmt == "tex":
        return render_tex(d)
    raise ValueError(f"unknown format {fmt!r}")


def _mismatch_index_json(index):
    if isinstance(index, tuple):
        return [grade_to_json(Fraction(x)) for x in index]
    return index


def _mismatch_to_json(m: Mismatch) -> dict:
    return {
        "constraint": m.constraint,
        "index": _mismatch_index_json(m.index),
        "left": m.left,
        "right": m.right,
    }


def render_partners(report: PartnerReport, fmt: str) -> str:
    if fmt == "json":
        return dumps(
            {
                "columns_equal": report.columns_equal,
                "h01_equal": report.h01_equal,
                "hn0_equal": report.hn0_equal,
                "hn10_equal": report.hn10_equal,
                "strict_equal": report.strict_equal,
                "verdict": report.verdict.value,
                "failures": [_mismatch_to_json(m) for m in report.failures],
                "informational": [_mismatch_to_json(m) for m in report.informational],
            }
        )
    lines = []
    for label, ok in [
        ("columns", report.columns_equal),
        ("h01", report.h01_equal),
        ("hn0", report.hn0_equal),
        ("hn10", report.hn10_equal),
    ]:
        lines.append(f"{label}: {'equal' if ok else 'MISMATCH'}")
    if report.strict_equal is not None:
        lines.append(f"strict: {'equal' if report.strict_equal else 'MISMATCH'}")
    for m in report.failures:
        index = m.index if not isinstance(m.index, tuple) else ",".join(format_grade(Fraction(x)) for x in m.index)
        lines.append(f"  {m.constraint}[{index}]: {m.left} vs {m.right}")
    for m in report.informational:
        index = ",".join(format_grade(Fraction(x)) for x in m.index)
        lines.append(f"info: h0q[{index}]: {m.left} vs {m.right} (not verdict-affecting)")
    lines.append(f"verdict: {report.verdict.value}")
    if report.verdict is Verdict.COMPATIBLE_SO_FAR:
        lines.append(PARTNER_NOTE)
    return "\n".join(lines)


def _parse_columns_flag(text: str, n: int) -> ColumnVector:
    given: dict[int, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        i_str, sep, v_str = part.partition(":")
        if not sep:
            raise ParseError(f"--columns: expected 'i:v', got {part!r}")
        try:
            i, v = int(i_str), int(v_str)
        except ValueError as exc:
            raise ParseError(f"--columns: expected integers in {part!r}") from exc
        if i in given and given[i] != v:
            raise ParseError(f"--columns: column {i} given twice with different values")
        given[i] = v
    # Mirror onto the negative side; explicit contradictions are rejected.
    full = dict(given)
    for i, v in given.items():
        if -i in given and given[-i] != v:
            raise InconsistentError(f"columns {i} and {-i} disagree ({given[i]} vs {given[-i]})")
        full[-i] = v
    return ColumnVector(n, full)


def cmd_diamond(args) -> int:
    p = _load_presentation(args.input)
    d = assemble_diamond(p)
    print(render_diamond(p.name, d, args.format))
    return 0


def cmd_check(args) -> int:
    p = _load_presentation(args.input)
    requested = [name for name, flag in [("serre", args.serre), ("hodge", args.hodge), ("gorenstein", args.gorenstein)] if flag]
    if not requested:
        requested = ["serre", "hodge", "gorenstein"]
    symmetries = check_symmetries(assemble_diamond(p))
    results = {
        "serre": symmetries.serre,
        "hodge": symmetries.hodge,
        "gorenstein": is_gorenstein(p),
    }
    all_ok = True
    for name in requested:
        ok = results[name]
        all_ok &= ok
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_partners(args) -> int:
    _, da = _load_any_diamond(args.a)
    _, db = _load_any_diamond(args.b)
    report = check_partners(da, db, strict_dim3=args.strict_dim3)
    print(render_partners(report, args.format))
    return 0 if report.verdict is Verdict.COMPATIBLE_SO_FAR else 1


def cmd_reconstruct(args) -> int:
    if args.dim > 3:
        raise UnsupportedDimensionError(
            f"reconstruction is only defined for dimension <= 3, got {args.dim}"
        )
    cols = _parse_columns_flag(args.columns, args.dim)
    d = reconstruct_gorenstein(cols, h01=args.h01, n=args.dim)
    print(render_diamond("reconstruction", d, args.format))
    return 0


def cmd_catalog(args) -> int:
    entries = catalog_entries()
    if args.format == "json":
        print(dumps({"entries": [
            {"name": e.name, "kind": e.kind, "description": e.description}
            for e in sorted(entries.values(), key=lambda e: e.name)
        ]}))
        return 0
    width = max(len(name) for name in entries)
    for name in sorted(entries):
        e = entries[name]
        print(f"{name.ljust(width)}  {e.kind:<8}  {e.description}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbikit",
        description="Exact orbifold Hodge diamonds and derived-equivalence invariant checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("diamond", help="assemble and print an orbifold Hodge diamond")
    d.add_argument("input", help="orbifold file path or catalog name")
    d.add_argument("--format", choices=["table", "json", "csv", "tex"], default="table")
    d.set_defaults(func=cmd_diamond)

    c = sub.add_parser("check", help="check symmetries and Gorenstein integrality")
    c.add_argument("input", help="orbifold file path or catalog name")
    c.add_argument("--serre", action="store_true", help="check Serre duality of the diamond")
    c.add_argument("--hodge", action="store_true", help="check conjugation symmetry of the diamond")
    c.add_argument("--gorenstein", action="store_true", help="check that all sector ages are integers")
    c.set_defaults(func=cmd_check)

    p = sub.add_parser("partners", help="compare derived-equivalence invariants of two inputs")
    p.add_argument("a", help="orbifold/diamond file path or catalog name")
    p.add_argument("b", help="orbifold/diamond file path or catalog name")
    p.add_argument("--strict-dim3", action="store_true", dest="strict_dim3",
                   help="require full equality when both sides are integer-graded of dimension <= 3")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_partners)

    r = sub.add_parser("reconstruct", help="rebuild an integer diamond (dim <= 3) from its column sums")
    r.add_argument("--dim", type=int, required=True)
    r.add_argument("--columns", required=True, help='e.g. "3:1,2:0,1:101,0:4"')
    r.add_argument("--h01", type=int, default=None, help="h^{0,1}; required for --dim 3")
    r.add_argument("--format", choices=["table", "json", "csv", "tex"], default="table")
    r.set_defaults(func=cmd_reconstruct)

    cat = sub.add_parser("catalog", help="list built-in and user catalog entries")
    cat.add_argument("--format", choices=["text", "json"], default="text")
    cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _fail(exc)
        return 2
    except DimensionMismatchError as exc:
        _fail(exc)
        return 4
    except UnsupportedDimensionError as exc:
        _fail(exc)
        return 5
    except InconsistentError as exc:
        _fail(exc)
        return 1
    except ValidationError as exc:
        _fail(exc)
        return 3


def _fail(exc: Exception) -> None:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
