"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 input or I/O error,
3 internal identity failure. Data goes to stdout (or ``--output``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import (
    CatalogEntry,
    Format,
    bundled_fano_table,
    data_path,
    emit_cy_table,
    guess_format,
    load_background,
    load_fano_table,
    plot_points,
    plot_tsv,
    read_fano_table,
)
from .core import ConsistencyError, CYCoverError, InputError, format_rational
from .degeneration import semistable_bookkeeping
from .divisors import cover_transcript
from .hilbert import embedding_dimension, group_polynomials
from .invariants import exclude_l2
from .plotting import render_svg
from .wps import (
    HypersurfaceSpec,
    SMOOTH,
    adjunction_degree,
    coordinate_singularities,
    double_cover_check,
    parse_weights,
    singular_strata,
    well_formed,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

log = logging.getLogger("cycover")

COMPARED = ("H3", "c2H", "e", "h11", "h12")


def _load(args: argparse.Namespace) -> list[CatalogEntry]:
    if args.input is None:
        return bundled_fano_table()
    if args.input == "-":
        return load_fano_table(sys.stdin.buffer, args.input_format or Format.CSV)
    return read_fano_table(args.input, args.input_format)


def _write(args: argparse.Namespace, payload: str | bytes) -> None:
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if getattr(args, "output", None) and args.output != "-":
        Path(args.output).write_bytes(data)
        return
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is not None:
        sys.stdout.flush()
        buffer.write(data)
        buffer.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))


def _rows(rows: list[dict], fmt: Format, columns: Sequence[str]) -> str:
    if fmt is Format.JSON:
        return json.dumps(rows, indent=2) + "\n"
    if fmt is Format.CSV:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()})
        return buf.getvalue()
    raise ValueError(fmt)


def cmd_compute(args: argparse.Namespace) -> int:
    entries = _load(args)
    _write(args, emit_cy_table(entries, args.format or Format.CSV))
    return EXIT_OK


def _read_expected(path: str) -> dict[int, dict[str, int]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    reader = csv.DictReader(line for line in io.StringIO(text) if not line.lstrip().startswith("#"))
    needed = ("cy_number",) + COMPARED
    if reader.fieldnames is None or any(c not in reader.fieldnames for c in needed):
        raise InputError(f"{path}: expected columns {', '.join(needed)}")
    expected: dict[int, dict[str, int]] = {}
    for row in reader:
        try:
            values = {c: int(row[c]) for c in needed}
        except (TypeError, ValueError):
            raise InputError(f"{path}: line {reader.line_num}: non-integer value") from None
        expected[values.pop("cy_number")] = values
    return expected


def cmd_verify_table(args: argparse.Namespace) -> int:
    entries = _load(args)
    expected = _read_expected(args.expected or str(data_path("picard_one_golden.csv")))
    computed = {e.cy_number: e for e in entries}
    diffs: list[str] = []
    for number in sorted(set(expected) | set(computed)):
        if number not in computed:
            diffs.append(f"CY #{number}: expected row missing from input")
            continue
        if number not in expected:
            diffs.append(f"CY #{number}: no expected row")
            continue
        inv = computed[number].invariants
        for col in COMPARED:
            got, want = getattr(inv, col), expected[number][col]
            if got != want:
                diffs.append(f"CY #{number}: {col} expected {want}, computed {got}")
    if diffs:
        _write(args, "\n".join(diffs) + "\n")
        log.error("%d mismatch(es)", len(diffs))
        return EXIT_MISMATCH
    _write(args, f"OK: {len(expected)} rows match ({', '.join(COMPARED)})\n")
    return EXIT_OK


def cmd_group(args: argparse.Namespace) -> int:
    entries = _load(args)
    by_number = {e.cy_number: e for e in entries}
    groups = group_polynomials((e.cy_number, e.invariants) for e in entries)
    fmt = Format(args.format or Format.TEXT)
    rows = []
    for poly, members in groups:
        inv = by_number[members[0]].invariants
        rows.append(
            {
                "cy_numbers": members,
                "H3": inv.H3,
                "c2H": inv.c2H,
                "a3": str(poly.a3),
                "a1": str(poly.a1),
                "embedding_dim": embedding_dimension(inv),
            }
        )
    if fmt is not Format.TEXT:
        _write(args, _rows(rows, fmt, list(rows[0]) if rows else ["cy_numbers"]))
        return EXIT_OK
    lines = []
    for row in rows:
        members = "{" + ", ".join(str(n) for n in row["cy_numbers"]) + "}"
        lines.append(
            f"{members:<10} H3={row['H3']:<3} c2H={row['c2H']:<3} "
            f"chi(O(nH)) = ({row['a3']}) n^3 + ({row['a1']}) n   |8H| -> P^{row['embedding_dim']}"
        )
    pairs = sum(1 for r in rows if len(r["cy_numbers"]) > 1)
    singles = len(rows) - pairs
    lines.append(f"{pairs} non-trivial group(s), {singles} singleton(s)")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_exclude_l2(args: argparse.Namespace) -> int:
    entries = _load(args)
    lines, ambiguous = [], []
    for entry in entries:
        rec = entry.record
        v = exclude_l2(rec)
        lines.append(
            f"CY #{entry.cy_number} ({rec.label}; -K^3={format_rational(rec.minus_K3)}, N={rec.N}): "
            f"{v.verdict}  [-K^3/4 integral: {'yes' if v.h3_over_4_integral else 'no'}, "
            f"(-K^3-N)/8 integral: {'yes' if v.chi_defect_integral else 'no'}]"
        )
        if not v.forced:
            ambiguous.append(entry.cy_number)
    if ambiguous:
        lines.append("Ambiguous: " + ", ".join(f"CY #{n}" for n in ambiguous))
    _write(args, "\n".join(lines) + "\n")
    return EXIT_MISMATCH if ambiguous else EXIT_OK


def cmd_wps(args: argparse.Namespace) -> int:
    P = parse_weights(args.weights)
    lines = [f"{P}: dimension {P.dim}"]
    if not well_formed(P):
        lines.append("well-formed: no")
        _write(args, "\n".join(lines) + "\n")
        return EXIT_MISMATCH
    lines.append("well-formed: yes")
    lines.append("coordinate points:")
    for i, t in coordinate_singularities(P):
        lines.append(f"  {i}: {t}" if t is not SMOOTH else f"  {i}: smooth")
    for stratum in singular_strata(P):
        lines.append(f"singular stratum on coordinates {list(stratum)}")
    status = EXIT_OK
    if args.degree is not None:
        h = HypersurfaceSpec(P, args.degree)
        a = adjunction_degree(h)
        note = " (Calabi-Yau balance)" if a == 0 else ""
        lines.append(f"degree {args.degree} hypersurface: adjunction degree {a}{note}")
    if args.branch_degree is not None:
        report = double_cover_check(P, args.branch_degree)
        lines.append(f"double cover branched in degree {args.branch_degree}:")
        lines.extend("  " + line for line in report.lines())
        if not report.verdict:
            status = EXIT_MISMATCH
    _write(args, "\n".join(lines) + "\n")
    return status


def cmd_cover_calculus(args: argparse.Namespace) -> int:
    steps = cover_transcript(args.dim)
    lines = [f"dimension n = {args.dim}, m = {(args.dim - 1) // 2}"]
    lines.extend(str(s) for s in steps)
    ok = all(s.ok for s in steps)
    lines.append(f"g*K_X = {steps[-1].expr}" if ok else "identity check FAILED")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_plot(args: argparse.Namespace) -> int:
    if not args.output:
        raise InputError("plot needs --output")
    entries = _load(args)
    background: list[tuple[int, int]] = []
    if args.background:
        try:
            background = load_background(Path(args.background).read_bytes())
        except OSError as exc:
            raise InputError(f"cannot read {args.background}: {exc.strerror}") from None
    if args.output.lower().endswith(".svg"):
        labels = [f"CY #{e.cy_number}" for e in entries]
        payload = render_svg(plot_points(entries), labels, background)
    else:
        payload = plot_tsv(entries, background)
    _write(args, payload)
    return EXIT_OK


def cmd_degeneration(args: argparse.Namespace) -> int:
    trace = semistable_bookkeeping(args.h2, args.k, args.m)
    _write(args, "\n".join(trace.lines()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in Format], help="output format")
    common.add_argument("--input", help="Fano table (CSV or JSON; '-' for stdin). Default: bundled table")
    common.add_argument("--input-format", choices=["csv", "json"], help="override input format detection")
    common.add_argument("--output", help="write data here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="cycover",
        description="Invariants of Calabi-Yau double covers of Q-Fano 3-folds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute the Calabi-Yau table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify-table", parents=[common], help="compare against an expected table")
    p.add_argument("--expected", help="expected CSV (default: bundled golden table)")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("group", parents=[common], help="group by Hilbert polynomial")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("exclude-l2", parents=[common], help="integrality test ruling out H = -pi^*K/2")
    p.set_defaults(func=cmd_exclude_l2)

    p = sub.add_parser("wps", parents=[common], help="weighted projective space report")
    p.add_argument("--weights", required=True, help="comma-separated weights, e.g. 1,1,1,2")
    p.add_argument("--degree", type=int, help="hypersurface degree for the adjunction check")
    p.add_argument("--branch-degree", type=int, help="branch divisor degree for the double-cover check")
    p.set_defaults(func=cmd_wps)

    p = sub.add_parser("cover-calculus", parents=[common], help="divisor identities of the cover")
    p.add_argument("--dim", type=int, required=True, help="odd dimension n >= 3")
    p.set_defaults(func=cmd_cover_calculus)

    p = sub.add_parser("plot", parents=[common], help="scatter data of e vs h11 + h12")
    p.add_argument("--background", help="optional two-column file of background points")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("degeneration", parents=[common], help="h11 bookkeeping of the degeneration")
    p.add_argument("--h2", type=int, required=True, help="h^2(Y)")
    p.add_argument("--k", type=int, required=True, help="rank of H^2(Y) -> H^2(D)")
    p.add_argument("--m", type=int, required=True, help="number of singular points")
    p.set_defaults(func=cmd_degeneration)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (ConsistencyError, AssertionError) as exc:
        print(f"cycover: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, CYCoverError) as exc:
        print(f"cycover: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"cycover: {exc.filename or ''}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
