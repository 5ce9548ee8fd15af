"""Reading Fano tables, writing Calabi-Yau tables, and comparing invariant triples."""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import warnings
from collections import defaultdict
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import IO, Any, Iterable, NamedTuple, Sequence, Union

from .core import (
    CYInvariants,
    FanoRecord,
    InputError,
    format_rational,
    parse_rational,
    split_ids,
)
from .invariants import UnprovenInvariantWarning, compute_all

__all__ = [
    "Format",
    "CatalogFormatError",
    "TopologicalTriple",
    "CatalogEntry",
    "TripleClass",
    "OUTPUT_COLUMNS",
    "load_fano_table",
    "read_fano_table",
    "bundled_fano_table",
    "load_candidates",
    "bundled_candidates",
    "load_background",
    "emit_cy_table",
    "dedup_triples",
    "match_candidates",
    "plot_points",
    "plot_tsv",
    "data_path",
]

log = logging.getLogger(__name__)

Source = Union[bytes, bytearray, IO[bytes], IO[str]]

OUTPUT_COLUMNS = (
    "cy_number",
    "H3",
    "c2H",
    "e",
    "h11",
    "h12",
    "fano_ids",
    "minus_K3",
    "N",
    "e_Y",
)
_INPUT_REQUIRED = ("fano_id", "minus_K3", "N", "e_Y")
_INPUT_OPTIONAL = ("h2_Y", "k", "cy_number")
# Columns of an emitted table that are recomputed, so they are accepted and ignored.
_DERIVED = ("H3", "c2H", "e", "h11", "h12")


class Format(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class CatalogFormatError(InputError):
    """A row could not be parsed; ``line`` is 1-based (a record index for JSON)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TopologicalTriple(NamedTuple):
    H3: int
    c2H: int
    e: int

    def __str__(self) -> str:
        return f"({self.H3}, {self.c2H}, {self.e})"


@dataclass(frozen=True)
class CatalogEntry:
    cy_number: int
    record: FanoRecord
    invariants: CYInvariants

    @classmethod
    def from_record(cls, cy_number: int, record: FanoRecord) -> CatalogEntry:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnprovenInvariantWarning)
            inv = compute_all(record)
        for note in inv.caveats:
            log.warning("CY #%d (%s): %s", cy_number, record.label, note)
        return cls(cy_number, record, inv)

    @property
    def fano_ids(self) -> tuple[str, ...]:
        return self.record.fano_ids

    @property
    def triple(self) -> TopologicalTriple:
        return TopologicalTriple(*self.invariants.triple)


@dataclass(frozen=True)
class TripleClass:
    triple: TopologicalTriple
    cy_numbers: tuple[int, ...]


def data_path(name: str) -> Path:
    """Path of a file bundled in ``cycover/data``."""
    return Path(str(resources.files("cycover") / "data" / name))


def _read_text(source: Source | str | Path) -> str:
    if isinstance(source, (bytes, bytearray)):
        raw: Any = bytes(source)
    elif isinstance(source, Path):
        raw = source.read_bytes()
    elif hasattr(source, "read"):
        raw = source.read()
    else:
        raise TypeError(f"expected bytes or a readable stream, got {type(source).__name__}")
    if isinstance(raw, bytes):
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CatalogFormatError(f"input is not UTF-8: {exc}") from None
    return raw


def _parse_int(text: Any, column: str, line: int) -> int:
    if isinstance(text, bool):
        raise CatalogFormatError(f"{column} must be an integer, got {text!r}", line)
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise CatalogFormatError(f"{column} must be an integer, got {text!r}", line) from None


def _build_entries(rows: Iterable[tuple[int, dict[str, Any]]]) -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    seen: dict[int, int] = {}
    for position, (line, row) in enumerate(rows, start=1):
        try:
            fano_ids = split_ids(row["fano_id"])
            minus_K3 = parse_rational(row["minus_K3"])
        except InputError as exc:
            raise CatalogFormatError(str(exc), line) from None
        kwargs = {
            "N": _parse_int(row["N"], "N", line),
            "e_Y": _parse_int(row["e_Y"], "e_Y", line),
        }
        for name in ("h2_Y", "k"):
            if row.get(name) not in (None, ""):
                kwargs[name] = _parse_int(row[name], name, line)
        if row.get("cy_number") not in (None, ""):
            cy_number = _parse_int(row["cy_number"], "cy_number", line)
        else:
            cy_number = position
        if cy_number in seen:
            raise CatalogFormatError(
                f"duplicate cy_number {cy_number} (first used at line {seen[cy_number]})", line
            )
        seen[cy_number] = line
        try:
            record = FanoRecord(fano_ids, minus_K3, **kwargs)
            entries.append(CatalogEntry.from_record(cy_number, record))
        except InputError as exc:
            raise CatalogFormatError(str(exc), line) from None
    return entries


def _normalize_header(header: Sequence[str], line: int) -> list[str]:
    names = [h.strip() for h in header]
    names = ["fano_id" if h == "fano_ids" else h for h in names]
    allowed = set(_INPUT_REQUIRED) | set(_INPUT_OPTIONAL) | set(_DERIVED)
    unknown = [h for h in names if h not in allowed]
    if unknown:
        raise CatalogFormatError(f"unknown column(s) {unknown}", line)
    missing = [h for h in _INPUT_REQUIRED if h not in names]
    if missing:
        raise CatalogFormatError(f"missing column(s) {missing}", line)
    return names


def _csv_rows(text: str) -> Iterable[tuple[int, dict[str, Any]]]:
    reader = csv.reader(io.StringIO(text))
    header: list[str] | None = None
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields) or fields[0].lstrip().startswith("#"):
            continue
        if header is None:
            header = _normalize_header(fields, line)
            continue
        if len(fields) != len(header):
            raise CatalogFormatError(f"expected {len(header)} fields, got {len(fields)}", line)
        yield line, dict(zip(header, (f.strip() for f in fields)))


def _json_rows(text: str) -> Iterable[tuple[int, dict[str, Any]]]:
    if not text.strip():
        return
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if isinstance(data, dict) and "entries" in data:
        data = data["entries"]
    if not isinstance(data, list):
        raise CatalogFormatError("expected a JSON list of records")
    for index, obj in enumerate(data, start=1):
        if not isinstance(obj, dict):
            raise CatalogFormatError("record is not an object", index)
        row = dict(obj)
        if "fano_ids" in row and "fano_id" not in row:
            row["fano_id"] = row.pop("fano_ids")
        missing = [c for c in _INPUT_REQUIRED if c not in row]
        if missing:
            raise CatalogFormatError(f"missing field(s) {missing}", index)
        yield index, row


def load_fano_table(source: Source, format: Format | str = Format.CSV) -> list[CatalogEntry]:
    """Parse a Fano table and compute every row's invariants.

    CSV needs a header ``fano_id,minus_K3,N,e_Y`` with optional ``h2_Y``,
    ``k`` and ``cy_number``; columns of an emitted Calabi-Yau table are also
    accepted so a table can be read back. cy_number defaults to input order.
    """
    fmt = Format(format)
    text = _read_text(source)
    if fmt is Format.CSV:
        return _build_entries(_csv_rows(text))
    if fmt is Format.JSON:
        return _build_entries(_json_rows(text))
    raise InputError(f"cannot read {fmt.value} input")


def guess_format(path: str | Path) -> Format:
    return Format.JSON if str(path).lower().endswith(".json") else Format.CSV


def read_fano_table(path: str | Path, format: Format | str | None = None) -> list[CatalogEntry]:
    path = Path(path)
    with path.open("rb") as fh:
        return load_fano_table(fh, format or guess_format(path))


def bundled_fano_table() -> list[CatalogEntry]:
    """The eighteen bundled Picard-number-one examples."""
    return read_fano_table(data_path("picard_one_fano.csv"))


def _row(entry: CatalogEntry) -> dict[str, Any]:
    inv, rec = entry.invariants, entry.record
    return {
        "cy_number": entry.cy_number,
        "H3": inv.H3,
        "c2H": inv.c2H,
        "e": inv.e,
        "h11": inv.h11,
        "h12": inv.h12,
        "fano_ids": list(rec.fano_ids),
        "minus_K3": rec.minus_K3,
        "N": rec.N,
        "e_Y": rec.e_Y,
    }


def _cells(entry: CatalogEntry) -> list[str]:
    row = _row(entry)
    row["fano_ids"] = ", ".join(row["fano_ids"])
    row["minus_K3"] = format_rational(row["minus_K3"])
    return [str(row[c]) for c in OUTPUT_COLUMNS]


def emit_cy_table(entries: Sequence[CatalogEntry], format: Format | str = Format.CSV) -> bytes:
    """Serialize entries deterministically (UTF-8, LF line endings)."""
    fmt = Format(format)
    if fmt is Format.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(OUTPUT_COLUMNS)
        for entry in entries:
            writer.writerow(_cells(entry))
        return buf.getvalue().encode("utf-8")
    if fmt is Format.JSON:
        rows = []
        for entry in entries:
            row = _row(entry)
            mk = row["minus_K3"]
            # Halves are exact in binary floating point.
            row["minus_K3"] = mk.numerator if mk.denominator == 1 else float(mk)
            rows.append(row)
        return (json.dumps(rows, indent=2) + "\n").encode("utf-8")
    table = [list(OUTPUT_COLUMNS)] + [_cells(e) for e in entries]
    widths = [max(len(r[i]) for r in table) for i in range(len(OUTPUT_COLUMNS))]
    left = {OUTPUT_COLUMNS.index("fano_ids")}
    lines = []
    for r in table:
        cells = [c.ljust(w) if i in left else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))]
        lines.append("  ".join(cells).rstrip())
    return ("\n".join(lines) + "\n").encode("utf-8")


def dedup_triples(entries: Iterable[CatalogEntry]) -> list[TripleClass]:
    """Group entries by (H3, c2H, e), classes sorted by triple."""
    classes: dict[TopologicalTriple, list[int]] = defaultdict(list)
    for entry in entries:
        classes[entry.triple].append(entry.cy_number)
    return [TripleClass(t, tuple(sorted(classes[t]))) for t in sorted(classes)]


def match_candidates(
    entries: Iterable[CatalogEntry], candidates: Iterable[Sequence[int]]
) -> list[tuple[TopologicalTriple, list[int]]]:
    """For each candidate triple, the cy_numbers with exactly that triple."""
    by_triple: dict[TopologicalTriple, list[int]] = defaultdict(list)
    for entry in entries:
        by_triple[entry.triple].append(entry.cy_number)
    out = []
    for cand in candidates:
        triple = TopologicalTriple(*cand)
        out.append((triple, sorted(by_triple.get(triple, []))))
    return out


def _numeric_rows(text: str, width: int, what: str) -> list[tuple[int, ...]]:
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.replace(",", " ").split()
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            if not rows and any(c.isalpha() for c in stripped):
                continue  # header
            raise CatalogFormatError(f"non-integer {what} row {stripped!r}", line_no) from None
        if len(values) < width:
            raise CatalogFormatError(f"expected {width} columns in {what} row", line_no)
        rows.append(values[:width])
    return rows


def load_candidates(source: Source) -> list[TopologicalTriple]:
    """Read a ``H3,c2H,e`` CSV; ``#`` lines are comments."""
    return [TopologicalTriple(*r) for r in _numeric_rows(_read_text(source), 3, "candidate")]


def bundled_candidates() -> list[TopologicalTriple]:
    return load_candidates(data_path("predicted_triples.csv").read_bytes())


def load_background(source: Source) -> list[tuple[int, int]]:
    """Read an optional two-column ``e  h11+h12`` file of background points."""
    return [(r[0], r[1]) for r in _numeric_rows(_read_text(source), 2, "background")]


def plot_points(entries: Iterable[CatalogEntry]) -> list[tuple[int, int]]:
    """(e, h11 + h12) for each entry."""
    return [(e.invariants.e, e.invariants.h11 + e.invariants.h12) for e in entries]


def plot_tsv(
    entries: Sequence[CatalogEntry], background: Sequence[tuple[int, int]] = ()
) -> str:
    lines = ["e\th11_plus_h12\tlabel"]
    for entry, (x, y) in zip(entries, plot_points(entries)):
        lines.append(f"{x}\t{y}\tCY#{entry.cy_number}")
    for x, y in background:
        lines.append(f"{x}\t{y}\tbackground")
    return "\n".join(lines) + "\n"
