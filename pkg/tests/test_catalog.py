import io
import json
import random

import pytest

from conftest import REFERENCE_ROWS
from cycover.catalog import (
    CatalogFormatError,
    Format,
    TopologicalTriple,
    bundled_candidates,
    data_path,
    dedup_triples,
    emit_cy_table,
    load_background,
    load_candidates,
    load_fano_table,
    match_candidates,
    plot_points,
    plot_tsv,
)

HEADER = b"fano_id,minus_K3,N,e_Y\n"


def load(body: bytes, fmt="csv"):
    return load_fano_table(HEADER + body if fmt == "csv" else body, fmt)


def test_single_row():
    [entry] = load(b"4.2,6,4,-2\n")
    inv = entry.invariants
    assert entry.cy_number == 1
    assert (inv.h11, inv.h12, inv.H3, inv.c2H, inv.e) == (1, 35, 12, 48, -68)


def test_two_fano_ids_and_fraction():
    [entry] = load(b'"1.2, 1.3",15/2,3,-2\n')
    assert entry.fano_ids == ("1.2", "1.3")
    assert entry.invariants.H3 == 15


def test_parse_error_reports_line():
    with pytest.raises(CatalogFormatError) as exc:
        load(b"4.2,6,4,-2\nx.y,abc,1,0\n")
    assert exc.value.line == 3


@pytest.mark.parametrize(
    "body",
    [
        b"4.2,6.25,4,-2\n",  # 2 * (-K^3) not integral
        b"4.2,6,4\n",  # missing field
        b"4.2,6,four,-2\n",
        b"4.2,6,4,-2,1,2\n",  # too many fields
    ],
)
def test_malformed_rows(body):
    with pytest.raises(CatalogFormatError) as exc:
        load(body)
    assert exc.value.line == 2


def test_bad_header():
    with pytest.raises(CatalogFormatError):
        load_fano_table(b"id,deg,N,e_Y\n4.2,6,4,-2\n")
    with pytest.raises(CatalogFormatError):
        load_fano_table(b"fano_id,minus_K3,N\n4.2,6,4\n")


def test_duplicate_cy_number():
    data = b"cy_number,fano_id,minus_K3,N,e_Y\n1,4.2,6,4,-2\n1,1.1,7,2,-12\n"
    with pytest.raises(CatalogFormatError, match="duplicate cy_number"):
        load_fano_table(data)


def test_optional_columns_and_comments():
    data = b"# comment\nfano_id,minus_K3,N,e_Y,h2_Y,k\n\n4.2,6,4,-2,1,1\n"
    [entry] = load_fano_table(data)
    assert entry.record.h2_Y == 1


def test_non_utf8():
    with pytest.raises(CatalogFormatError):
        load_fano_table(HEADER + b"\xff\xfe,6,4,-2\n")


def test_empty_inputs():
    assert load_fano_table(b"") == []
    assert load_fano_table(HEADER) == []
    assert load_fano_table(b"", Format.JSON) == []
    assert load_fano_table(b"[]", Format.JSON) == []


def test_text_stream_accepted():
    assert len(load_fano_table(io.StringIO("fano_id,minus_K3,N,e_Y\n4.2,6,4,-2\n"))) == 1


def test_json_input():
    data = json.dumps(
        [
            {"fano_id": "4.2", "minus_K3": 6, "N": 4, "e_Y": -2},
            {"fano_ids": ["1.2", "1.3"], "minus_K3": "7.5", "N": 3, "e_Y": -2},
        ]
    ).encode()
    a, b = load_fano_table(data, "json")
    assert a.invariants.e == -68
    assert b.fano_ids == ("1.2", "1.3")
    assert b.cy_number == 2


def test_json_errors():
    with pytest.raises(CatalogFormatError):
        load_fano_table(b"{not json", "json")
    with pytest.raises(CatalogFormatError) as exc:
        load_fano_table(b'[{"fano_id": "a", "minus_K3": 6, "N": 4, "e_Y": -2}, {"fano_id": "b"}]', "json")
    assert exc.value.line == 2


def test_bundled_table_matches_printed_values(bundled_entries):
    assert len(bundled_entries) == 18
    for entry, row in zip(bundled_entries, REFERENCE_ROWS):
        assert entry.cy_number == row[0]
        assert entry.triple == TopologicalTriple(*row[1:4])
        assert entry.fano_ids == row[4]


def test_dedup_full_table(bundled_entries):
    classes = dedup_triples(bundled_entries)
    assert len(classes) == 18
    assert all(len(c.cy_numbers) == 1 for c in classes)


def test_dedup_with_duplicate(bundled_entries):
    extra = load_fano_table(HEADER + b"4.2,6,4,-2\n")[0]
    dup = list(bundled_entries) + [type(extra)(19, extra.record, extra.invariants)]
    classes = dedup_triples(dup)
    assert len(classes) == 18
    assert [c.cy_numbers for c in classes if len(c.cy_numbers) > 1] == [(1, 19)]


def test_dedup_rows_2_and_3(bundled_entries):
    classes = dedup_triples(bundled_entries[1:3])
    assert [c.triple.e for c in classes] == [-100, -96]


def test_dedup_count_bound(bundled_entries):
    rng = random.Random(3)
    for _ in range(10):
        sample = rng.sample(bundled_entries, rng.randint(1, 18))
        assert len(dedup_triples(sample)) == len(sample)


def test_match_bundled_candidates(bundled_entries):
    result = match_candidates(bundled_entries, bundled_candidates())
    assert result == [
        (TopologicalTriple(14, 56, -100), [3]),
        (TopologicalTriple(21, 66, -100), [12]),
        (TopologicalTriple(25, 70, -100), [15]),
    ]


def test_match_unmatched_and_order(bundled_entries):
    cands = [(25, -70, -100), (14, 56, -100)]
    result = match_candidates(bundled_entries, cands)
    assert result == [((25, -70, -100), []), ((14, 56, -100), [3])]
    shuffled = list(reversed(bundled_entries))
    assert match_candidates(shuffled, cands) == result


def test_candidate_file_provenance_note():
    text = data_path("predicted_triples.csv").read_text()
    assert "(25, -70, -100)" in text
    assert "typo" in text
    assert load_candidates(text.encode())[2] == (25, 70, -100)


def test_emit_csv(bundled_entries):
    out = emit_cy_table(bundled_entries).decode()
    lines = out.splitlines()
    assert lines[0] == "cy_number,H3,c2H,e,h11,h12,fano_ids,minus_K3,N,e_Y"
    assert lines[1] == "1,12,48,-68,1,35,4.2,6,4,-2"
    assert lines[4] == '4,15,54,-76,1,39,"1.2, 1.3",7.5,3,-2'
    assert len(lines) == 19
    assert "\r" not in out


def test_emit_empty_and_single(bundled_entries):
    for fmt in Format:
        assert emit_cy_table([], fmt) == emit_cy_table([], fmt)
    assert emit_cy_table([]).decode() == "cy_number,H3,c2H,e,h11,h12,fano_ids,minus_K3,N,e_Y\n"
    assert len(emit_cy_table(bundled_entries[:1]).decode().splitlines()) == 2
    assert json.loads(emit_cy_table([], "json")) == []
    assert len(emit_cy_table([], "text").decode().splitlines()) == 1


def test_emit_json(bundled_entries):
    rows = json.loads(emit_cy_table(bundled_entries, "json"))
    assert rows[3]["fano_ids"] == ["1.2", "1.3"]
    assert rows[3]["minus_K3"] == 7.5
    assert list(rows[0]) == ["cy_number", "H3", "c2H", "e", "h11", "h12", "fano_ids", "minus_K3", "N", "e_Y"]


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_round_trip(bundled_entries, fmt):
    first = emit_cy_table(bundled_entries, fmt)
    again = emit_cy_table(load_fano_table(first, fmt), fmt)
    assert again == first


def test_emit_deterministic(bundled_entries):
    for fmt in Format:
        assert emit_cy_table(bundled_entries, fmt) == emit_cy_table(list(bundled_entries), fmt)


def test_plot_points(bundled_entries):
    pts = plot_points(bundled_entries)
    assert pts[0] == (-68, 36)
    assert pts[14] == (-100, 52)
    assert plot_points([]) == []
    for x, y in pts:
        assert y == 2 - x // 2


def test_plot_tsv(bundled_entries):
    text = plot_tsv(bundled_entries, [(-200, 110)])
    lines = text.splitlines()
    assert lines[0] == "e\th11_plus_h12\tlabel"
    assert lines[1] == "-68\t36\tCY#1"
    assert lines[-1] == "-200\t110\tbackground"


def test_load_background():
    data = b"# e h\ne h11+h12\n-200 110\n-150,80\n"
    assert load_background(data) == [(-200, 110), (-150, 80)]
    with pytest.raises(CatalogFormatError):
        load_background(b"-200 110\n1 x\n")
