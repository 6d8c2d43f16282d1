import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from knotile.cli import format_record, main, parse_record
from knotile.invariants import bracket, default_table, format_identification, identify, jones
from knotile.laurent import LaurentPoly
from knotile.trace import trace

from conftest import MOSAICS, fixture


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", MOSAICS / "unknot-t4.mosaic")
    assert code == 0
    assert parse_record(out)["valid"] == "true"


def test_validate_failure(capsys, tmp_path):
    bad = tmp_path / "bad.mosaic"
    bad.write_text("21\n33\n")
    code, out, _ = run(capsys, "validate", bad)
    assert code == 1
    assert parse_record(out)["valid"] == "false"


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.mosaic"
    bad.write_text("21\n3\n")
    assert run(capsys, "validate", bad)[0] == 2
    assert run(capsys, "info", tmp_path / "missing.mosaic")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "search", "--knot", "3_1")[0] == 2


def test_info_trefoil(capsys):
    code, out, _ = run(capsys, "info", MOSAICS / "trefoil-t12.mosaic")
    assert code == 0
    rec = parse_record(out)
    assert rec["tiles"] == "12"
    assert rec["crossings"] == "3"
    assert rec["identification"].rstrip("*") == "3_1"


def test_info_round_trip(capsys):
    m = fixture("7_4-t17")
    _, out, _ = run(capsys, "info", MOSAICS / "7_4-t17.mosaic")
    assert "\n" not in out.strip()
    rec = parse_record(out)
    d = trace(m).diagram
    assert rec["mosaic"] == m.to_line()
    assert int(rec["size"]) == 5
    assert int(rec["components"]) == 1
    assert rec["reduced"] == "true"
    assert LaurentPoly.parse(rec["bracket"]) == bracket(d)
    assert LaurentPoly.parse(rec["jones"]) == jones(d)
    assert rec["identification"] == format_identification(identify(d, default_table()))


def test_info_not_connected(capsys, tmp_path):
    bad = tmp_path / "bad.mosaic"
    bad.write_text("20\n34\n")
    assert run(capsys, "info", bad)[0] == 1


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", MOSAICS / "unknot-t4.mosaic")
    assert code == 0 and "╭" in out
    target = tmp_path / "t.svg"
    code, out, _ = run(capsys, "render", MOSAICS / "trefoil-t12.mosaic", "--format", "svg", "-o", target)
    assert code == 0 and out == ""
    root = ET.parse(target).getroot()
    assert len(root.findall("{http://www.w3.org/2000/svg}path")) == 16  # 8 arcs, one double arc, three crossings


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--knot", "7_4", "--size", "5")
    assert code == 0
    assert parse_record(out)["tile_number"] == "17"


def test_search_not_realizable(capsys):
    code, out, _ = run(capsys, "search", "--knot", "3_1", "--size", "3")
    assert code == 1
    assert parse_record(out)["tile_number"] == "not-realizable"


def test_search_unknown_knot(capsys):
    code, _, err = run(capsys, "search", "--knot", "42_1", "--size", "4")
    assert code == 2
    assert "unknown knot" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--size", "3", "--canonical")
    assert code == 0
    lines = out.split()
    assert lines[0] == "000/000/000"
    assert len(lines) == len(set(lines))
    code, out, _ = run(capsys, "enumerate", "--size", "4", "--max-tiles", "12", "--knots-only",
                       "--min-crossings", "3", "--identify", "--limit", "3")
    records = [parse_record(line) for line in out.splitlines()]
    assert len(records) == 3
    assert all(r["components"] == "1" for r in records)


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--size", "4", "--upto")
    assert code == 0
    assert out.splitlines() == ["size,count", "1,1", "2,2", "3,22", "4,2594"]


def test_fill_layout(capsys):
    code, out, _ = run(capsys, "fill-layout", "--layout", "four-12", "--knots-only", "--identify")
    assert code == 0
    assert any(parse_record(line)["identification"].startswith("3_1") for line in out.splitlines())
    code, out, _ = run(capsys, "fill-layout", "--layout", "five-17", "--summary")
    rows = [line.split(",") for line in out.splitlines()]
    assert rows[0] == ["name", "tile_number", "fills", "crossings", "witness"]
    assert {r[0] for r in rows[1:]} >= {"4_1", "5_1", "5_2", "6_1", "6_2", "7_4"}


def test_fill_layout_missing(capsys):
    assert run(capsys, "fill-layout", "--layout", "nope")[0] == 2


def test_layouts(capsys):
    code, out, _ = run(capsys, "layouts", "--size", "5")
    assert code == 0
    assert parse_record(out)["name"] == "five-17"
    code, out, _ = run(capsys, "layouts", "--profiles", "6")
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["22", "24", "27", "32"]


def test_verify_bounds(capsys, tmp_path):
    csv_file = tmp_path / "t.csv"
    csv_file.write_text("knot,m,t\n3_1,4,12\n6_3,6,22\n")
    code, out, _ = run(capsys, "verify-bounds", csv_file)
    assert code == 0
    assert out.splitlines()[1] == "3_1,4,12,12,12,pass"
    code, out, _ = run(capsys, "verify-bounds", "--triple", "x,5,16")
    assert code == 1
    assert run(capsys, "verify-bounds", "--triple", "x,3,7")[0] == 2
    assert run(capsys, "verify-bounds", "--triple", "x,five,7")[0] == 2
    assert run(capsys, "verify-bounds")[0] == 2


def test_records():
    rec = {"a": 1, "b": "x y"}
    assert parse_record(format_record(rec)) == {"a": "1", "b": "xy"}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "knotile.cli", "validate", str(MOSAICS / "unknot-t4.mosaic")],
                          capture_output=True, text=True)
    assert proc.returncode == 0


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "enumerate", "--size", "4", "--max-tiles", "8")[1] for _ in range(2)}
    assert len(outs) == 1
