import json

import pytest

from trominoes.board import Tiling, validate_tiling
from trominoes.cli import main, parse_missing, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_bad_pair(capsys):
    code, out, _ = run(capsys, "decide", "--rows", "7", "--cols", "8", "--missing", "2,1,2,2")
    assert code == 1
    assert json.loads(out)["reason"] == "BAD_PAIR"


def test_decide_tileable(capsys):
    code, out, _ = run(capsys, "decide", "--rows", "7", "--cols", "8", "--missing", "4,4,4,5")
    assert code == 0 and json.loads(out)["tileable"]


def test_count_mixed(capsys):
    code, out, _ = run(capsys, "count", "--rows", "2", "--cols", "7", "--mix", "tromino+1domino")
    assert code == 0 and out.strip() == "20"


def test_count_domino(capsys):
    assert run(capsys, "count", "--rows", "4", "--cols", "4", "--mix", "domino")[1].strip() == "36"


def test_count_mixed_rejects_missing(capsys):
    code, _, err = run(capsys, "count", "--rows", "2", "--cols", "7", "--missing", "1,1", "--mix", "domino")
    assert code == 2 and "error" in err


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "--name", "G", "--terms", "3")
    assert code == 0 and out.split() == ["1", "4", "18"]


def test_gf_harness(capsys):
    code, out, _ = run(capsys, "gf", "--name", "F-harness", "--terms", "4")
    assert code == 0 and json.loads(out)["status"] in ("MATCH", "DISCREPANCY")


def test_tile_and_render_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "tile", "--rows", "7", "--cols", "8", "--missing", "4,4,4,5")
    assert code == 0
    t = Tiling.from_dict(json.loads(out))
    assert validate_tiling(t)
    path = tmp_path / "t.json"
    path.write_text(out)
    code, art, _ = run(capsys, "render", "--input", str(path))
    assert code == 0
    code, direct, _ = run(capsys, "tile", "--rows", "7", "--cols", "8", "--missing", "4,4,4,5", "--format", "ascii")
    assert art == direct


def test_tile_steps(capsys):
    code, out, _ = run(capsys, "tile", "--rows", "4", "--cols", "14", "--missing", "2,6,3,6", "--steps")
    assert json.loads(out)["steps"][0]["rule"] == "JOIN_REPAIR"


def test_tile_untileable(capsys):
    code, out, _ = run(capsys, "tile", "--rows", "2", "--cols", "4", "--missing", "1,2,2,2")
    assert code == 1 and not json.loads(out)["tileable"]


def test_tile_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO('{"rows": 2, "cols": 3, "missing": []}'))
    code, out, _ = run(capsys, "tile", "--input", "-")
    assert code == 0 and len(json.loads(out)["placements"]) == 2


def test_tile_svg(capsys):
    code, out, _ = run(capsys, "tile", "--rows", "4", "--cols", "5", "--missing", "1,4,1,5", "--format", "svg")
    assert out.count('<rect class="cell"') == 18


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--rows", "2", "--cols", "3")
    assert code == 0 and len(json.loads(out)) == 2


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--rows", "9", "--cols", "9", "--cap", "48")
    assert code == 2 and "CAP" in err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "4", "5")
    doc = json.loads(out)
    assert code == 0 and doc["holds"] and doc["count"] == 64


def test_bad_pairs(capsys):
    code, out, _ = run(capsys, "bad-pairs", "4", "8")
    doc = json.loads(out)
    assert doc["table"] == "QUADREC" and len(doc["pairs"]) == 14


def test_bad_pairs_all(capsys):
    code, out, _ = run(capsys, "bad-pairs", "8", "4", "--all-pairs")
    assert len(json.loads(out)["pairs"]) == 14 + 32


def test_oracle(capsys):
    assert run(capsys, "oracle", "solve", "--rows", "3", "--cols", "3")[0] == 1
    code, out, _ = run(capsys, "oracle", "solve", "--rows", "2", "--cols", "3")
    assert code == 0 and validate_tiling(Tiling.from_dict(json.loads(out)))


def test_oracle_cell_cap(capsys):
    code, _, err = run(capsys, "oracle", "solve", "--rows", "6", "--cols", "6", "--cap", "20")
    assert code == 2


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--quick")
    doc = json.loads(out)
    assert code == 0 and doc["ok"], [c["id"] for c in doc["checks"] if not c["passed"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["decide", "--rows", "7"],
        ["decide", "--rows", "7", "--cols", "8", "--missing", "1,2,3"],
        ["decide", "--rows", "7", "--cols", "8", "--missing", "a,b"],
        ["decide", "--rows", "7", "--cols", "8", "--missing", "9,9"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as e:
        main(["gf", "--name", "nope"])
    assert e.value.code == 2


def test_render_rejects_invalid(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"board": {"rows": 2, "cols": 3, "missing": []}, "placements": []}))
    assert run(capsys, "render", "--input", str(path))[0] == 1


def test_parse_missing():
    assert parse_missing("1,2, 3,4") == [(1, 2), (3, 4)]
    assert parse_missing(None) == []
    with pytest.raises(UsageError):
        parse_missing("1")
