"""Tests for the command-line frontend."""

import json

import pytest

from hermgrass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def body(stdout: str) -> list[str]:
    """Output lines with the field header stripped."""
    lines = stdout.strip().splitlines()
    assert lines[0].startswith("#")
    return lines[1:]


def test_params(capsys):
    code, out, _ = run(capsys, "--m", "5", "params")
    assert code == 0
    assert body(out) == ["N=297 K=10 dmin=192 points=165 lines=297"]


def test_header_names_modulus(capsys):
    _, out, _ = run(capsys, "--m", "5", "params")
    assert out.splitlines()[0] == "# field p=2 e=1 order=4 modulus=1,1,1"


def test_params_structured(capsys):
    code, out, _ = run(capsys, "--m", "5", "--format", "structured", "params")
    assert code == 0
    header, record = (json.loads(ln) for ln in out.strip().splitlines())
    assert header["field"]["order"] == 4
    assert record == {"N": 297, "K": 10, "d_min": 192,
                      "points": 165, "lines": 297}


def test_point_round_trip(capsys):
    code, out, _ = run(capsys, "--m", "5", "unrank-point", "--index", "7")
    assert code == 0
    vec = body(out)[0]
    code, out, _ = run(capsys, "--m", "5", "rank-point", "--vector", vec)
    assert code == 0
    assert body(out) == ["7"]


def test_line_round_trip(capsys):
    code, out, _ = run(capsys, "--m", "5", "unrank-line", "--index", "0")
    assert code == 0
    mat = body(out)[0]
    code, out, _ = run(capsys, "--m", "5", "rank-line", "--matrix", mat)
    assert code == 0
    assert body(out) == ["0"]


def test_count_prefix(capsys):
    code, out, _ = run(capsys, "--m", "5", "count-prefix",
                       "--kind", "point", "--prefix", "1,0,0")
    assert code == 0
    assert body(out) == ["6"]
    code, out, _ = run(capsys, "--m", "5", "count-prefix",
                       "--kind", "line", "--prefix", "0,1;0,0")
    assert code == 0
    assert body(out) == ["24"]


def test_encode_decode_files(tmp_path, capsys):
    msg = tmp_path / "msg.txt"
    msg.write_text("\n".join("120301") + "\n")
    code, out, _ = run(capsys, "--m", "4", "encode", "--message-file",
                       str(msg))
    assert code == 0
    codeword = body(out)
    assert len(codeword) == 27
    cw = tmp_path / "cw.txt"
    cw.write_text("\n".join(codeword) + "\n")
    code, out, _ = run(capsys, "--m", "4", "decode", "--codeword-file",
                       str(cw))
    assert code == 0
    assert body(out) == list("120301")


def test_component_and_csv_input(tmp_path, capsys):
    msg = tmp_path / "msg.csv"
    msg.write_text("1,2,0,3,0,1\n")
    code, out, _ = run(capsys, "--m", "4", "encode", "--message-file",
                       str(msg))
    codeword = body(out)
    code, out, _ = run(capsys, "--m", "4", "component", "--message-file",
                       str(msg), "--index", "5")
    assert code == 0
    assert body(out) == [codeword[4]]


def test_correct_subcommand(tmp_path, capsys):
    msg = tmp_path / "msg.txt"
    msg.write_text(",".join("123012301230123"[:15]) + "\n")
    code, out, _ = run(capsys, "--m", "6", "encode", "--message-file",
                       str(msg))
    codeword = [int(x) for x in body(out)]
    x = 17
    truth = codeword[x - 1]
    codeword[x - 1] = (truth + 1) % 4
    rec = tmp_path / "rec.txt"
    rec.write_text("\n".join(map(str, codeword)) + "\n")
    code, out, _ = run(capsys, "--m", "6", "correct", "--received-file",
                       str(rec), "--indices", str(x))
    assert code == 0
    assert body(out) == [f"{x} {truth}"]


def test_correct_unsupported_m(tmp_path, capsys):
    rec = tmp_path / "rec.txt"
    rec.write_text("\n".join("0" * 297) + "\n")
    code, _, err = run(capsys, "--m", "5", "correct", "--received-file",
                       str(rec), "--indices", "1")
    assert code == 1
    assert "error" in err


def test_gen_matrix(capsys):
    code, out, _ = run(capsys, "--m", "4", "gen-matrix")
    assert code == 0
    rows = body(out)
    assert len(rows) == 6
    assert all(len(r.split(",")) == 27 for r in rows)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--m", "5", "no-such-command"])
    assert exc.value.code == 1
    code, _, err = run(capsys, "--m", "5", "rank-point", "--vector", "x,y")
    assert code == 1
    assert "malformed" in err


def test_guard_violation_exit_code(capsys):
    code, _, err = run(capsys, "--p", "5", "--e", "1", "--m", "8",
                       "gen-matrix")
    assert code == 2
    assert "guard" in err


def test_selftest_fast(capsys):
    code, out, _ = run(capsys, "--m", "5", "selftest", "--level", "fast")
    assert code == 0
    lines = body(out)
    assert lines
    assert all("[agree]" in ln for ln in lines)


def test_modulus_override(capsys):
    # x^2 + x + 2 is irreducible over GF(3)
    code, out, _ = run(capsys, "--p", "3", "--m", "4",
                      "--modulus", "2,1,1", "params")
    assert code == 0
    assert "modulus=2,1,1" in out.splitlines()[0]
