"""Command-line surface: subcommands, formats, exit codes."""

import json

import pytest

from hiccup.cli import run
from hiccup.engine import SequenceParams, generate
from hiccup.oeis import emit_bfile


@pytest.fixture
def cli(capsys):
    def invoke(*args):
        code = run(list(args))
        cap = capsys.readouterr()
        return code, cap.out, cap.err

    return invoke


# ------------------------------------------------------------------- gen

def test_gen_bfile(cli):
    code, out, _ = cli("gen", "--x", "3", "--y", "1", "--z", "2", "-n", "5",
                       "--format", "bfile")
    assert code == 0
    assert out == "1 3\n2 5\n3 6\n4 8\n5 9\n"


def test_gen_plain_and_csv(cli):
    code, out, _ = cli("gen", "--x", "3", "--y", "1", "--z", "2", "-n", "3")
    assert code == 0 and out == "3\n5\n6\n"
    code, out, _ = cli("gen", "--x", "3", "--y", "1", "--z", "2", "-n", "3",
                       "--format", "csv")
    assert code == 0 and out == "n,value\n1,3\n2,5\n3,6\n"


def test_gen_json_schema(cli):
    code, out, _ = cli("gen", "--x", "3", "--y", "1", "--z", "2", "-n", "5",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "result", "witnesses"}
    assert doc["result"]["values"] == [3, 5, 6, 8, 9]


def test_gen_missing_arg_is_usage_error(cli):
    code, _, err = cli("gen", "--x", "3", "--y", "1", "-n", "5")
    assert code == 2
    assert "--z" in err


def test_gen_zero_terms_is_usage_error(cli):
    code, _, err = cli("gen", "--x", "3", "--y", "1", "--z", "2", "-n", "0")
    assert code == 2
    assert "n_terms" in err


def test_unknown_command(cli):
    assert cli("nope")[0] == 2
    assert cli()[0] == 2


# ----------------------------------------------------------- closed-form

def test_closed_form_beatty(cli):
    code, out, _ = cli("closed-form", "--family", "A", "--x", "1", "--Z", "2",
                       "-n", "4")
    assert code == 0 and out == "1\n3\n6\n8\n"


def test_closed_form_metafib(cli):
    code, out, _ = cli("closed-form", "--family", "metafib", "--k", "2", "-n", "8")
    assert code == 0
    assert out == "3\n6\n7\n10\n13\n14\n15\n18\n"


def test_closed_form_lattice(cli):
    code, out, _ = cli("closed-form", "--family", "ramsey", "-n", "3")
    assert code == 0 and out == "3\n5\n6\n"


def test_closed_form_missing_params(cli):
    assert cli("closed-form", "--family", "A", "-n", "4")[0] == 2
    assert cli("closed-form", "--family", "metafib", "-n", "4")[0] == 2


# ---------------------------------------------------------------- verify

def test_verify_beatty_match(cli):
    code, out, _ = cli("verify", "beatty", "--family", "A", "--x", "1",
                       "--Z", "2", "-n", "1000")
    assert code == 0
    assert out == "MATCH 1..1000\n"


def test_verify_beatty_mismatch_witness(cli):
    # x outside the proved range diverges immediately
    code, out, _ = cli("verify", "beatty", "--family", "A", "--x", "5",
                       "--Z", "2", "-n", "10")
    assert code == 1
    assert out == "MISMATCH at n=1 (formula 4, engine 5)\n"


def test_verify_beatty_mismatch_json_witnesses(cli):
    code, out, _ = cli("verify", "beatty", "--family", "A", "--x", "5",
                       "--Z", "2", "-n", "10", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["witnesses"][0] == {"n": 1, "formula": 4, "engine": 5}


def test_verify_beatty_grid(cli):
    code, out, _ = cli("verify", "beatty", "-n", "200")
    assert code == 0
    lines = out.strip().splitlines()
    # 35 A cells + 30 B cells + summary
    assert len(lines) == 66
    assert lines[-1] == "65/65 checks passed"
    assert all("PASS" in ln for ln in lines[:-1])


def test_verify_lattice(cli):
    code, out, _ = cli("verify", "lattice", "-n", "500")
    assert code == 0
    assert "3/3 checks passed" in out


def test_verify_single_lattice_form(cli):
    code, out, _ = cli("verify", "lattice", "--which", "hex", "-n", "500")
    assert code == 0
    assert out == "MATCH 1..500\n"


def test_verify_hits_cell(cli):
    code, out, _ = cli("verify", "hits", "--x", "3", "--y", "1", "--z", "2",
                       "-n", "2000")
    assert code == 0
    assert "identity holds" in out


def test_verify_recurrence_cell(cli):
    code, out, _ = cli("verify", "recurrence", "--x", "2", "--z", "2", "-n", "200")
    assert code == 0


def test_verify_metafib(cli):
    code, out, _ = cli("verify", "metafib", "--k", "2", "-n", "300")
    assert code == 0


def test_verify_morphic(cli):
    code, out, _ = cli("verify", "morphic", "-n", "2000")
    assert code == 0


def test_verify_all_small_horizon(cli):
    code, out, _ = cli("verify", "all", "-n", "150")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")


# --------------------------------------------------------------- density

def test_density_output(cli):
    code, out, _ = cli("density", "--x", "1", "--y", "3", "--z", "2",
                       "-n", "1000")
    assert code == 0
    assert "ratio a(1000)/1000 = 2413/1000" in out
    assert "1 + sqrt(2)" in out
    assert "gap = 0.0012135623" in out


def test_density_domain_error(cli):
    code, _, err = cli("density", "--x", "1", "--y", "2", "--z", "2", "-n", "100")
    assert code == 2
    assert err


def test_density_json(cli):
    code, out, _ = cli("density", "--x", "1", "--y", "3", "--z", "2",
                       "-n", "1000", "--format", "json")
    doc = json.loads(out)
    assert doc["result"]["ratio"] == "2413/1000"
    assert doc["result"]["gap"].startswith("0.0012135623")


# ------------------------------------------------------------ crosscheck

def test_crosscheck_fixture(cli):
    code, out, _ = cli("crosscheck", "--id", "A000201")
    assert code == 0
    assert out == "A000201: matched, shift 0, 300 terms compared\n"


def test_crosscheck_explicit_params_against_file(cli, tmp_path):
    t = generate(SequenceParams(3, 1, 2), 60)
    path = tmp_path / "ref.txt"
    path.write_text(emit_bfile(t))
    code, out, _ = cli("crosscheck", "--bfile", str(path), "--x", "3",
                       "--y", "1", "--z", "2")
    assert code == 0 and "matched" in out


def test_crosscheck_detects_divergence(cli, tmp_path):
    t = generate(SequenceParams(3, 1, 2), 60)
    lines = emit_bfile(t).splitlines()
    lines[29] = "30 999"
    (tmp_path / "bad.txt").write_text("\n".join(lines) + "\n")
    code, out, _ = cli("crosscheck", "--bfile", str(tmp_path / "bad.txt"),
                       "--x", "3", "--y", "1", "--z", "2")
    assert code == 1
    assert "MISMATCH" in out and "(30, 999, 39)" in out


def test_crosscheck_usage_errors(cli):
    assert cli("crosscheck")[0] == 2              # no reference given
    assert cli("crosscheck", "--id", "A999999")[0] == 2   # unknown id
    assert cli("crosscheck", "--bfile", "/nonexistent")[0] == 2


# --------------------------------------------------------------- morphic

def test_morphic_word(cli):
    code, out, _ = cli("morphic", "-n", "6")
    assert code == 0 and out == "011101\n"


def test_morphic_positions(cli):
    code, out, _ = cli("morphic", "-n", "16", "--positions-of", "0")
    assert code == 0 and out == "1\n5\n9\n13\n15\n"


def test_morphic_custom_rules(cli):
    code, out, _ = cli("morphic", "--rule0", "01", "--rule1", "1", "-n", "4")
    assert code == 0 and out == "0111\n"


def test_morphic_bad_rules(cli):
    assert cli("morphic", "--rule0", "10", "-n", "4")[0] == 2


# ----------------------------------------------------------------- table

def test_table_plain(cli):
    code, out, _ = cli("table")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 26
    assert lines[0].startswith("A000201")


def test_table_csv(cli):
    code, out, _ = cli("table", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "oeis_id,j,x,y,z"
    assert len(lines) == 27


def test_table_bfile_unsupported(cli):
    assert cli("table", "--format", "bfile")[0] == 2


def test_json_schema_everywhere(cli):
    cases = [
        ("gen", "--x", "1", "--y", "2", "--z", "1", "-n", "3"),
        ("closed-form", "--family", "B", "--x", "0", "--Z", "2", "-n", "3"),
        ("verify", "lattice", "-n", "50"),
        ("density", "--x", "1", "--y", "3", "--z", "2", "-n", "50"),
        ("crosscheck", "--id", "A045412"),
        ("morphic", "-n", "8"),
        ("table",),
    ]
    for args in cases:
        code, out, _ = cli(*args, "--format", "json")
        assert code == 0, args
        doc = json.loads(out)
        assert set(doc) == {"command", "params", "result", "witnesses"}, args
