import json

import pytest

from acx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_small_word(self, capsys):
        code, out, _ = run(capsys, "compute", "0110", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["value"] == 3
        assert data["certificate"]["states_ruled_out"] == 2
        assert data["witness"]["initial"] == 0

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "compute", "0101")
        assert code == 0
        assert "A_N = 2" in out

    def test_dot_export(self, capsys, tmp_path):
        path = tmp_path / "witness.dot"
        code, _, _ = run(capsys, "compute", "0101", "--dot", str(path))
        assert code == 0
        assert "digraph" in path.read_text()

    def test_byte_identical_json(self, capsys):
        _, first, _ = run(capsys, "compute", "01011", "--json")
        _, second, _ = run(capsys, "compute", "01011", "--json")
        assert first == second

    def test_jobs_flag_matches_sequential(self, capsys):
        _, sequential, _ = run(capsys, "compute", "010011010011", "--json")
        _, parallel, _ = run(capsys, "compute", "010011010011", "--json", "--jobs", "2")
        assert sequential == parallel


class TestWordCommands:
    def test_power(self, capsys):
        code, out, _ = run(capsys, "power", "0110", "--exp", "3/2")
        assert code == 0 and out.strip() == "011001"

    def test_power_bad_exponent(self, capsys):
        code, _, err = run(capsys, "power", "011", "--exp", "3/2")
        assert code == 1 and "error" in err

    def test_squarefree(self, capsys):
        code, out, _ = run(capsys, "squarefree", "0102012021012102010212")
        assert code == 0 and out.strip() == "squarefree"
        code, out, _ = run(capsys, "squarefree", "00")
        assert code == 0 and "start=0 period=1 length=2" in out

    def test_overlapfree(self, capsys):
        code, out, _ = run(capsys, "overlapfree", "12312301234112341")
        assert code == 0 and out.strip() == "overlap-free"
        code, out, _ = run(capsys, "overlapfree", "000")
        assert out.strip() == "contains an overlap"

    def test_shuffle(self, capsys):
        code, out, _ = run(capsys, "shuffle", "01", "23")
        assert code == 0 and out.strip() == "0213"

    def test_morphism(self, capsys):
        code, out, _ = run(capsys, "morphism", "0", "--name", "brandenburg")
        assert code == 0 and out.strip() == "0102012021012102010212"

    def test_unknown_morphism(self, capsys):
        code, _, err = run(capsys, "morphism", "0", "--name", "nope")
        assert code == 1 and "unknown morphism" in err

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "010", "--c", "3", "--json")
        data = json.loads(out)
        assert code == 0 and data["member"] is True

    def test_simple(self, capsys):
        code, out, _ = run(capsys, "simple", "0", "--json")
        data = json.loads(out)
        assert code == 0 and data["simple"] is False

    def test_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "011001", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["bound"] == 4 and data["exponent"] == "3/2"
        assert data["hyde_bound"] == 4


class TestConstruct:
    def test_remark_example(self, capsys):
        code, out, _ = run(
            capsys,
            "construct",
            "--n", "31",
            "--positions", "3,4,5,7,8,11,20,23,24,26,27,28",
            "--bits", "1,0,1,1,1,0,0,1,1,1,0,1",
            "--json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["m"] == 14
        assert data["z_template"] == "1??10101111010"
        assert data["bound"] == 14

    def test_bad_positions(self, capsys):
        code, _, err = run(
            capsys, "construct", "--n", "5", "--positions", "3,x", "--bits", "1,0"
        )
        assert code == 1 and "error" in err


class TestTable:
    def test_text_layout(self, capsys):
        code, out, _ = run(capsys, "table", "--max-c", "3", "--max-n", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("c\\n")
        assert len(lines) == 5
        assert "-" in lines[1 + 1]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--max-c", "2", "--max-n", "2", "--csv")
        assert code == 0
        assert out.splitlines()[0] == "c/n,0,1,2"


class TestNumberTheory:
    def test_primorial(self, capsys):
        code, out, _ = run(capsys, "primorial", "10")
        assert code == 0 and out.strip() == "210"

    def test_theta(self, capsys):
        code, out, _ = run(capsys, "theta", "10")
        assert code == 0
        assert float(out.strip()) == pytest.approx(5.34710753071747)


class TestGf2:
    def test_or(self, capsys):
        code, out, _ = run(capsys, "gf2", "or", "--vars", "2")
        assert code == 0 and out.strip() == "xy+x+y"

    def test_degree(self, capsys):
        code, out, _ = run(capsys, "gf2", "degree", "--poly", "xy+x+y")
        assert code == 0 and out.strip() == "2"

    def test_degree_zero_poly(self, capsys):
        code, out, _ = run(capsys, "gf2", "degree", "--poly", "0")
        assert code == 0 and out.strip() == "zero polynomial"

    def test_anf(self, capsys):
        code, out, _ = run(capsys, "gf2", "anf", "--table", "0001")
        assert code == 0 and out.strip() == "xy"

    def test_an1(self, capsys):
        code, out, _ = run(capsys, "gf2", "an1", "--vars", "3", "--json")
        data = json.loads(out)
        assert code == 0 and data["degree"] == 2


class TestSurveyAndVerify:
    def test_survey_deterministic_json(self, capsys):
        args = ("survey", "--n", "6", "--samples", "30", "--seed", "9", "--json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
        data = json.loads(first)
        assert data["samples"] == 30

    def test_verify_paper(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["reference_word"]["clause_c_exact_value"] == 8
        assert data["shuffle_family"]["ok"]

    def test_verify_sandwich_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "sandwich", "--n-max", "5", "--json")
        assert code == 0
        assert json.loads(out)["ok"]


class TestUsageErrors:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "01", "--nope"])
        assert exc.value.code == 2

    def test_alphabet_too_large(self, capsys):
        code, _, err = run(capsys, "compute", "01", "--alphabet", "11")
        assert code == 1 and "alphabet" in err
