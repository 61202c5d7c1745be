import json
from fractions import Fraction

import pytest

from su3rep import RadicalSum, build_generator_set
from su3rep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_t3_csv(self, capsys):
        code, out, _ = run(
            capsys, "generate", "--p", "1", "--q", "0", "--matrix", "T3",
            "--format", "csv",
        )
        assert code == 0
        # the zero entry at (1,1) has no terms and is omitted
        assert out == "row,col,num,den,sf\n2,2,1,2,1\n3,3,-1,2,1\n"

    def test_trivial_up_json(self, capsys):
        code, out, _ = run(capsys, "generate", "--p", "0", "--q", "0", "--matrix", "Up")
        payload = json.loads(out)
        assert code == 0
        assert payload["d"] == 1
        assert payload["entries"] == []

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "generate", "--p", "2", "--q", "1", "--matrix", "Up")
        payload = json.loads(out)
        mat = build_generator_set(2, 1).u_plus
        rebuilt = {
            (e["row"], e["col"]): RadicalSum.from_triples(
                [(t["num"], t["den"], t["sf"]) for t in e["value"]]
            )
            for e in payload["entries"]
        }
        original = {(r + 1, c + 1): v for r, c, v in mat.items()}
        assert rebuilt == original
        rows_cols = [(e["row"], e["col"]) for e in payload["entries"]]
        assert rows_cols == sorted(rows_cols)

    def test_gell_mann_json(self, capsys):
        code, out, _ = run(capsys, "generate", "--p", "1", "--q", "0", "--matrix", "F2")
        payload = json.loads(out)
        assert code == 0
        assert all(e["re"] == [] for e in payload["entries"])
        assert payload["entries"][0]["im"]

    def test_gell_mann_csv_has_part_column(self, capsys):
        _, out, _ = run(
            capsys, "generate", "--p", "1", "--q", "0", "--matrix", "F8",
            "--format", "csv",
        )
        lines = out.splitlines()
        assert lines[0] == "row,col,part,num,den,sf"
        assert all(",re," in line or ",im," in line for line in lines[1:])

    def test_approx_column(self, capsys):
        _, out, _ = run(
            capsys, "generate", "--p", "1", "--q", "0", "--matrix", "T3",
            "--format", "csv", "--approx",
        )
        lines = out.splitlines()
        assert lines[0] == "row,col,num,den,sf,approx"
        assert lines[1].endswith(",0.5")

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "generate", "--p", "3", "--q", "1", "--matrix", "Vp")
        _, second, _ = run(capsys, "generate", "--p", "3", "--q", "1", "--matrix", "Vp")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "t3.csv"
        code, out, _ = run(
            capsys, "generate", "--p", "1", "--q", "0", "--matrix", "T3",
            "--format", "csv", "-o", str(target),
        )
        assert code == 0 and out == ""
        assert target.read_text().startswith("row,col,num,den,sf\n")

    def test_unknown_matrix_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["generate", "--p", "1", "--q", "0", "--matrix", "X9"])
        assert err.value.code == 2

    def test_negative_label_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["generate", "--p", "-1", "--q", "0", "--matrix", "T3"])
        assert err.value.code == 2


class TestVerify:
    def test_pass_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--p", "3", "--q", "2")
        assert code == 0
        assert "commutators: 28/28 exact" in out
        assert "eigenvalue 34/3" in out
        assert out.endswith("PASS\n")

    def test_oracle_flag(self, capsys):
        code, out, _ = run(capsys, "verify", "--p", "2", "--q", "1", "--oracle")
        assert code == 0
        assert "block unknowns match brute-force solve" in out

    def test_oracle_guard(self, capsys):
        code, _, err = run(capsys, "verify", "--p", "5", "--q", "3", "--oracle")
        assert code == 2
        assert "desk-scale" in err


class TestSweep:
    def test_small_sweep_csv(self, capsys):
        code, out, err = run(capsys, "sweep", "--max-d", "9")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,q,d,commutators,casimir,structure,ms"
        prefix = [line.rsplit(",", 1)[0] for line in lines[1:]]
        assert prefix == [
            "0,0,1,pass,pass,pass",
            "0,1,3,pass,pass,pass",
            "1,0,3,pass,pass,pass",
            "1,1,8,pass,pass,pass",
            "2,0,6,pass,pass,pass",
        ]
        assert "all pass" in err


class TestWeights:
    def test_quark_triplet(self, capsys):
        code, out, _ = run(capsys, "weights", "--p", "1", "--q", "0")
        assert code == 0
        assert out == "two_t3,three_y,count\n-1,1,1\n0,-2,1\n1,1,1\n"

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "weights", "--p", "5", "--q", "3")
        _, second, _ = run(capsys, "weights", "--p", "5", "--q", "3")
        assert first == second


class TestUnknownsAndOracle:
    def test_unknowns_csv(self, capsys):
        code, out, _ = run(capsys, "unknowns", "--p", "1", "--q", "1")
        assert code == 0
        assert out == (
            "i,j,num,den\n1,2,3,2\n2,3,0,1\n3,1,3,2\n3,4,1,1\n4,2,1,2\n"
        )

    def test_oracle_csv_matches_nonzero_unknowns(self, capsys):
        _, unknowns_out, _ = run(capsys, "unknowns", "--p", "2", "--q", "1")
        _, oracle_out, _ = run(capsys, "oracle", "--p", "2", "--q", "1")

        def parse(text):
            rows = text.splitlines()[1:]
            return {
                (int(i), int(j)): Fraction(int(num), int(den))
                for i, j, num, den in (row.split(",") for row in rows)
            }

        formula, solved = parse(unknowns_out), parse(oracle_out)
        keys = set(formula) | set(solved)
        assert all(
            formula.get(k, Fraction(0)) == solved.get(k, Fraction(0)) for k in keys
        )

    def test_orientation_guard(self, capsys):
        code, _, err = run(capsys, "unknowns", "--p", "1", "--q", "2")
        assert code == 2 and "p >= q" in err
        code, _, err = run(capsys, "oracle", "--p", "9", "--q", "9")
        assert code == 2 and "desk-scale" in err
