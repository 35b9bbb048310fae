"""Command-line contract: subcommands, formats, and exit codes."""
import json

import numpy as np
import pytest

from splmat.assessment import default_config
from splmat.calibration import CASE_STUDY_ANSWERS
from splmat.cli import main


@pytest.fixture
def case_1_file(tmp_path):
    path = tmp_path / "case1.json"
    path.write_text(json.dumps(
        {"respondents": [{"id": "r1", "answers": CASE_STUDY_ANSWERS["case-1"]}]}
    ), encoding="utf-8")
    return str(path)


class TestAssess:
    def test_table_output(self, case_1_file, capsys):
        assert main(["assess", case_1_file]) == 0
        out = capsys.readouterr().out
        assert "Core Asset Process Assessment" in out
        assert "34.84" in out and "Medium to High" in out
        assert "29.72" in out and "8.64" in out and "17.50" in out
        assert "Very Low" in out

    def test_json_output(self, case_1_file, capsys):
        assert main(["assess", case_1_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["core_asset"]["display"] == "34.84"
        assert payload["overall"]["label"] == "Low"
        assert payload["overall"]["level"] == 2

    def test_table_values_equal_json_display(self, case_1_file, capsys):
        main(["assess", case_1_file, "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        main(["assess", case_1_file, "--format", "table"])
        table = capsys.readouterr().out
        for key in ("core_asset", "product_development", "management", "overall"):
            assert payload[key]["display"] in table
            assert payload[key]["label"] in table

    def test_output_file(self, case_1_file, tmp_path, capsys):
        target = tmp_path / "report.json"
        assert main(["assess", case_1_file, "--format", "json", "--output", str(target)]) == 0
        assert json.loads(target.read_text())["management"]["display"] == "8.64"

    def test_range_violation_exits_1(self, tmp_path, capsys):
        bad = dict(CASE_STUDY_ANSWERS["case-1"], q9=60)
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"respondents": [{"answers": bad}]}), encoding="utf-8")
        assert main(["assess", str(path)]) == 1
        err = capsys.readouterr().err
        assert "q9" in err and "0" in err and "50" in err

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["assess", str(tmp_path / "none.json")]) == 2

    def test_invalid_json_exits_1(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["assess", str(path)]) == 1

    def test_respondent_averaging(self, tmp_path, capsys):
        low = {qid: 10.0 for qid in CASE_STUDY_ANSWERS["case-1"]}
        high = {qid: 30.0 for qid in CASE_STUDY_ANSWERS["case-1"]}
        path = tmp_path / "multi.json"
        path.write_text(json.dumps(
            {"respondents": [{"answers": low}, {"answers": high}]}
        ), encoding="utf-8")
        single = tmp_path / "single.json"
        single.write_text(json.dumps(
            {"respondents": [{"answers": {qid: 20.0 for qid in low}}]}
        ), encoding="utf-8")
        main(["assess", str(path), "--format", "json"])
        averaged = json.loads(capsys.readouterr().out)
        main(["assess", str(single), "--format", "json"])
        direct = json.loads(capsys.readouterr().out)
        assert averaged["overall"]["score"] == direct["overall"]["score"]

    def test_config_flag(self, case_1_file, tmp_path, capsys):
        cfg = default_config().to_json()
        cfg_path = tmp_path / "trees.json"
        cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
        assert main(["assess", case_1_file, "--config", str(cfg_path), "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["overall"]["display"] == "17.50"

    def test_config_env_var(self, case_1_file, tmp_path, capsys, monkeypatch):
        cfg = default_config().to_json()
        cfg["final"] = [["core", "management"], "product"]
        cfg_path = tmp_path / "trees.json"
        cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
        monkeypatch.setenv("SPLMAT_CONFIG", str(cfg_path))
        assert main(["assess", case_1_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        # the alternate final tree still exists in the trace
        assert any("management)" in t["node"] for t in payload["trace"])

    def test_deterministic_json(self, case_1_file, capsys):
        main(["assess", case_1_file, "--format", "json"])
        first = capsys.readouterr().out
        main(["assess", case_1_file, "--format", "json"])
        assert capsys.readouterr().out == first


class TestCalibrate:
    def test_builtin_targets(self, capsys):
        assert main(["calibrate"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["residual"] <= 0.05
        default = {
            "core": "(((q1,q2),(q3,q4)),q5)",
            "product": "(((q6,q7),(q8,q9)),q10)",
            "management": "(((q11,q12),(q13,q14)),((q15,q16),q17))",
            "final": "((core,product),management)",
        }
        assert default in payload["configs"]
        assert payload["tied_configs"] == len(payload["configs"])

    def test_impossible_target_exits_1(self, tmp_path, capsys):
        targets = {
            "targets": [{
                "name": "impossible",
                "answers": CASE_STUDY_ANSWERS["case-1"],
                "expected": {"core_asset": 99, "product_development": 99,
                             "management": 99, "overall": 99},
            }]
        }
        path = tmp_path / "targets.json"
        path.write_text(json.dumps(targets), encoding="utf-8")
        assert main(["calibrate", "--targets", str(path)]) == 1
        captured = capsys.readouterr()
        assert json.loads(captured.out)["residual"] > 0.05
        assert "residual" in captured.err

    def test_single_target_file(self, tmp_path, capsys):
        targets = {
            "targets": [{
                "name": "case-1",
                "answers": CASE_STUDY_ANSWERS["case-1"],
                "expected": {"core_asset": 34.84, "product_development": 29.72,
                             "management": 8.64, "overall": 17.5},
            }]
        }
        path = tmp_path / "targets.json"
        path.write_text(json.dumps(targets), encoding="utf-8")
        assert main(["calibrate", "--targets", str(path)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload["residual_matrix"][0]) == {"case-1"}

    def test_missing_target_file_exits_2(self, tmp_path):
        assert main(["calibrate", "--targets", str(tmp_path / "none.json")]) == 2


class TestAnalyze:
    def test_identical_columns_alpha_one(self, tmp_path, capsys):
        rows = ["3", "7", "11", "20"]
        header = ",".join(f"q{i}" for i in range(1, 18))
        lines = [header] + [",".join([v] * 17) for v in rows]
        path = tmp_path / "same.csv"
        path.write_text("\n".join(lines), encoding="utf-8")
        assert main(["analyze", str(path)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["cronbach_alpha"] == pytest.approx(1.0, abs=1e-9)

    def test_random_matrix_retention(self, tmp_path, capsys):
        rng = np.random.default_rng(17)
        data = rng.uniform(0, 50, size=(30, 17)).round(2)
        header = ",".join(f"q{i}" for i in range(1, 18))
        lines = [header] + [",".join(map(str, row)) for row in data]
        path = tmp_path / "r.csv"
        path.write_text("\n".join(lines), encoding="utf-8")
        assert main(["analyze", str(path)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["retained_count"] == len(payload["retained"])
        assert len(payload["scree"]) == 17

    def test_zero_variance_item_named(self, tmp_path, capsys):
        header = ",".join(f"q{i}" for i in range(1, 18))
        row1 = ",".join(["1"] + ["5"] * 16)
        row2 = ",".join(["9"] + ["5"] * 16)
        path = tmp_path / "flat.csv"
        path.write_text("\n".join([header, row1, row2]), encoding="utf-8")
        assert main(["analyze", str(path)]) == 1
        assert "q2" in capsys.readouterr().err

    def test_malformed_line_number(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("q1,q2\n1,2\n3,4,5\n", encoding="utf-8")
        assert main(["analyze", str(path)]) == 1
        assert "line 3" in capsys.readouterr().err

    def test_two_row_minimum_works(self, tmp_path, capsys):
        path = tmp_path / "two.csv"
        path.write_text("q1,q2\n1,2\n3,7\n", encoding="utf-8")
        assert main(["analyze", str(path)]) == 0

    def test_missing_csv_exits_2(self, tmp_path):
        assert main(["analyze", str(tmp_path / "none.csv")]) == 2


class TestModel:
    def test_payload_contents(self, capsys):
        assert main(["model"]) == 0
        payload = json.loads(capsys.readouterr().out)
        terms = payload["variables"]["input"]["terms"]
        assert terms["Partial"]["trapezoid"] == [16.5, 21.5, 33.0, 38.0]
        assert payload["variables"]["output"]["terms"]["Very High"]["trapezoid"] == [40.0, 45.0, 50.0, 50.0]
        assert len(payload["rules"]) == 9
        assert {"input_1": "Yes", "input_2": "Yes", "output": "Very High"} in payload["rules"]
