import json

import pytest
from click.testing import CliRunner

from polardeg.cli import main

E1_PROFILE = {
    "n": 3,
    "d": 3,
    "isolated": [],
    "curves": [
        {
            "genus": 0,
            "degree": 1,
            "mu_transversal": 1,
            "special_points": [
                {"chi_fiber": 2, "branch_count": 1, "mu_section": 2},
                {"chi_fiber": 2, "branch_count": 1, "mu_section": 2},
            ],
        }
    ],
}


@pytest.fixture
def runner():
    return CliRunner()


def write_profile(tmp_path, doc, name="profile.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


class TestFormulaCommand:
    def test_line_fixture(self, runner, tmp_path):
        result = runner.invoke(main, ["formula", write_profile(tmp_path, E1_PROFILE)])
        assert result.exit_code == 0
        assert "pol = 2" in result.output

    def test_smooth(self, runner, tmp_path):
        result = runner.invoke(main, ["formula", write_profile(tmp_path, {"n": 3, "d": 3})])
        assert result.exit_code == 0
        assert "pol = 8" in result.output

    def test_json_payload(self, runner, tmp_path):
        result = runner.invoke(main, ["--json", "formula", write_profile(tmp_path, E1_PROFILE)])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["pol"] == 2 and doc["method"] == "one-dim-formula"
        assert doc["alpha_total"] == 2 and doc["beta_residual"] == 0
        assert sum(value for _, value in doc["breakdown"]) == 2

    def test_inconsistent_profile_exit_2(self, runner, tmp_path):
        doc = {"n": 3, "d": 3, "isolated": [{"mu": 9}]}
        result = runner.invoke(main, ["formula", write_profile(tmp_path, doc)])
        assert result.exit_code == 2

    def test_schema_violation_exit_3(self, runner, tmp_path):
        doc = {"n": 3, "d": 3, "bogus": 1}
        result = runner.invoke(main, ["formula", write_profile(tmp_path, doc)])
        assert result.exit_code == 3

    def test_missing_file_exit_3(self, runner):
        result = runner.invoke(main, ["formula", "/nonexistent/profile.json"])
        assert result.exit_code == 3


class TestOracleCommand:
    def test_line_fixture(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x0^2*x2+x1^2*x3", "--n", "3"])
        assert result.exit_code == 0
        assert "pol estimate = 2" in result.output

    def test_quartic_curve(self, runner):
        result = runner.invoke(main, ["--json", "oracle", "--poly", "x0^4+x1^4+x2^4", "--n", "2"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["report"]["pol_estimate"] == 9 and doc["report"]["consensus"]

    def test_cone(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x1^3+x2^3", "--n", "3", "--trials", "3"])
        assert result.exit_code == 0
        assert "pol estimate = 0" in result.output

    def test_nonhomogeneous_exit_3(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x0^2+x1", "--n", "1"])
        assert result.exit_code == 3

    def test_syntax_error_exit_3(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x0^^2", "--n", "1"])
        assert result.exit_code == 3

    def test_budget_exit_5(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x0^6+x1^6+x2^6+x3^6+x4^6", "--n", "4"])
        assert result.exit_code == 5

    def test_missing_option_exit_3(self, runner):
        result = runner.invoke(main, ["oracle", "--poly", "x0^2"])
        assert result.exit_code == 3


class TestVerifyCommand:
    def test_match(self, runner, tmp_path):
        result = runner.invoke(main, [
            "verify", "--poly", "x0^2*x2+x1^2*x3", "--profile", write_profile(tmp_path, E1_PROFILE),
        ])
        assert result.exit_code == 0
        assert "MATCH" in result.output

    def test_mismatch_exit_1(self, runner, tmp_path):
        result = runner.invoke(main, [
            "verify", "--poly", "x0^2*x2+x1^2*x3", "--profile", write_profile(tmp_path, {"n": 3, "d": 3}),
        ])
        assert result.exit_code == 1
        assert "MISMATCH" in result.output


class TestCatalogCommand:
    def test_unions_suite(self, runner):
        result = runner.invoke(main, ["catalog", "--suite", "unions"])
        assert result.exit_code == 0
        assert "3/3 entries passed" in result.output

    def test_examples_json_roundtrip(self, runner):
        result = runner.invoke(main, ["--json", "catalog", "--suite", "examples"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["failed"] == 0 and {row["name"] for row in doc["rows"]} == {"E1", "fourfold-line-A2"}

    def test_workers_do_not_change_json(self, runner):
        one = runner.invoke(main, ["--json", "--seed", "42", "--workers", "1", "catalog", "--suite", "unions"])
        four = runner.invoke(main, ["--json", "--seed", "42", "--workers", "4", "catalog", "--suite", "unions"])
        assert one.exit_code == four.exit_code == 0
        assert one.output == four.output

    def test_bad_suite_exit_3(self, runner):
        result = runner.invoke(main, ["catalog", "--suite", "everything"])
        assert result.exit_code == 3


class TestDeformCommand:
    def test_sweep_holds(self, runner):
        result = runner.invoke(main, [
            "deform", "--poly", "x0^2*x2+x1^2*x3", "--n", "3", "--s-values", "1/100,0.1",
        ])
        assert result.exit_code == 0
        assert "VIOLATION" not in result.output

    def test_explicit_linear_form(self, runner):
        result = runner.invoke(main, [
            "--json", "deform", "--poly", "x0^2*x2+x1^2*x3", "--n", "3",
            "--l", "x0+x1+x2+x3", "--s-values", "1/10", "--d", "3",
        ])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["semicontinuity"] and doc["base_pol"] == 2
        assert all(row["pol"] >= 2 for row in doc["sweep"])

    def test_bad_s_value_exit_3(self, runner):
        result = runner.invoke(main, [
            "deform", "--poly", "x0^2*x2+x1^2*x3", "--n", "3", "--s-values", "abc",
        ])
        assert result.exit_code == 3


class TestSliceYomdinCommand:
    def test_line_fixture(self, runner):
        result = runner.invoke(main, ["--json", "slice-yomdin", "--poly", "x0^2*x2+x1^2*x3", "--n", "3"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["pol_slice"] == 3 and doc["pol_deformed"] == 6
        assert doc["identity_holds"] and doc["upper_bound_holds"]
