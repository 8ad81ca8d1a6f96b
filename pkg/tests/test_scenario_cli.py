"""Scenario files and the command line front end."""

import copy
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from coupledfut import (
    ParseError,
    catalog_names,
    load,
    parse_scenario,
    scenario_from_dict,
    scenario_to_dict,
    scenario_to_json,
    validate_scenario,
)
from coupledfut.cli import main

ALL_NAMES = ("cp1", "cp1-coupled", "hultgren-c", "hultgren-c-corrupt", "hultgren-c-true")


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = int(exc.code or 0)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScenarioFiles:
    def test_catalog_listing(self):
        assert catalog_names() == ALL_NAMES

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_round_trip_preserves_the_scenario(self, name):
        scn = load(name)
        text = scenario_to_json(scn)
        again = parse_scenario(text)
        assert again == scn
        assert scenario_to_json(again) == text

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_catalog_scenarios_validate(self, name):
        report = validate_scenario(load(name).localization)
        assert report.ok, report.messages

    def test_invalid_json_is_a_parse_error(self):
        with pytest.raises(ParseError, match="invalid JSON"):
            parse_scenario("{nope")

    def test_unknown_ring_reference_is_located(self):
        bad = copy.deepcopy(scenario_to_dict(load("hultgren-c")))
        bad["components"][0]["ring"] = "nope"
        with pytest.raises(ParseError, match=r"components\[0\].ring: unknown ring"):
            scenario_from_dict(bad)

    def test_malformed_offset_is_located(self):
        bad = copy.deepcopy(scenario_to_dict(load("hultgren-c")))
        bad["toric"]["polytopes"][0]["facets"][0]["offset"] = "1//2"
        with pytest.raises(
            ParseError, match=r"toric.polytopes\[0\].facets\[0\].offset"
        ):
            scenario_from_dict(bad)

    def test_missing_field_is_located(self):
        bad = copy.deepcopy(scenario_to_dict(load("hultgren-c")))
        del bad["parameter"]
        with pytest.raises(ParseError, match="missing field 'parameter'"):
            scenario_from_dict(bad)

    def test_wrong_value_type_is_located(self):
        bad = copy.deepcopy(scenario_to_dict(load("hultgren-c")))
        bad["components"][0]["bundles"][0]["hamiltonian"] = {"x": 1}
        with pytest.raises(ParseError, match="expected an expression string"):
            scenario_from_dict(bad)

    def test_structural_parse_leaves_semantics_to_validation(self):
        # A bundle-count mismatch parses fine; validate_scenario rejects it.
        bad = copy.deepcopy(scenario_to_dict(load("hultgren-c")))
        bad["bundles"] = 1
        scn = scenario_from_dict(bad)
        report = validate_scenario(scn.localization)
        assert not report.ok
        assert any("restricts 2 bundles; scenario has 1" in m for m in report.messages)


class TestCliLocalize:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "localize", "--catalog", "hultgren-c")
        assert code == 0
        assert "scenario: hultgren-c" in out
        assert "parameter: c on (1/4, 3/4)" in out
        assert "bundle 0 equivariant volume: 112c-6" in out
        assert "bundle 1 equivariant volume: -112c+106" in out
        assert "invariant: -3(112c^2-112c+23)/((56c-3)(56c-53))" in out
        assert "divided by the ambient dimension plus one (here 5)" in out

    def test_value_at_parameter(self, capsys):
        code, out, _ = run(
            capsys, "localize", "--catalog", "hultgren-c", "--param-value", "1/2"
        )
        assert code == 0
        assert "value at c = 1/2: -3/125" in out

    def test_pole_value_exits_with_computation_error(self, capsys):
        code, _, err = run(
            capsys, "localize", "--catalog", "hultgren-c", "--param-value", "3/56"
        )
        assert code == 4
        assert "pole at c = 3/56" in err

    def test_structured_output_is_deterministic(self, capsys):
        first = run(capsys, "localize", "--catalog", "hultgren-c", "--format", "structured")
        second = run(capsys, "localize", "--catalog", "hultgren-c", "--format", "structured")
        assert first == second
        payload = json.loads(first[1])
        assert payload["invariant"]["factored"] == (
            "-3(112c^2-112c+23)/((56c-3)(56c-53))"
        )

    def test_csv_output_samples_the_default_grid(self, capsys):
        code, out, _ = run(capsys, "localize", "--catalog", "hultgren-c", "--format", "csv")
        assert code == 0
        assert out.splitlines() == [
            "c,fut",
            '"1/3","-51/4841"',
            '"5/12","-114/5429"',
            '"1/2","-3/125"',
            '"7/12","-114/5429"',
            '"2/3","-51/4841"',
        ]


class TestCliToric:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "toric", "--catalog", "hultgren-c")
        assert code == 0
        assert "polytope 0 volume: 7/3c-1/8 (times dimension!: 56c-3)" in out
        assert "polytope 1 volume: -7/3c+53/24 (times dimension!: -56c+53)" in out
        assert "invariant: -6(112c^2-112c+23)/((56c-3)(56c-53))" in out
        assert "additivity of polytopes: pass" in out

    def test_direction_override(self, capsys):
        code, out, _ = run(
            capsys, "toric", "--catalog", "hultgren-c", "--direction", "0,0,1,0"
        )
        assert code == 0
        assert "invariant: 3(112c^2-112c+23)/((56c-3)(56c-53))" in out


class TestCliRoots:
    def test_flagship_roots(self, capsys):
        code, out, _ = run(capsys, "roots", "--catalog", "hultgren-c")
        assert code == 0
        assert "roots found: 2" in out
        assert "root 0: (14-sqrt(35))/28 (decimal 0.288711436317870856)" in out
        assert "root 1: (14+sqrt(35))/28 (decimal 0.711288563682129144)" in out

    def test_zero_invariant_reports_vanishing(self, capsys):
        code, out, _ = run(capsys, "roots", "--catalog", "cp1")
        assert code == 0
        assert "roots found: 0" in out
        assert "the invariant vanishes identically" in out

    def test_structured_roots_carry_brackets_and_multiplicity(self, capsys):
        code, out, _ = run(
            capsys, "roots", "--catalog", "hultgren-c", "--format", "structured"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["roots"]) == 2
        for entry in payload["roots"]:
            assert entry["multiplicity"] == 1
            width = F(entry["hi"]) - F(entry["lo"])
            assert width <= F(1, 10**12)
        assert payload["roots"][0]["closed_form"] == "(14-sqrt(35))/28"

    def test_width_flag_is_parsed_exactly(self, capsys):
        code, out, _ = run(
            capsys, "roots", "--catalog", "hultgren-c", "--root-width", "1/100000"
        )
        assert code == 0
        assert "bracket width: at most 1/100000" in out

    def test_bad_width_is_a_usage_error(self, capsys):
        code, _, err = run(
            capsys, "roots", "--catalog", "hultgren-c", "--root-width", "xyz"
        )
        assert code == 2
        assert "not an exact rational" in err


class TestCliSample:
    def test_csv_three_point_grid(self, capsys):
        code, out, _ = run(
            capsys, "sample", "--catalog", "hultgren-c", "--samples", "3",
            "--format", "csv",
        )
        assert code == 0
        assert out == 'c,fut\n"3/8","-13/768"\n"1/2","-3/125"\n"5/8","-13/768"\n'

    def test_explicit_abscissae(self, capsys):
        code, out, _ = run(
            capsys, "sample", "--catalog", "hultgren-c",
            "--samples", "5/16,11/16", "--format", "csv",
        )
        assert code == 0
        assert out == 'c,fut\n"5/16","-51/8236"\n"11/16","-51/8236"\n'


class TestCliVerify:
    @pytest.mark.parametrize(
        "name,expected",
        [
            ("hultgren-c", 5),
            ("hultgren-c-true", 0),
            ("hultgren-c-corrupt", 5),
            ("cp1", 0),
            ("cp1-coupled", 0),
        ],
    )
    def test_exit_codes_over_the_catalog(self, capsys, name, expected):
        code, out, err = run(capsys, "verify", "--catalog", name)
        assert code == expected

    def test_consistent_report_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--catalog", "hultgren-c-true")
        assert code == 0
        assert "residue consistency: polynomial" in out
        assert "invariant, localization vs polytope: match" in out
        assert "overall: consistent" in out
        assert out.count("(equal)") == 5

    def test_mismatch_report_shows_both_values(self, capsys):
        code, out, err = run(
            capsys, "verify", "--catalog", "hultgren-c",
            "--samples", "5/16,3/8,1/2,5/8,11/16",
        )
        assert code == 5
        assert "sample 1/2: localization -3/125, polytope -6/125 (UNEQUAL)" in out
        assert "overall: INCONSISTENT" in out
        assert "localization and the polytope oracle disagree" in err

    def test_csv_format_is_rejected(self, capsys):
        code, _, err = run(
            capsys, "verify", "--catalog", "hultgren-c", "--format", "csv"
        )
        assert code == 3
        assert "csv output is not defined for verify" in err

    def test_zero_samples_rejected(self, capsys):
        code, _, err = run(
            capsys, "verify", "--catalog", "hultgren-c", "--samples", "0"
        )
        assert code == 3
        assert "at least one sample" in err

    def test_scenario_file_input(self, capsys, tmp_path):
        path = tmp_path / "twin.json"
        path.write_text(scenario_to_json(load("hultgren-c-true")))
        code, out, _ = run(capsys, "verify", "--scenario", str(path))
        assert code == 0
        assert "overall: consistent" in out


class TestCliArgumentHandling:
    def test_no_subcommand(self, capsys):
        code, _, err = run(capsys)
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "nope", "--catalog", "cp1")
        assert code == 2

    def test_catalog_and_scenario_are_exclusive(self, capsys):
        code, _, err = run(
            capsys, "localize", "--catalog", "hultgren-c", "--scenario", "x.json"
        )
        assert code == 2
        assert "not allowed with" in err

    def test_one_source_is_required(self, capsys):
        code, _, err = run(capsys, "localize")
        assert code == 2

    def test_unknown_catalog_name(self, capsys):
        code, _, err = run(capsys, "localize", "--catalog", "nope")
        assert code == 3
        assert "unknown catalog scenario" in err

    def test_missing_scenario_file(self, capsys):
        code, _, err = run(capsys, "localize", "--scenario", "/does/not/exist.json")
        assert code == 2
        assert "cannot read scenario file" in err


class TestConsoleScript:
    def test_entry_point_runs(self):
        proc = subprocess.run(
            [sys.executable, "-c",
             "import sys; from coupledfut.cli import main; sys.exit(main(sys.argv[1:]))",
             "localize", "--catalog", "cp1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "scenario: cp1" in proc.stdout

    def test_installed_script(self):
        proc = subprocess.run(
            ["coupledfut", "verify", "--catalog", "hultgren-c"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 5
