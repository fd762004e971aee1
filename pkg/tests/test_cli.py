"""CLI reports: schema validity, exit codes, determinism, CSV round trips."""

import csv
import io
import json
import math
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from loopgrowth.cli import run


SCHEMA = json.loads(
    resources.files("loopgrowth").joinpath("report_schema.json").read_text()
)
VALIDATOR = jsonschema.Draft7Validator(SCHEMA)


def run_cli(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run_cli(argv)
    report = json.loads(text)
    errors = sorted(VALIDATOR.iter_errors(report), key=str)
    assert not errors, errors[0]
    return code, report


JUST = "top cell attaches along a sum of Whitehead products"

COMMANDS = [
    ["parse", "Susp(S2 ^ S3) x S4"],
    ["homology", "S2 x S3"],
    ["loop-series", "S2 v S2", "--max-degree", "8"],
    ["rho", "S2 v S3"],
    ["log-index", "S2 v S2", "--max-degree", "30"],
    ["cofiber", "--A", "S2", "--Z", "S2 x S2", "--inert", JUST],
    ["connsum", "--A", "S3", "--M", "S2 x S2", "--N", "S2 x S2", "--inert", JUST],
    ["yclass", "--m", "2", "--n", "5", "--J", "S2 v S3", "--inert", JUST],
    ["free-loop", "--degrees", "2,2", "--max-degree", "20", "--k-min", "8"],
    ["hm-census", "--m", "3", "--n", "3", "--max-degree", "14"],
    ["torsion", "--m", "3", "--n", "3", "--p", "5", "--r", "2", "--max-degree", "20"],
    ["primes", "--d", "7", "--s", "1"],
    ["retraction", "--A", "S2", "--Z", "S2 x S2"],
]


class TestSchema:
    @pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
    def test_every_command_emits_valid_report(self, argv):
        code, report = run_json(argv)
        assert code == 0
        assert report["schema"] == "loopgrowth-report/v1"
        assert report["command"] == argv[0]
        assert report["engine"]["name"] == "loopgrowth"
        assert report["table"]["columns"]

    @pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
    def test_provenance_well_formed(self, argv):
        _, report = run_json(argv)
        assert report["provenance"]
        for entry in report["provenance"]:
            assert entry["source"] in {"THEOREM_CITED", "COMPUTED", "MODEL", "ASSERTED"}
            if entry["source"] == "THEOREM_CITED":
                assert entry["theorem"].strip()
            if entry["source"] == "MODEL":
                assert entry["model_id"].strip()


class TestCommands:
    def test_parse_reports_canonical_form(self):
        _, report = run_json(["parse", "(S2 v S3) x S4 "])
        assert report["result"]["canonical"] == "(S2 v S3) x S4"
        assert report["result"]["tree"]["kind"] == "product"

    def test_homology_polynomial(self):
        _, report = run_json(["homology", "S2 x S3"])
        assert report["result"]["polynomial"] == [1, 0, 1, 1, 0, 1]
        assert report["result"]["profile"] == {"connectivity": 1, "dimension": 5}

    def test_loop_series_geometric(self):
        _, report = run_json(["loop-series", "S2 v S2", "--max-degree", "8"])
        res = report["result"]
        assert res["coefficients"] == [1, 2, 4, 8, 16, 32, 64, 128, 256]
        assert res["series"] == {"numerator": [1], "denominator": [1, -2]}
        rho = res["rho"]
        assert rho["exact"] and rho["lo"] == rho["hi"]
        assert rho["lo"] == {"num": "1", "den": "2", "decimal": "0.5"}

    def test_rho_interval_for_irrational_pole(self):
        _, report = run_json(["rho", "S2 v S3"])
        rho = report["result"]["rho"]
        assert not rho["infinite"] and not rho["exact"]
        lo = Fraction(int(rho["lo"]["num"]), int(rho["lo"]["den"]))
        hi = Fraction(int(rho["hi"]["num"]), int(rho["hi"]["den"]))
        assert hi - lo <= Fraction(1, 10**12)
        # the pole of 1/(1 - z - z^2) is (sqrt(5) - 1) / 2
        assert lo**2 + lo < 1 < hi**2 + hi

    def test_log_index(self):
        _, report = run_json(["log-index", "S2 v S2", "--max-degree", "30"])
        assert report["result"]["log_index"]["value"] == math.log(2)
        assert abs(report["result"]["empirical"] - math.log(2)) < 1e-6

    def test_cofiber_verdict(self):
        _, report = run_json(
            ["cofiber", "--A", "S2", "--Z", "S2 x S2", "--inert", JUST]
        )
        res = report["result"]
        assert res["verdict"] == "certified-strongly-inert"
        assert res["strongly_inert"] and res["omega_divergent"]
        assert not res["elliptic"]
        assert res["log_index"]["value"] == math.log(2)
        assert res["series"] == {"numerator": [1], "denominator": [1, -2]}
        assert any(
            e["source"] == "ASSERTED" and JUST in e["claim"]
            for e in report["provenance"]
        )

    def test_connsum(self):
        _, report = run_json(
            ["connsum", "--A", "S3", "--M", "S2 x S2", "--N", "S2 x S2", "--inert", JUST]
        )
        assert report["result"]["series"]["denominator"] == [1, -4, 2, -1]
        assert report["result"]["verdict"] == "certified-strongly-inert"

    def test_yclass(self):
        _, report = run_json(
            ["yclass", "--m", "2", "--n", "5", "--J", "S2 v S3", "--inert", JUST]
        )
        assert report["result"]["series"]["denominator"] == [1, -1, -2]
        assert report["result"]["cofiber_space"] == "S2 x S3"

    def test_free_loop(self):
        _, report = run_json(
            ["free-loop", "--degrees", "2,2", "--max-degree", "40", "--k-min", "12",
             "--epsilon", "0.15"]
        )
        res = report["result"]
        assert res["passed"] and res["growth_check"]["passed"] and res["log_index_match"]
        assert res["target_log_index"] == pytest.approx(math.log(2) / 2)
        assert res["match_tol"] == pytest.approx(0.08)
        assert report["table"]["columns"] == ["degree", "hh0", "hh1", "lx"]

    def test_free_loop_methods_agree_on_table(self):
        _, neck = run_json(["free-loop", "--degrees", "2,2", "--max-degree", "14"])
        _, brute = run_json(
            ["free-loop", "--degrees", "2,2", "--max-degree", "14", "--method", "brute"]
        )
        assert neck["table"] == brute["table"]
        assert neck["result"]["empirical_log_index"] == brute["result"]["empirical_log_index"]

    def test_hm_census(self):
        _, report = run_json(["hm-census", "--m", "3", "--n", "3", "--max-degree", "14"])
        res = report["result"]
        assert res["reconstruction_ok"]
        assert res["max_factor_dimension"] == 15
        assert report["table"]["rows"][0] == [3, 2]
        assert report["table"]["rows"][1] == [5, 1]

    def test_torsion(self):
        _, report = run_json(
            ["torsion", "--m", "3", "--n", "3", "--p", "5", "--r", "2",
             "--max-degree", "20"]
        )
        res = report["result"]
        assert res["exponent_witness"] == 5
        assert res["model_id"] == "factor-count-v1"
        assert not res["prime_excluded"]
        assert [12, 1] in report["table"]["rows"]

    def test_torsion_excluded_prime(self):
        _, report = run_json(
            ["torsion", "--m", "3", "--n", "3", "--p", "2", "--r", "1",
             "--max-degree", "10", "--excluded", "2,3"]
        )
        assert report["result"]["prime_excluded"]
        assert report["result"]["excluded"] == [2, 3]

    def test_primes(self):
        _, report = run_json(["primes", "--d", "7", "--s", "1"])
        assert report["result"]["primes"] == [2, 3]

    def test_retraction(self):
        _, report = run_json(["retraction", "--A", "S2", "--Z", "S2 x S2"])
        assert report["result"] == {"m": 3, "n": 4, "excluded": [2]}


class TestErrors:
    def test_parse_error_exits_two(self):
        code, text = run_cli(["parse", "S2 v"])
        assert code == 2
        report = json.loads(text)
        assert not sorted(VALIDATOR.iter_errors(report), key=str)
        err = report["error"]
        assert err["kind"] == "parse-error"
        assert err["offset"] == 4
        assert err["expected"]

    def test_sphere_index_parse_error(self):
        code, text = run_cli(["loop-series", "S1"])
        assert code == 2
        assert json.loads(text)["error"]["kind"] == "parse-error"

    def test_hypothesis_error(self):
        code, text = run_cli(
            ["yclass", "--m", "2", "--n", "3", "--J", "S2", "--inert", JUST]
        )
        assert code == 1
        err = json.loads(text)["error"]
        assert err["kind"] == "hypothesis-error"
        assert "1 < m <= n - m" in err["message"]

    def test_not_expressible(self):
        code, text = run_cli(["loop-series", "(S2 x S2) ^ (S2 x S2)"])
        assert code == 1
        assert json.loads(text)["error"]["kind"] == "not-expressible"

    def test_degree_limit_validation(self):
        code, text = run_cli(["loop-series", "S2", "--max-degree", "300"])
        assert code == 1
        err = json.loads(text)["error"]
        assert err["kind"] == "validation-error"
        assert "200" in err["message"]

    def test_brute_degree_limit(self):
        code, text = run_cli(
            ["free-loop", "--degrees", "1,1", "--method", "brute", "--max-degree", "60"]
        )
        assert code == 1
        assert "40" in json.loads(text)["error"]["message"]

    def test_missing_justification(self):
        code, text = run_cli(["cofiber", "--A", "S2", "--Z", "S2 x S2"])
        assert code == 1
        err = json.loads(text)["error"]
        assert err["kind"] == "validation-error"
        assert "inertness justification is required" in err["message"]

    def test_single_sphere_free_loop(self):
        code, text = run_cli(["free-loop", "--degrees", "2"])
        assert code == 1
        assert json.loads(text)["error"]["kind"] == "hypothesis-error"


class TestPresentationFiles:
    def test_file_supplies_fields(self, tmp_path):
        f = tmp_path / "pres.json"
        f.write_text(
            json.dumps(
                {"kind": "cofiber", "A": "S2", "Z": "S2 x S2",
                 "inert_justification": "from file"}
            )
        )
        code, report = run_json(["cofiber", "--file", str(f)])
        assert code == 0
        assert report["request"]["A"] == "S2"
        assert report["request"]["inert_justification"] == "from file"

    def test_flags_override_file(self, tmp_path):
        f = tmp_path / "pres.json"
        f.write_text(
            json.dumps(
                {"kind": "cofiber", "A": "S2", "Z": "S2 x S2",
                 "inert_justification": "from file"}
            )
        )
        code, report = run_json(["cofiber", "--file", str(f), "--Z", "S3", "--inert", JUST])
        assert code == 0
        assert report["request"]["Z"] == "S3"
        assert report["request"]["inert_justification"] == JUST

    def test_kind_mismatch_rejected(self, tmp_path):
        f = tmp_path / "pres.json"
        f.write_text(json.dumps({"kind": "cofiber", "A": "S2", "Z": "S2 x S2"}))
        code, text = run_cli(
            ["connsum", "--file", str(f), "--M", "S3", "--N", "S3", "--inert", JUST]
        )
        assert code == 1
        assert "does not match command" in json.loads(text)["error"]["message"]

    def test_missing_fields_reported(self):
        code, text = run_cli(["connsum", "--A", "S3", "--inert", JUST])
        assert code == 1
        err = json.loads(text)["error"]
        assert "missing presentation fields" in err["message"]
        assert "M" in err["message"] and "N" in err["message"]


class TestCsv:
    def test_csv_is_the_table(self):
        _, report = run_json(["loop-series", "S2 v S2", "--max-degree", "8"])
        code, text = run_cli(["loop-series", "S2 v S2", "--max-degree", "8",
                              "--format", "csv"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == report["table"]["columns"]
        want = [[str(c) for c in row] for row in report["table"]["rows"]]
        assert rows[1:] == want

    def test_csv_uses_bare_newlines(self):
        _, text = run_cli(["primes", "--d", "7", "--s", "1", "--format", "csv"])
        assert text == "prime\n2\n3\n"
        assert "\r" not in text

    def test_errors_fall_back_to_json(self):
        code, text = run_cli(["parse", "S2 v", "--format", "csv"])
        assert code == 2
        assert json.loads(text)["error"]["kind"] == "parse-error"


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["loop-series", "S2 v S3", "--max-degree", "30"],
            ["free-loop", "--degrees", "2,2", "--max-degree", "20", "--k-min", "8"],
            ["hm-census", "--m", "2", "--n", "3", "--max-degree", "12"],
        ],
        ids=lambda a: a[0],
    )
    def test_repeated_runs_identical(self, argv):
        assert run_cli(argv) == run_cli(argv)

    def test_thread_count_never_changes_bytes(self):
        base = ["free-loop", "--degrees", "1,2", "--max-degree", "16",
                "--method", "brute"]
        single = run_cli(base + ["--threads", "1"])
        many = run_cli(base + ["--threads", "8"])
        assert single == many
