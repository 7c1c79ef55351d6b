"""Command-line behavior: exit codes, report output, golden files and determinism."""

import json

import pytest

from isotype.cli.main import main, parse_param

SL2_BRACKET = [
    {"i": 0, "j": 2, "k": 1, "c": "1"},
    {"i": 2, "j": 0, "k": 1, "c": "-1"},
    {"i": 1, "j": 0, "k": 0, "c": "2"},
    {"i": 0, "j": 1, "k": 0, "c": "-2"},
]


def _write_spec(tmp_path, data, name="spec.alg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data, indent=2), encoding="utf-8")
    return str(path)


def _lie_spec(h_on_f: int) -> dict:
    entries = SL2_BRACKET + [
        {"i": 1, "j": 2, "k": 2, "c": str(h_on_f)},
        {"i": 2, "j": 1, "k": 2, "c": str(-h_on_f)},
    ]
    return {
        "spaces": {"V": {"labels": ["e", "h", "f"]}},
        "maps": {"br": {"domains": ["V", "V"], "codomain": "V", "entries": entries}},
        "algebras": {"L": {"space": "V", "product": "br", "kind": "lie"}},
        "tasks": [{"command": "verify", "of": "L", "target": "jacobi"}],
    }


@pytest.fixture
def sl2_spec(specs_dir):
    return str(specs_dir / "sl2.alg.json")


def _reports(capsys):
    return json.loads(capsys.readouterr().out)


class TestExitCodes:
    def test_verify_passes(self, sl2_spec, capsys):
        assert main(["verify", "--spec", sl2_spec]) == 0
        reports = _reports(capsys)
        assert [r["task"] for r in reports] == [
            "verify:jacobi:sl2",
            "verify:antisymmetry:sl2",
            "verify:structure:sl2",
            "verify:jordan:split2",
        ]
        assert all(r["status"] == "pass" for r in reports)
        assert all("millis" not in r for r in reports)

    def test_decompose_peirce(self, sl2_spec, capsys):
        assert main(["decompose", "--spec", sl2_spec]) == 0
        (report,) = _reports(capsys)
        assert report["dims"] == {"J1": 1, "Jhalf": 0, "J0": 1}

    def test_failing_identity(self, tmp_path, capsys):
        spec = _write_spec(tmp_path, _lie_spec(-3))
        assert main(["verify", "--spec", spec]) == 1
        (report,) = _reports(capsys)
        assert report["status"] == "fail"
        assert report["witness"] == ["e", "h", "f"]

    def test_passing_written_spec(self, tmp_path, capsys):
        spec = _write_spec(tmp_path, _lie_spec(-2))
        assert main(["verify", "--spec", spec]) == 0

    def test_malformed_spec(self, tmp_path, capsys):
        path = tmp_path / "broken.alg.json"
        path.write_text('{"spaces": ', encoding="utf-8")
        assert main(["verify", "--spec", str(path)]) == 2
        assert capsys.readouterr().out == ""

    def test_missing_spec_file(self, tmp_path):
        assert main(["verify", "--spec", str(tmp_path / "absent.alg.json")]) == 2

    def test_vanishing_denominator_in_prime_field(self, tmp_path):
        data = {
            "field": "GF(7)",
            "spaces": {"P": {"dim": 1}},
            "maps": {"m": {"domains": ["P", "P"], "codomain": "P", "entries": []}},
            "algebras": {
                "J": {"space": "P", "product": "m", "kind": "jordan", "unit": {"0": "1/7"}}
            },
            "tasks": [{"command": "verify", "of": "J", "target": "jordan"}],
        }
        assert main(["verify", "--spec", _write_spec(tmp_path, data)]) == 2

    def test_unknown_target(self):
        assert main(["verify", "--target", "nonsense", "--of", "x"]) == 2

    def test_param_needs_family(self):
        assert main(["catalog", "--param", "w=1"]) == 2

    def test_invalid_thread_setting(self, sl2_spec, monkeypatch):
        monkeypatch.setenv("ISOTYPE_THREADS", "abc")
        assert main(["verify", "--spec", sl2_spec]) == 2

    def test_error_status_report(self, capsys):
        argv = ["decompose", "--sl2xsl2", "--family", "gl", "--param", "w=1", "--param", "z=1"]
        assert main(argv) == 1
        (report,) = _reports(capsys)
        assert report["status"] == "error"
        assert report["error"].startswith("PreconditionError: ")


class TestOutput:
    def test_empty_spec(self, capsys):
        assert main(["verify"]) == 0
        assert capsys.readouterr().out == "[]\n"

    def test_empty_spec_as_text(self, capsys):
        assert main(["verify", "--format", "text"]) == 0
        assert capsys.readouterr().out.strip() == "no tasks"

    def test_catalog_family(self, capsys):
        assert main(["catalog", "--family", "gl", "--param", "w=1", "--param", "z=1"]) == 0
        (report,) = _reports(capsys)
        assert report["task"] == "catalog:gl"
        assert report["dims"] == {"J": 1, "T": 2, "N": 3, "W": 6, "L(J,T)": 8, "full": 9}
        checks = {c["name"]: c for c in report["checks"]}
        assert checks["full-vs-reference"]["passed"]
        assert checks["L(J,T) in full"]["note"].startswith("generated subalgebra has dim 8")

    def test_adhoc_task_replaces_spec_tasks(self, sl2_spec, capsys):
        assert main(["verify", "--spec", sl2_spec, "--target", "structure", "--of", "sl2"]) == 0
        (report,) = _reports(capsys)
        assert report["task"] == "verify:structure:sl2"
        assert report["dims"]["killing_rank"] == 3

    def test_text_format(self, sl2_spec, capsys):
        assert main(["verify", "--spec", sl2_spec, "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "Summary" in out
        assert "verify:jacobi:sl2" in out

    def test_timings(self, sl2_spec, capsys):
        assert main(["verify", "--spec", sl2_spec, "--timings"]) == 0
        assert all(isinstance(r["millis"], int) for r in _reports(capsys))

    def test_output_file(self, sl2_spec, tmp_path, capsys):
        out = tmp_path / "reports.json"
        assert main(["verify", "--spec", sl2_spec, "--output", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert len(json.loads(out.read_text(encoding="utf-8"))) == 4


class TestGolden:
    def test_record_then_match(self, sl2_spec, tmp_path, capsys):
        golden = tmp_path / "sl2.golden.json"
        assert main(["verify", "--spec", sl2_spec, "--golden", str(golden)]) == 0
        emitted = capsys.readouterr().out
        assert golden.read_text(encoding="utf-8") == emitted
        assert main(["verify", "--spec", sl2_spec, "--golden", str(golden)]) == 0

    def test_mismatch(self, sl2_spec, tmp_path):
        golden = tmp_path / "sl2.golden.json"
        golden.write_text("[]\n", encoding="utf-8")
        assert main(["verify", "--spec", sl2_spec, "--golden", str(golden)]) == 1


class TestDeterminism:
    def test_thread_count(self, sl2_spec, capsys):
        main(["verify", "--spec", sl2_spec, "--threads", "1"])
        serial = capsys.readouterr().out
        main(["verify", "--spec", sl2_spec, "--threads", "2"])
        assert capsys.readouterr().out == serial

    @pytest.mark.slow
    @pytest.mark.parametrize("command", ["catalog", "verify", "decompose"])
    def test_thread_count_f4(self, specs_dir, capsys, command):
        argv = [command, "--spec", str(specs_dir / "f4.alg.json")]
        assert main([*argv, "--threads", "1"]) == 0
        serial = capsys.readouterr().out
        assert main([*argv, "--threads", "4"]) == 0
        assert capsys.readouterr().out == serial
        assert serial.strip() != "[]"

    def test_sampling_seed(self, specs_dir, capsys):
        argv = ["verify", "--spec", str(specs_dir / "gl21.alg.json"), "--sample", "20"]
        main([*argv, "--seed", "4"])
        first = capsys.readouterr().out
        main([*argv, "--seed", "4"])
        assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    ("text", "expected"),
    [("w=2", ("w", 2)), ("kantor=false", ("kantor", False)), ("name=x", ("name", "x"))],
)
def test_parse_param(text, expected):
    assert parse_param(text) == expected
