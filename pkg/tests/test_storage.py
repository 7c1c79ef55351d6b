"""Spec parsing with located errors, spec round trips and golden files."""

import json

import pytest

from isotype.errors import SpecError
from isotype.models.spec import AlgSpec, Command
from isotype.storage import ReportStorage, SpecStorage, parse_spec_text, value_offsets

BAD_COEFFICIENT = """{
  "spaces": {"V": {"dim": 1}},
  "maps": {
    "m": {
      "domains": ["V", "V"],
      "codomain": "V",
      "entries": [{"i": 0, "j": 0, "k": 0, "c": "1/0"}]
    }
  }
}
"""


def _spec(**sections) -> str:
    base = {"spaces": {"V": {"dim": 1}}}
    base.update(sections)
    return json.dumps(base, indent=2)


class TestParsing:
    def test_bundled_spec(self, specs_dir):
        spec = SpecStorage().load(specs_dir / "sl2.alg.json")
        assert spec.field == "Q"
        assert set(spec.algebras) == {"sl2", "split2"}
        assert spec.tasks[0].command == Command.VERIFY
        assert spec.tasks[0].label == "verify:jacobi:sl2"

    def test_field_is_normalized(self):
        assert parse_spec_text(_spec(field="GF(7)")).field == "GF(7)"
        assert parse_spec_text(_spec(field="QQ")).field == "Q"

    def test_zero_denominator_is_located(self):
        with pytest.raises(SpecError) as info:
            parse_spec_text(BAD_COEFFICIENT, "bad.alg.json")
        error = info.value
        assert error.message.startswith("maps.m.entries[0].c:")
        offset = BAD_COEFFICIENT.index('"1/0"')
        assert error.line == BAD_COEFFICIENT.count("\n", 0, offset) + 1
        assert error.column == offset - BAD_COEFFICIENT.rfind("\n", 0, offset)
        assert str(error).startswith(f"bad.alg.json:{error.line}:{error.column}: ")

    def test_unknown_map(self):
        text = _spec(algebras={"a": {"space": "V", "product": "nope"}})
        with pytest.raises(SpecError) as info:
            parse_spec_text(text)
        assert info.value.message == "algebras.a.product: unknown map 'nope'"
        assert info.value.line is not None

    def test_duplicate_name(self):
        text = _spec(
            maps={"m": {"domains": ["V", "V"], "codomain": "V"}},
            algebras={"x": {"space": "V", "product": "m"}},
            elements={"x": {"of": "x", "coeffs": {"0": "1"}}},
        )
        with pytest.raises(SpecError, match="name 'x' is declared twice"):
            parse_spec_text(text)

    def test_index_out_of_range(self):
        entry = {"i": 1, "k": 0, "c": "1"}
        text = _spec(maps={"m": {"domains": ["V"], "codomain": "V", "entries": [entry]}})
        with pytest.raises(SpecError, match=r"maps\.m\.entries\[0\]\.i: index 1 out of range"):
            parse_spec_text(text)

    def test_invalid_json(self):
        with pytest.raises(SpecError) as info:
            parse_spec_text('{"spaces": {', "broken.json")
        assert info.value.message.startswith("invalid JSON: ")
        assert (info.value.line, info.value.column) == (1, 13)

    def test_unknown_field(self):
        with pytest.raises(SpecError) as info:
            parse_spec_text(_spec(field="GF(9)"))
        assert info.value.message == "field: GF(9) is not a prime field"

    def test_validator_message_is_bare(self):
        with pytest.raises(SpecError) as info:
            parse_spec_text(_spec(field="R"))
        assert info.value.message == "field: unknown field descriptor 'R'"
        assert "Value error" not in str(info.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecError, match="cannot read spec file"):
            SpecStorage(tmp_path).load("absent.alg.json")


def test_value_offsets():
    text = '{"a": [1, {"b": "x"}], "c": null}'
    offsets = value_offsets(text)
    assert offsets[()] == 0
    assert offsets[("a",)] == text.index("[")
    assert offsets[("a", 1, "b")] == text.index('"x"')
    assert offsets[("c",)] == text.index("null")


def test_spec_round_trip(tmp_path, specs_dir):
    storage = SpecStorage(tmp_path)
    spec = storage.load(specs_dir / "gl21.alg.json")
    path = storage.save(spec, "copy.alg.json")
    assert path == tmp_path / "copy.alg.json"
    assert storage.load("copy.alg.json") == spec
    assert isinstance(spec, AlgSpec)


class TestGolden:
    def test_missing_golden_is_recorded(self, tmp_path):
        storage = ReportStorage(tmp_path)
        assert storage.matches_golden("golden.json", "[]\n")
        assert (tmp_path / "golden.json").read_text(encoding="utf-8") == "[]\n"

    def test_match_and_mismatch(self, tmp_path):
        storage = ReportStorage(tmp_path)
        storage.save("golden.json", "[1]\n")
        assert storage.matches_golden("golden.json", "[1]\n")
        assert not storage.matches_golden("golden.json", "[1] \n")
