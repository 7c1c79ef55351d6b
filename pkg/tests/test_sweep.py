"""Identity sweeps, sampling and report aggregation."""

import pytest

from isotype.config import get_default_threads
from isotype.errors import ConfigError
from isotype.exactlinalg.scalars import QQ_FIELD
from isotype.models.report import CheckResult, Status, VerificationReport
from isotype.sweep import (
    SweepOptions,
    check_value,
    increasing,
    leading_pair_ordered,
    nondecreasing,
    random_elements,
    run_sweep,
    sample_tuples,
)


def _fails_when_sum_is_4(key):
    return sum(key) == 4


class TestRunSweep:
    def test_all_pass(self):
        result = run_sweep("zero", (3, 3), lambda key: {})
        assert result.passed
        assert result.checked == 9
        assert result.witness is None

    def test_witness_is_smallest_failing_tuple(self):
        result = run_sweep(
            "sum", (4, 4), _fails_when_sum_is_4, labels=(("a", "b", "c", "d"),) * 2
        )
        assert not result.passed
        assert result.violations == 3
        assert result.witness == ["b", "d"]

    def test_symmetry_filters(self):
        assert run_sweep("inc", (4, 4, 4), lambda key: False, predicate=increasing).checked == 4
        assert run_sweep("nd", (3, 3), lambda key: False, predicate=nondecreasing).checked == 6
        lead = run_sweep("lp", (3, 3, 2), lambda key: False, predicate=leading_pair_ordered)
        assert lead.checked == 12

    def test_empty_dimension(self):
        result = run_sweep("none", (0, 3), lambda key: True)
        assert result.passed
        assert result.checked == 0

    def test_sampling_is_deterministic(self):
        options = SweepOptions(sample=10, seed=7)
        first = run_sweep("s", (5, 5, 5), _fails_when_sum_is_4, options=options)
        second = run_sweep("s", (5, 5, 5), _fails_when_sum_is_4, options=options)
        assert first == second
        assert first.checked == 10
        assert first.note == "sampled 10 tuples, seed 7"

    def test_sample_larger_than_space_is_exhaustive(self):
        result = run_sweep("s", (2, 2), lambda key: False, options=SweepOptions(sample=100))
        assert result.checked == 4
        assert result.note is None

    def test_thread_count_does_not_change_the_result(self):
        serial = run_sweep("t", (6, 6, 6), _fails_when_sum_is_4)
        parallel = run_sweep("t", (6, 6, 6), _fails_when_sum_is_4, options=SweepOptions(threads=2))
        assert serial == parallel

    def test_sampled_thread_count_does_not_change_the_result(self):
        one = SweepOptions(sample=50, seed=3, threads=1)
        two = SweepOptions(sample=50, seed=3, threads=2)
        assert run_sweep("t", (6, 6, 6), _fails_when_sum_is_4, options=one) == run_sweep(
            "t", (6, 6, 6), _fails_when_sum_is_4, options=two
        )


def test_sample_tuples():
    keys = sample_tuples((3, 5), 20, seed=1)
    assert len(keys) == 20
    assert all(0 <= i < 3 and 0 <= j < 5 for i, j in keys)
    assert keys == sample_tuples((3, 5), 20, seed=1)
    assert sample_tuples((0, 5), 20, seed=1) == []


def test_random_elements_are_reproducible():
    a = random_elements(QQ_FIELD, 6, 4, seed=11)
    assert a == random_elements(QQ_FIELD, 6, 4, seed=11)
    assert all(set(v) <= set(range(6)) for v in a)


class TestReports:
    def test_informational_checks_do_not_fail(self):
        report = VerificationReport.from_checks(
            "t",
            [check_value("a", True), check_value("b", False, informational=True)],
        )
        assert report.passed
        assert report.status == "pass"
        assert report.failed_checks() == []
        assert not report.check("b").passed

    def test_witness_of_first_failing_check(self):
        checks = [
            CheckResult(name="a", passed=False, checked=3, violations=1),
            CheckResult(name="b", passed=False, checked=2, violations=2, witness=["x"]),
        ]
        report = VerificationReport.from_checks("t", checks, dims={"L": 3})
        assert report.status == Status.FAIL.value
        assert report.violations == 3
        assert report.witness == ["x"]
        assert report.failed_checks() == ["a", "b"]
        with pytest.raises(KeyError):
            report.check("c")

    def test_error_report(self):
        report = VerificationReport.from_error("t", ValueError("boom"))
        assert report.status == "error"
        assert report.error == "ValueError: boom"


class TestConfig:
    def test_default_threads(self, monkeypatch):
        monkeypatch.delenv("ISOTYPE_THREADS", raising=False)
        assert get_default_threads() == 1
        monkeypatch.setenv("ISOTYPE_THREADS", "3")
        assert get_default_threads() == 3

    @pytest.mark.parametrize("raw", ["abc", "0", "-2"])
    def test_invalid_threads(self, monkeypatch, raw):
        monkeypatch.setenv("ISOTYPE_THREADS", raw)
        with pytest.raises(ConfigError):
            get_default_threads()
