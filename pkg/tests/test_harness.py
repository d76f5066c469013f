"""Tests for the experiment harness (--verbose and --fail-fast flags)."""

from __future__ import annotations

from unittest.mock import patch

import pytest

from coxlen import Harness
from coxlen.experiments import Experiment, ExperimentResult


class _Stub(Experiment):
    columns = ("value",)

    def __init__(self, name: str, ok: bool = True) -> None:
        self.name = name
        self.ok = ok
        self.calls = 0

    def run(self) -> ExperimentResult:
        self.calls += 1
        result = self.new_result()
        result.add_row(value=1)
        if not self.ok:
            result.fail(f"{self.name} is broken")
        return result


class TestHarness:
    """Test running experiments and reporting status."""

    def test_add_chains(self) -> None:
        harness = Harness()
        assert harness.add(_Stub("one")) is harness

    def test_all_pass(self, capsys: pytest.CaptureFixture[str]) -> None:
        harness = Harness().add(_Stub("one"), _Stub("two"))
        with patch("sys.argv", ["main.py"]):
            assert harness.run()
        err = capsys.readouterr().err
        assert "PASS" in err
        assert "2 experiments run, 0 failed" in err

    def test_failure_is_reported(self, capsys: pytest.CaptureFixture[str]) -> None:
        harness = Harness().add(_Stub("bad", ok=False), _Stub("good"))
        with patch("sys.argv", ["main.py"]):
            assert not harness.run()
        err = capsys.readouterr().err
        assert "FAIL" in err
        assert "bad is broken" in err
        assert len(harness.results) == 2


class TestFlags:
    """Test that Harness.run() reads --verbose and --fail-fast from sys.argv."""

    def test_fail_fast_flag(self) -> None:
        later = _Stub("later")
        harness = Harness().add(_Stub("bad", ok=False), later)
        with patch("sys.argv", ["main.py", "--fail-fast"]):
            harness.run()
        assert later.calls == 0
        assert len(harness.results) == 1

    def test_explicit_fail_fast_false_overrides_argv(self) -> None:
        later = _Stub("later")
        harness = Harness().add(_Stub("bad", ok=False), later)
        with patch("sys.argv", ["main.py", "--fail-fast"]):
            harness.run(fail_fast=False)
        assert later.calls == 1

    def test_verbose_flag(self, capsys: pytest.CaptureFixture[str]) -> None:
        with patch("sys.argv", ["main.py", "--verbose"]):
            Harness().add(_Stub("one")).run()
        err = capsys.readouterr().err
        assert "Legend:" in err
        assert "{'value': 1}" in err

    def test_explicit_verbose_overrides_argv(self, capsys: pytest.CaptureFixture[str]) -> None:
        with patch("sys.argv", ["main.py"]):
            Harness().add(_Stub("one")).run(verbose=True)
        assert "Legend:" in capsys.readouterr().err

    def test_quiet_by_default(self, capsys: pytest.CaptureFixture[str]) -> None:
        with patch("sys.argv", ["main.py"]):
            Harness().add(_Stub("one")).run()
        assert "Legend:" not in capsys.readouterr().err
