"""Harness - runs a batch of experiments and reports PASS/FAIL on stderr."""

from __future__ import annotations

import sys

from coxlen.color import BOLD, DIM, GREEN, RED, color, status
from coxlen.experiments.base import Experiment, ExperimentResult

_SENTINEL: object = object()

_LEGEND = f"""  {color('Legend:', BOLD)}
    {color('PASS', GREEN)} - every row checked out
    {color('FAIL', RED)} - at least one failure, listed below the line
"""


class Harness:
    """Runs registered experiments in order and collects their results."""

    def __init__(self) -> None:
        self.experiments: list[Experiment] = []
        self.results: list[ExperimentResult] = []

    def add(self, *experiments: Experiment) -> Harness:
        """Add one or more experiments. Returns self for chaining."""
        self.experiments.extend(experiments)
        return self

    def run(
        self,
        *,
        verbose: bool | object = _SENTINEL,
        fail_fast: bool | object = _SENTINEL,
    ) -> bool:
        """Run all registered experiments; ``True`` iff none failed.

        If flags are not explicitly passed, checks sys.argv for ``--verbose``
        and ``--fail-fast``.
        """
        resolved_verbose = bool(verbose) if verbose is not _SENTINEL else "--verbose" in sys.argv
        resolved_fail_fast = bool(fail_fast) if fail_fast is not _SENTINEL else "--fail-fast" in sys.argv

        if resolved_verbose:
            print(_LEGEND, file=sys.stderr)

        self.results = []
        for experiment in self.experiments:
            result = experiment.run()
            self.results.append(result)
            status("PASS" if result.ok else "FAIL", f"{result.name} ({len(result.rows)} rows)")
            if resolved_verbose:
                for row in result.rows:
                    print(f"        {color(str(row), DIM)}", file=sys.stderr)
            for failure in result.failures:
                print(f"        {color(failure, RED)}", file=sys.stderr)
            if not result.ok and resolved_fail_fast:
                break

        failed = sum(1 for r in self.results if not r.ok)
        print(f"\n  {color(f'{len(self.results)} experiments run, {failed} failed', DIM)}", file=sys.stderr)
        return failed == 0
