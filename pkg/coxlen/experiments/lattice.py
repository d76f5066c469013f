"""Sweeps over a box of coroot-lattice vectors."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from coxlen import roots
from coxlen.affine import translation
from coxlen.experiments.base import Experiment, ExperimentResult
from coxlen.length import integral_expression, real_dimension, translation_length
from coxlen.oracle import enumerate_w0, oracle_affine_length, origin_distance_map
from coxlen.roots import LatticeVector


def lattice_box(rank: int, box: int) -> Iterator[LatticeVector]:
    """Every vector with coordinates in ``[-box, box]``, in lexicographic order."""
    if box < 0:
        raise ValueError(f"box must be non-negative, got {box}")
    return itertools.product(range(-box, box + 1), repeat=rank)


class CensusExperiment(Experiment):
    """Translation lengths over a box: each is ``2k <= 2n`` and ``2n`` is attained.

    With ``window`` set, every value is also certified by the windowed oracle.
    """

    name = "census"
    columns = ("lambda", "k", "lower", "upper", "certificate")

    def __init__(self, system_spec: str = "A2", box: int = 3, window: int | None = None) -> None:
        self.system_spec = system_spec
        self.box = box
        self.window = window

    def run(self) -> ExperimentResult:
        result = self.new_result()
        system = roots.build(self.system_spec)
        n = system.rank
        table = enumerate_w0(system) if self.window is not None else None
        longest = 0
        for lam in lattice_box(n, self.box):
            report = translation_length(system, lam)
            k = real_dimension(system, lam).k
            certificate = report.certificate
            if report.lower != 2 * k or not report.exact:
                result.fail(f"{list(lam)}: translation length {report.lower} is not 2k = {2 * k}")
            if report.lower > 2 * n:
                result.fail(f"{list(lam)}: translation length {report.lower} exceeds 2n = {2 * n}")
            if table is not None and self.window is not None:
                checked = oracle_affine_length(translation(system, lam), self.window, 2 * n, table)
                if checked.exact and checked.lower == report.lower:
                    certificate = "oracle-certified"
                else:
                    result.fail(f"{list(lam)}: oracle gives {checked.lower}..{checked.upper}, expected {report.lower}")
            longest = max(longest, report.lower)
            result.add_row(
                **{"lambda": list(lam), "k": k, "lower": report.lower, "upper": report.upper, "certificate": certificate}
            )
        if longest != 2 * n:
            result.fail(f"maximal translation length {longest} does not attain 2n = {2 * n}")
        result.summary = {"type": system.name, "n": n, "points": len(result.rows), "max_length": longest}
        return result


class EquivalenceExperiment(Experiment):
    """Real dimension, integral dimension and origin-moving distance agree on a box."""

    name = "equivalence"
    columns = ("lambda", "real", "integral", "origin")

    def __init__(self, system_spec: str = "A2", box: int = 3, window: int | None = None) -> None:
        self.system_spec = system_spec
        self.box = box
        self.window = window if window is not None else 2 * box

    def run(self) -> ExperimentResult:
        result = self.new_result()
        system = roots.build(self.system_spec)
        distances = origin_distance_map(system, self.window, system.rank)
        for lam in lattice_box(system.rank, self.box):
            real = real_dimension(system, lam).k
            integral = integral_expression(system, lam).k
            origin = distances.get(lam)
            if origin is None:
                result.fail(f"{list(lam)}: not reached within window {self.window}; increase --window")
            elif not real == integral == origin:
                result.fail(f"{list(lam)}: real {real}, integral {integral}, origin distance {origin}")
            result.add_row(**{"lambda": list(lam), "real": real, "integral": integral, "origin": origin})
        result.summary = {"type": system.name, "points": len(result.rows), "window": self.window}
        return result
