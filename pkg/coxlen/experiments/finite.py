"""Experiments on the finite Weyl groups ``W0``."""

from __future__ import annotations

from collections.abc import Sequence

from coxlen import roots
from coxlen.experiments.base import Experiment, ExperimentResult
from coxlen.oracle import a3_crossing_obstruction, enumerate_w0, solomon_polynomial

FINITE_TYPES = ("A1", "A2", "A3", "B2", "B3", "D4", "G2")


class CarterExperiment(Experiment):
    """Fixed-space codimension equals Cayley-graph distance for every element."""

    name = "carter"
    columns = ("type", "elements", "max_length", "agree")

    def __init__(self, system_specs: Sequence[str] = FINITE_TYPES) -> None:
        self.system_specs = tuple(system_specs)

    def run(self) -> ExperimentResult:
        result = self.new_result()
        for spec in self.system_specs:
            table = enumerate_w0(roots.build(spec))
            bad = [i for i, (a, b) in enumerate(zip(table.spherical, table.distances)) if a != b]
            if bad:
                result.fail(f"{spec}: {len(bad)} elements where codimension and Cayley distance differ")
            result.add_row(type=spec, elements=len(table), max_length=max(table.distances), agree=not bad)
        return result


class SolomonExperiment(Experiment):
    """Reflection-length distribution of ``W0`` against ``prod (1 + e_i x)``."""

    name = "solomon"
    columns = ("type", "coefficients", "factored", "exponents")

    def __init__(self, system_specs: Sequence[str] = FINITE_TYPES) -> None:
        self.system_specs = tuple(system_specs)

    def run(self) -> ExperimentResult:
        result = self.new_result()
        for spec in self.system_specs:
            system = roots.build(spec)
            table = enumerate_w0(system)
            try:
                poly = solomon_polynomial(table)
            except RuntimeError as e:
                result.fail(str(e))
                continue
            result.add_row(
                type=spec,
                coefficients=poly.to_list(),
                factored=poly.factored(),
                exponents=list(system.exponents),
            )
        return result


class A3CrossingExperiment(Experiment):
    """Minimal factorizations of the A3 4-cycle never use both crossing reflections."""

    name = "a3-crossing"
    columns = ("total", "both_crossing", "coverage")

    def run(self) -> ExperimentResult:
        result = self.new_result()
        try:
            report = a3_crossing_obstruction()
        except RuntimeError as e:
            result.fail(str(e))
            return result
        result.add_row(**report.to_dict())
        return result
