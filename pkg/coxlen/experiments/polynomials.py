"""Length polynomials ``f_lambda`` of the cosets ``t_lambda W0``."""

from __future__ import annotations

from coxlen import roots
from coxlen.experiments.base import Experiment, ExperimentResult
from coxlen.experiments.lattice import lattice_box
from coxlen.length import real_dimension
from coxlen.oracle import enumerate_w0, f_lambda_polynomial, solomon_polynomial


class FLambdaExperiment(Experiment):
    """Each ``f_lambda`` has degree ``<= k + n`` and is divisible by ``x^k``; ``f_0`` is Solomon's."""

    name = "f-lambda"
    columns = ("lambda", "k", "coefficients", "degree", "divisible")

    def __init__(self, system_spec: str = "A2", box: int = 2, window: int = 3) -> None:
        self.system_spec = system_spec
        self.box = box
        self.window = window

    def run(self) -> ExperimentResult:
        result = self.new_result()
        system = roots.build(self.system_spec)
        table = enumerate_w0(system)
        n = system.rank
        solomon = solomon_polynomial(table)
        for lam in lattice_box(n, self.box):
            k = real_dimension(system, lam).k
            try:
                poly = f_lambda_polynomial(system, lam, self.window, table)
            except RuntimeError as e:
                result.fail(f"{list(lam)}: {e}")
                continue
            divisible = poly.divisible_by_x_power(k)
            if poly.degree > k + n:
                result.fail(f"{list(lam)}: degree {poly.degree} exceeds k + n = {k + n}")
            if not divisible:
                result.fail(f"{list(lam)}: {poly.to_list()} is not divisible by x^{k}")
            if not any(lam) and poly != solomon:
                result.fail(f"f_0 = {poly.to_list()} differs from the Solomon polynomial {solomon.to_list()}")
            result.add_row(
                **{
                    "lambda": list(lam),
                    "k": k,
                    "coefficients": poly.to_list(),
                    "degree": poly.degree,
                    "divisible": divisible,
                }
            )
        result.summary = {"type": system.name, "points": len(result.rows), "window": self.window}
        return result
