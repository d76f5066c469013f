"""Powers of ``abc`` in the universal Coxeter group."""

from __future__ import annotations

from coxlen.experiments.base import Experiment, ExperimentResult
from coxlen.universal import MAX_UNRESTRICTED_WORD_LENGTH, MAX_WORD_LENGTH, UCWord, uc_reflection_length


class UCPowersExperiment(Experiment):
    """``l_R((abc)^n) = n + 2``, strictly increasing in ``n``."""

    name = "uc-powers"
    columns = ("n", "word", "ls", "lr", "expected", "cross_checked")

    def __init__(self, max_n: int = 4) -> None:
        if 3 * max_n > MAX_WORD_LENGTH:
            raise ValueError(f"max_n must be at most {MAX_WORD_LENGTH // 3}, got {max_n}")
        self.max_n = max_n

    def run(self) -> ExperimentResult:
        result = self.new_result()
        for n in range(1, self.max_n + 1):
            w = UCWord("abc") ** n
            lr = uc_reflection_length(w)
            if lr != n + 2:
                result.fail(f"(abc)^{n}: reflection length {lr}, expected {n + 2}")
            result.add_row(
                n=n,
                word=str(w),
                ls=len(w),
                lr=lr,
                expected=n + 2,
                cross_checked=len(w) <= MAX_UNRESTRICTED_WORD_LENGTH,
            )
        return result
