"""Example usage of coxlen: run a batch of experiments."""

from __future__ import annotations

import sys

from coxlen import Harness
from coxlen.experiments import (
    A3CrossingExperiment,
    CarterExperiment,
    CensusExperiment,
    SolomonExperiment,
    UCPowersExperiment,
)


def main() -> None:
    harness = Harness()

    experiments = [
        CensusExperiment("A2", box=3),
        CensusExperiment("A3", box=3),
        CarterExperiment(),
        SolomonExperiment(),
        A3CrossingExperiment(),
    ]

    if "--universal" in sys.argv:
        experiments.append(UCPowersExperiment(max_n=4))

    harness.add(*experiments)

    if not harness.run():
        sys.exit(1)


if __name__ == "__main__":
    main()
