"""Coxlen experiments."""

from coxlen.experiments.base import SCHEMA, Experiment, ExperimentResult
from coxlen.experiments.finite import A3CrossingExperiment, CarterExperiment, SolomonExperiment
from coxlen.experiments.lattice import CensusExperiment, EquivalenceExperiment, lattice_box
from coxlen.experiments.polynomials import FLambdaExperiment
from coxlen.experiments.properties import PropertiesExperiment
from coxlen.experiments.universal import UCPowersExperiment

EXPERIMENTS: dict[str, type[Experiment]] = {
    cls.name: cls
    for cls in (
        CensusExperiment,
        EquivalenceExperiment,
        CarterExperiment,
        SolomonExperiment,
        FLambdaExperiment,
        A3CrossingExperiment,
        UCPowersExperiment,
        PropertiesExperiment,
    )
}

__all__ = [
    "SCHEMA",
    "EXPERIMENTS",
    "Experiment",
    "ExperimentResult",
    "CensusExperiment",
    "EquivalenceExperiment",
    "CarterExperiment",
    "SolomonExperiment",
    "FLambdaExperiment",
    "A3CrossingExperiment",
    "UCPowersExperiment",
    "PropertiesExperiment",
    "lattice_box",
]
