"""Coxlen - exact reflection length in affine Coxeter groups."""

from coxlen.affine import AffineElement, AffineReflection, ReflectionWord
from coxlen.harness import Harness
from coxlen.length import LengthReport, length_bounds, translation_length
from coxlen.roots import RootSystem, RootSystemSpec, build

__all__ = [
    "AffineElement",
    "AffineReflection",
    "ReflectionWord",
    "Harness",
    "LengthReport",
    "length_bounds",
    "translation_length",
    "RootSystem",
    "RootSystemSpec",
    "build",
]
