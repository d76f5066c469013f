"""Reflection length in affine Weyl groups.

Translations are measured by the dimension of their translation vector: the number
of coroots needed to express it. A ``k``-dimensional translation has reflection
length exactly ``2k``, and every element ``t_lambda w0`` lies between ``k`` and ``k + n``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Literal

from coxlen import linalg, roots
from coxlen.affine import (
    AffineElement,
    AffineReflection,
    ReflectionWord,
    compose,
    conjugate,
    evaluate_word,
    inverse,
    project,
    reflection,
    reflection_to_element,
    is_reflection,
)
from coxlen.linalg import Vector
from coxlen.roots import VECTOR_CACHE_SIZE, LatticeVector, RootSystem

Certificate = Literal[
    "spherical-carter",
    "translation-2k",
    "linearly-independent-roots",
    "oracle-certified",
    "bounds-only",
]
Side = Literal["front", "back"]


@dataclass(frozen=True)
class LengthReport:
    """An exact value or certified interval for ``l_R(w)``.

    ``upper`` is ``None`` when no factorization was found (unknown within a search window).
    """

    lower: int
    upper: int | None
    certificate: Certificate
    witness_word: ReflectionWord | None = None

    def __post_init__(self) -> None:
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.witness_word is not None and len(self.witness_word) != self.upper:
            raise ValueError(f"witness has length {len(self.witness_word)}, upper bound is {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict[str, Any]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "certificate": self.certificate,
            "witness": str(self.witness_word) if self.witness_word is not None else None,
        }


@dataclass(frozen=True)
class DimensionWitness:
    """``lambda = sum c_i * coroots[i]`` with ``k`` linearly independent coroots, ``k`` minimal."""

    k: int
    coroots: tuple[Vector, ...]
    coefficients: tuple[Fraction, ...] | tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "coroots": [[str(a) for a in c] for c in self.coroots],
            "coefficients": [str(c) for c in self.coefficients],
        }


# -- spherical part ----------------------------------------------------------


def spherical_length(w0: AffineElement) -> int:
    """Carter: codimension of the fixed space, i.e. ``rank(w0 - I)``."""
    if not w0.fixes_origin:
        raise ValueError(f"spherical length needs an element fixing the origin, translation is {list(w0.translation)}")
    memo = w0.system.cache("spherical_length")
    if w0.linear not in memo:
        moved = linalg.mat_sub(w0.linear, linalg.identity(w0.system.ambient_dim))
        memo[w0.linear] = linalg.rank(moved)
    return memo[w0.linear]


def spherical_factorization(w0: AffineElement) -> ReflectionWord:
    """A minimal factorization of ``w0`` over ``R0``.

    Greedy descent: peel off the first positive root whose reflection lowers the
    codimension of the fixed space.
    """
    system = w0.system
    letters: list[AffineReflection] = []
    current = w0
    remaining = spherical_length(w0)
    while remaining:
        for p in range(len(system.positive_roots)):
            r = AffineReflection(p, 0)
            candidate = compose(reflection_to_element(system, r), current)
            if spherical_length(candidate) == remaining - 1:
                letters.append(r)
                current = candidate
                remaining -= 1
                break
        else:
            raise RuntimeError("no reflection lowers the fixed-space codimension")
    return ReflectionWord(tuple(letters))


# -- dimension of lattice vectors ----------------------------------------------


def _independent_subsets(system: RootSystem, k: int) -> Iterable[tuple[int, ...]]:
    """Index-increasing tuples of ``k`` positive coroots, extended only while independent."""
    coroots = system.positive_coroots

    def extend(start: int, chosen: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
        if len(chosen) == k:
            yield chosen
            return
        for i in range(start, len(coroots)):
            candidate = chosen + (i,)
            if linalg.is_independent([coroots[j] for j in candidate]):
                yield from extend(i + 1, candidate)

    return extend(0, ())


def real_dimension(system: RootSystem, lam: LatticeVector) -> DimensionWitness:
    """Smallest ``k`` such that ``lambda`` lies in the span of ``k`` coroots.

    Iterative deepening over independent coroot subsets in index order, so the first
    hit is minimal and deterministic.
    """
    return _real_dimension(system, tuple(lam))


@lru_cache(maxsize=VECTOR_CACHE_SIZE)
def _real_dimension(system: RootSystem, lam: LatticeVector) -> DimensionWitness:
    target = system.lattice_to_ambient(lam)
    result = DimensionWitness(0, (), ())
    if not linalg.is_zero(target):
        for k in range(1, system.rank + 1):
            hit = next(_spanning_subsets(system, target, k), None)
            if hit is not None:
                chosen, coeffs = hit
                result = DimensionWitness(k, tuple(system.positive_coroots[i] for i in chosen), tuple(coeffs))
                break
        else:
            raise RuntimeError(f"{list(lam)} is not in the span of the coroots of {system.name}")
    return result


def _spanning_subsets(
    system: RootSystem, target: Vector, k: int
) -> Iterable[tuple[tuple[int, ...], list[Fraction]]]:
    for chosen in _independent_subsets(system, k):
        coeffs = linalg.in_span([system.positive_coroots[i] for i in chosen], target)
        if coeffs is not None:
            yield chosen, coeffs


def minimal_coroot_subspaces(system: RootSystem, lam: LatticeVector) -> list[tuple[Vector, ...]]:
    """Every distinct minimal coroot subspace containing ``lambda``, one spanning set each.

    Coroot subspaces are not closed under intersection, so there can be several.
    """
    k = real_dimension(system, lam).k
    if k == 0:
        return [()]
    target = system.lattice_to_ambient(lam)
    seen: dict[tuple, tuple[Vector, ...]] = {}
    for chosen, _ in _spanning_subsets(system, target, k):
        basis = tuple(system.positive_coroots[i] for i in chosen)
        seen.setdefault(linalg.rref(basis), basis)
    return list(seen.values())


def integral_expression(system: RootSystem, lam: LatticeVector) -> DimensionWitness:
    """Express ``lambda`` with integer coefficients on ``real_dimension(lambda).k`` coroots.

    The coroots are the simple coroots of ``Phi' = Phi ∩ V'`` for the minimal coroot
    subspace ``V'``; its coroot lattice is ``L ∩ V'``, so the coefficients are integers.
    """
    return _integral_expression(system, tuple(lam))


@lru_cache(maxsize=VECTOR_CACHE_SIZE)
def _integral_expression(system: RootSystem, lam: LatticeVector) -> DimensionWitness:
    real = real_dimension(system, lam)
    if real.k == 0:
        result = DimensionWitness(0, (), ())
    else:
        sub = roots.sub_root_system(system, real.coroots)
        if len(sub.simple_coroots) != real.k:
            raise RuntimeError(f"sub-root system has rank {len(sub.simple_coroots)}, expected {real.k}")
        coeffs = linalg.in_span(sub.simple_coroots, system.lattice_to_ambient(lam))
        if coeffs is None or not linalg.is_integral(coeffs):
            raise RuntimeError(f"{list(lam)} has no integral expression on {list(sub.simple_coroots)}")
        result = DimensionWitness(real.k, sub.simple_coroots, linalg.as_ints(coeffs))
    return result


# -- translations ------------------------------------------------------------


def factor_translation(system: RootSystem, lam: LatticeVector) -> ReflectionWord:
    """``t_lambda = (r_{a1,c1} r_{a1}) (r_{a2,c2} r_{a2}) ... (r_{ak,ck} r_{ak})``."""
    expr = integral_expression(system, lam)
    letters: list[AffineReflection] = []
    for check, c in zip(expr.coroots, expr.coefficients):
        alpha = roots.coroot(check)
        letters.append(reflection(system, alpha, int(c)))
        letters.append(reflection(system, alpha, 0))
    return ReflectionWord(tuple(letters))


def translation_length(system: RootSystem, lam: LatticeVector) -> LengthReport:
    """A ``k``-dimensional translation has reflection length exactly ``2k``."""
    witness = factor_translation(system, lam)
    return LengthReport(len(witness), len(witness), "translation-2k", witness)


def rewrite_factorization(
    system: RootSystem,
    factors: ReflectionWord,
    positions: Sequence[int],
    side: Side = "front",
) -> ReflectionWord:
    """Move the letters at ``positions`` (0-based, increasing) to the front or back.

    Uses ``a s = s (s a s)`` and ``s a = (s a s) s``; length and product are unchanged.
    """
    if side not in ("front", "back"):
        raise ValueError(f"Invalid side '{side}'. Must be one of: back, front")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ValueError(f"positions must be strictly increasing, got {list(positions)}")
    if positions and (positions[0] < 0 or positions[-1] >= len(factors)):
        raise ValueError(f"positions {list(positions)} out of range for a word of length {len(factors)}")

    letters = list(factors)
    if side == "front":
        for target, pos in enumerate(positions):
            for i in range(pos, target, -1):
                a, s = letters[i - 1], letters[i]
                letters[i - 1], letters[i] = s, conjugate(system, s, a)
    else:
        for t, pos in enumerate(reversed(positions)):
            target = len(letters) - 1 - t
            for i in range(pos, target):
                s, a = letters[i], letters[i + 1]
                letters[i], letters[i + 1] = conjugate(system, s, a), s
    return ReflectionWord(tuple(letters))


def move_origin_word(system: RootSystem, lam: LatticeVector) -> ReflectionWord:
    """``k`` reflections whose product sends the origin to ``lambda``."""
    factors = factor_translation(system, lam)
    k = len(factors) // 2
    rewritten = rewrite_factorization(system, factors, list(range(1, 2 * k, 2)), side="back")
    return ReflectionWord(rewritten.letters[:k])


def move_origin_element(system: RootSystem, lam: LatticeVector) -> AffineElement:
    """An element of reflection length ``k`` sending the origin to ``lambda``."""
    return evaluate_word(system, move_origin_word(system, lam))


# -- general elements ----------------------------------------------------------


def lin_ind_length(system: RootSystem, factors: ReflectionWord) -> int | None:
    """``len(factors)`` when the roots of the letters are linearly independent, else ``None``."""
    vectors = [system.positive_roots[r.root_index] for r in factors]
    if vectors and not linalg.is_independent(vectors):
        return None
    return len(factors)


def length_bounds(w: AffineElement) -> LengthReport:
    """``max(k, l_R0(w0)) <= l_R(w) <= k + n`` with a witness of the upper bound.

    Pure translations and origin-fixing elements are answered exactly.
    """
    system = w.system
    if w.is_translation:
        return translation_length(system, w.translation)
    if w.fixes_origin:
        m = spherical_length(w)
        return LengthReport(m, m, "spherical-carter", spherical_factorization(w))

    k = integral_expression(system, w.translation).k
    lower = max(k, spherical_length(project(w)))
    u_word = move_origin_word(system, w.translation)
    rest = compose(inverse(evaluate_word(system, u_word)), w)
    witness = u_word + spherical_factorization(rest)
    if lin_ind_length(system, witness) is not None:
        return LengthReport(len(witness), len(witness), "linearly-independent-roots", witness)
    return LengthReport(lower, len(witness), "bounds-only", witness)


def certified_floor(w: AffineElement) -> int:
    """A proven lower bound, sharpened by parity and by the identity/reflection cases.

    Every reflection has determinant -1, so ``l_R(w)`` has the parity of ``l_R0(p(w))``.
    """
    report = length_bounds(w)
    if report.exact:
        return report.lower
    floor = report.lower
    parity = spherical_length(project(w)) % 2
    if floor % 2 != parity:
        floor += 1
    if floor <= 1 and not w.is_identity and is_reflection(w) is None:
        floor = 3 if parity else 2
    return floor


def reducible_length(reports: Sequence[LengthReport]) -> LengthReport:
    """Reflection length is additive over the factors of a reducible group."""
    lower = sum(r.lower for r in reports)
    upper = None if any(r.upper is None for r in reports) else sum(r.upper for r in reports)  # type: ignore[misc]
    certificates = {r.certificate for r in reports}
    certificate: Certificate = certificates.pop() if len(certificates) == 1 else "bounds-only"
    return LengthReport(lower, upper, certificate)


def exact_bounds_family(
    i: int, j: int, k: int, system: RootSystem | None = None
) -> tuple[RootSystem, AffineElement, ReflectionWord]:
    """``w_ijk = r_{a12,i} r_{a23,j} r_{a34,k}`` in affine A3, with ``a_ab = e_a - e_b``."""
    system = system or roots.build("A3")
    letters = ReflectionWord(
        (
            reflection(system, linalg.vec(1, -1, 0, 0), i),
            reflection(system, linalg.vec(0, 1, -1, 0), j),
            reflection(system, linalg.vec(0, 0, 1, -1), k),
        )
    )
    return system, evaluate_word(system, letters), letters
