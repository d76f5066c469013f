"""Seeded randomized sweeps over the group-theoretic invariants."""

from __future__ import annotations

import random
from collections.abc import Callable

from coxlen import roots
from coxlen.affine import (
    AffineElement,
    AffineReflection,
    ReflectionWord,
    compose,
    evaluate_word,
    inverse,
    reflection_to_element,
)
from coxlen.experiments.base import Experiment, ExperimentResult
from coxlen.length import (
    LengthReport,
    certified_floor,
    length_bounds,
    real_dimension,
    reducible_length,
    rewrite_factorization,
    spherical_length,
    translation_length,
)
from coxlen.oracle import enumerate_w0, oracle_affine_length
from coxlen.roots import RootSystem
from coxlen.syntax import format_element, parse_element

DEFAULT_SEED = 2024
SWEEP_TYPES = ("A2", "B2", "G2", "A3")


def random_word(rng: random.Random, system: RootSystem, length: int, window: int = 2) -> ReflectionWord:
    count = len(system.positive_roots)
    return ReflectionWord(
        tuple(AffineReflection(rng.randrange(count), rng.randint(-window, window)) for _ in range(length))
    )


def random_element(rng: random.Random, system: RootSystem, max_letters: int = 5) -> AffineElement:
    return evaluate_word(system, random_word(rng, system, rng.randint(0, max_letters)))


def exact_length(w: AffineElement, window: int = 3) -> int | None:
    """``l_R(w)`` when the bounds meet the certified floor or the oracle certifies it."""
    report = length_bounds(w)
    if report.exact:
        return report.lower
    if certified_floor(w) == report.upper:
        return report.upper
    assert report.upper is not None
    checked = oracle_affine_length(w, window, report.upper, enumerate_w0(w.system))
    return checked.lower if checked.exact else None


class PropertiesExperiment(Experiment):
    """Each invariant is checked on ``cases`` random inputs drawn from ``Random(seed)``."""

    name = "properties"
    columns = ("property", "cases", "failures")

    def __init__(self, seed: int = DEFAULT_SEED, cases: int = 200) -> None:
        self.seed = seed
        self.cases = cases

    def _checks(self) -> dict[str, Callable[[random.Random], str | None]]:
        return {
            "rewriting": self._rewriting,
            "involution": self._involution,
            "homomorphism": self._homomorphism,
            "normal-form": self._normal_form,
            "inverse-bounds": self._inverse_bounds,
            "reducible-additivity": self._reducible_additivity,
            "finite-factors": self._finite_factors,
        }

    def run(self) -> ExperimentResult:
        result = self.new_result()
        for name, check in self._checks().items():
            rng = random.Random(f"{self.seed}:{name}")
            failures = 0
            for case in range(self.cases):
                problem = check(rng)
                if problem is not None:
                    failures += 1
                    result.fail(f"{name} case {case}: {problem}")
            result.add_row(property=name, cases=self.cases, failures=failures)
        finite = self._finite_factor_maximum()
        result.summary = {"seed": self.seed, "finite_factor_max": finite}
        if finite != 5:
            result.fail(f"finite-factors: maximal length over A1 x affine A2 samples is {finite}, expected 5")
        return result

    # -- individual invariants ----------------------------------------------

    def _system(self, rng: random.Random) -> RootSystem:
        return roots.build(rng.choice(SWEEP_TYPES))

    def _rewriting(self, rng: random.Random) -> str | None:
        system = self._system(rng)
        factors = random_word(rng, system, rng.randint(1, 5))
        positions = sorted(rng.sample(range(len(factors)), rng.randint(0, len(factors))))
        side = rng.choice(("front", "back"))
        rewritten = rewrite_factorization(system, factors, positions, side)
        if len(rewritten) != len(factors):
            return f"{factors} changed length under rewriting"
        if evaluate_word(system, rewritten) != evaluate_word(system, factors):
            return f"{factors} -> {rewritten} ({side} {positions}) changed the product"
        return None

    def _involution(self, rng: random.Random) -> str | None:
        system = self._system(rng)
        r = random_word(rng, system, 1, window=4)[0]
        element = reflection_to_element(system, r)
        if not compose(element, element).is_identity:
            return f"{r} squared is not the identity"
        w = random_element(rng, system)
        if inverse(inverse(w)) != w or not compose(w, inverse(w)).is_identity:
            return f"inverse fails on {format_element(w)}"
        return None

    def _homomorphism(self, rng: random.Random) -> str | None:
        system = self._system(rng)
        u = random_word(rng, system, rng.randint(0, 4))
        v = random_word(rng, system, rng.randint(0, 4))
        wu, wv = evaluate_word(system, u), evaluate_word(system, v)
        if evaluate_word(system, u + v) != compose(wu, wv):
            return f"evaluation of {u + v} is not the product of its halves"
        lam = tuple(rng.randint(-2, 2) for _ in range(system.rank))
        x = system.lattice_to_ambient(lam)
        if compose(wu, wv)(x) != wu(wv(x)):
            return f"action of {u + v} on {list(lam)} is not composition"
        return None

    def _normal_form(self, rng: random.Random) -> str | None:
        system = self._system(rng)
        w = random_element(rng, system)
        text = format_element(w)
        if parse_element(system, text) != w:
            return f"'{text}' does not parse back to the same element"
        return None

    def _inverse_bounds(self, rng: random.Random) -> str | None:
        system = self._system(rng)
        w = random_element(rng, system)
        a, b = length_bounds(w), length_bounds(inverse(w))
        assert a.upper is not None and b.upper is not None
        if max(a.lower, b.lower) > min(a.upper, b.upper):
            return f"{format_element(w)}: intervals {a.lower}..{a.upper} and {b.lower}..{b.upper} are disjoint"
        k = real_dimension(system, w.translation).k
        if max(a.upper, b.upper) > k + system.rank:
            return f"{format_element(w)}: upper bound exceeds k + n = {k + system.rank}"
        return None

    def _reducible_additivity(self, rng: random.Random) -> str | None:
        whole = roots.build("A1xA2")
        parts = (roots.build("A1"), roots.build("A2"))
        lam = tuple(rng.randint(-3, 3) for _ in range(whole.rank))
        split = (lam[:1], lam[1:])
        combined = reducible_length([translation_length(p, mu) for p, mu in zip(parts, split)])
        direct = translation_length(whole, lam)
        if (combined.lower, combined.upper) != (direct.lower, direct.upper):
            return f"{list(lam)}: components give {combined.lower}, the product gives {direct.lower}"
        if combined.certificate != "translation-2k":
            return f"{list(lam)}: combined certificate is {combined.certificate}"
        return None

    def _finite_factors(self, rng: random.Random) -> str | None:
        report = self._finite_factor_sample(rng)
        if report is None:
            return None
        # 2n - n_f with n = 3 and one finite factor
        if report.lower > 5:
            return f"length {report.lower} exceeds 2n - n_f = 5"
        return None

    def _finite_factor_sample(self, rng: random.Random) -> LengthReport | None:
        """Combine an element of finite ``W(A1)`` with one of affine ``A2``."""
        finite, affine = roots.build("A1"), roots.build("A2")
        w0 = evaluate_word(finite, [AffineReflection(0, 0)] * rng.randint(0, 1))
        m = spherical_length(w0)
        w = random_element(rng, affine, max_letters=4)
        value = exact_length(w)
        if value is None:
            return None
        return reducible_length(
            [LengthReport(m, m, "spherical-carter"), LengthReport(value, value, "oracle-certified")]
        )

    def _finite_factor_maximum(self) -> int:
        rng = random.Random(f"{self.seed}:finite-factor-maximum")
        # s x t_{a1 - a2} reaches 1 + 2 * 2
        top = reducible_length(
            [LengthReport(1, 1, "spherical-carter"), translation_length(roots.build("A2"), (1, -1))]
        )
        best = top.lower
        for _ in range(self.cases):
            report = self._finite_factor_sample(rng)
            if report is not None and report.exact:
                best = max(best, report.lower)
        return best
