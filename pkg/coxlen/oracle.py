"""Brute-force checks that do not rely on the length formulas.

Finite Weyl groups are enumerated outright. Affine elements are factored by
iterative deepening over a finite window of offsets ``|i| <= window``. A result
from the window search counts as exact only when it meets a proven lower bound.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import sympy

from coxlen import linalg, roots
from coxlen.affine import (
    AffineElement,
    AffineReflection,
    ReflectionWord,
    compose,
    evaluate_word,
    identity,
    project,
    reflection,
    reflection_to_element,
    translation,
)
from coxlen.length import LengthReport, certified_floor, real_dimension, spherical_length
from coxlen.linalg import Matrix
from coxlen.roots import LatticeVector, RootSystem

X = sympy.Symbol("x")


@dataclass(frozen=True)
class LengthPolynomial:
    """``sum_w x^{l_R(w)}`` as a coefficient list; index = reflection length."""

    coefficients: tuple[int, ...]

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> LengthPolynomial:
        counts = Counter(lengths)
        top = max(counts, default=-1)
        return cls(tuple(counts.get(i, 0) for i in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def as_expr(self) -> sympy.Expr:
        return sympy.Add(*(c * X**i for i, c in enumerate(self.coefficients)))

    def factored(self) -> str:
        return str(sympy.factor(self.as_expr()))

    def divisible_by_x_power(self, k: int) -> bool:
        return sympy.rem(self.as_expr(), X**k, X) == 0

    def to_list(self) -> list[int]:
        return list(self.coefficients)


class FiniteGroupTable:
    """All elements of ``W0`` with multiplication by the reflections ``R0``.

    Element ``0`` is the identity. Ordinals index ``elements``.
    """

    def __init__(self, system: RootSystem, elements: Sequence[AffineElement]) -> None:
        self.system = system
        self.elements: list[AffineElement] = list(elements)
        self.index: dict[Matrix, int] = {w.linear: i for i, w in enumerate(self.elements)}
        self.reflections_R0: tuple[int, ...] = tuple(
            self.ordinal(reflection_to_element(system, AffineReflection(p, 0)))
            for p in range(len(system.positive_roots))
        )

    def __len__(self) -> int:
        return len(self.elements)

    def ordinal(self, w0: AffineElement) -> int:
        if not w0.fixes_origin or w0.linear not in self.index:
            raise ValueError(f"element is not in the finite Weyl group of {self.system.name}")
        return self.index[w0.linear]

    @cached_property
    def left_reflection(self) -> tuple[tuple[int, ...], ...]:
        """``left_reflection[p][g]`` is the ordinal of ``r_p * elements[g]``."""
        rows = []
        for g_r in self.reflections_R0:
            r = self.elements[g_r]
            rows.append(tuple(self.index[compose(r, w).linear] for w in self.elements))
        return tuple(rows)

    @cached_property
    def distances(self) -> tuple[int, ...]:
        """Cayley-graph distance from the identity over ``R0``, by BFS."""
        dist = [-1] * len(self.elements)
        dist[0] = 0
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for row in self.left_reflection:
                h = row[g]
                if dist[h] < 0:
                    dist[h] = dist[g] + 1
                    queue.append(h)
        return tuple(dist)

    @cached_property
    def spherical(self) -> tuple[int, ...]:
        """Codimension of the fixed space of each element."""
        return tuple(spherical_length(w) for w in self.elements)


def enumerate_w0(system: RootSystem) -> FiniteGroupTable:
    """Close ``{r_alpha : alpha simple}`` under multiplication."""
    memo = system.cache("w0_table")
    if "table" in memo:
        return memo["table"]
    simple = [reflection_to_element(system, reflection(system, a, 0)) for a in system.simple_roots]
    start = identity(system)
    elements = [start]
    seen = {start.linear}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in simple:
            v = compose(w, s)
            if v.linear not in seen:
                seen.add(v.linear)
                elements.append(v)
                queue.append(v)
    table = FiniteGroupTable(system, elements)
    memo["table"] = table
    return table


def cayley_reflection_distance(table: FiniteGroupTable, w0: AffineElement) -> int:
    return table.distances[table.ordinal(w0)]


def solomon_polynomial(table: FiniteGroupTable) -> LengthPolynomial:
    """Distribution of reflection lengths over ``W0``, checked against ``prod (1 + e_i x)``."""
    poly = LengthPolynomial.from_lengths(table.distances)
    exponents = table.system.exponents
    if not exponents and table.system.rank:
        raise ValueError(f"no exponents recorded for {table.system.name}")
    expected = sympy.Poly(sympy.Mul(*(1 + e * X for e in exponents)), X).all_coeffs()[::-1]
    if [int(c) for c in expected] != poly.to_list():
        raise RuntimeError(
            f"{table.system.name}: length distribution {poly.to_list()} does not match exponents {list(exponents)}"
        )
    return poly


# -- windowed affine search ----------------------------------------------------


def _alphabet(system: RootSystem, window: int) -> tuple[AffineReflection, ...]:
    return tuple(
        AffineReflection(p, i) for p in range(len(system.positive_roots)) for i in range(-window, window + 1)
    )


def _reflect_point(system: RootSystem, r: AffineReflection, lam: LatticeVector) -> LatticeVector:
    """``r_{alpha,i}(lam) = lam + (i - <lam, alpha>) alpha^vee`` in lattice coordinates."""
    pairing = sum(a * b for a, b in zip(lam, system.root_pairings[r.root_index]))
    shift = r.offset - pairing
    if not shift:
        return lam
    return tuple(a + shift * c for a, c in zip(lam, system.coroot_coords[r.root_index]))


def oracle_affine_length(
    w: AffineElement,
    window: int,
    max_len: int,
    table: FiniteGroupTable | None = None,
) -> LengthReport:
    """Shortest factorization of ``w`` over ``{r_{alpha,i} : |i| <= window}`` up to ``max_len`` letters.

    The answer is exact (``oracle-certified``) only when it meets ``certified_floor(w)``.
    """
    system = w.system
    table = table or enumerate_w0(system)
    floor = certified_floor(w)
    alphabet = _alphabet(system, window)
    left = table.left_reflection
    sph = table.spherical
    failed: set[tuple[LatticeVector, int, int]] = set()

    def dim(lam: LatticeVector) -> int:
        return real_dimension(system, lam).k

    def search(lam: LatticeVector, g: int, depth: int) -> tuple[AffineReflection, ...] | None:
        if depth == 0:
            return () if g == 0 and not any(lam) else None
        if (depth - sph[g]) % 2 or sph[g] > depth or dim(lam) > depth:
            return None
        key = (lam, g, depth)
        if key in failed:
            return None
        for r in alphabet:
            rest = search(_reflect_point(system, r, lam), left[r.root_index][g], depth - 1)
            if rest is not None:
                return (r,) + rest
        failed.add(key)
        return None

    g0 = table.ordinal(project(w))
    start = max(dim(w.translation), sph[g0])
    if (start - sph[g0]) % 2:
        start += 1
    for depth in range(start, max_len + 1, 2):
        found = search(w.translation, g0, depth)
        if found is None:
            continue
        witness = ReflectionWord(found)
        if evaluate_word(system, witness) != w:
            raise RuntimeError(f"oracle witness {witness} does not evaluate to the queried element")
        if len(witness) < floor:
            raise RuntimeError(f"oracle found length {len(witness)} below the proven lower bound {floor}")
        if len(witness) == floor:
            return LengthReport(floor, floor, "oracle-certified", witness)
        return LengthReport(floor, len(witness), "bounds-only", witness)
    return LengthReport(floor, None, "bounds-only")


def origin_distance_map(system: RootSystem, window: int, max_len: int) -> dict[LatticeVector, int]:
    """Minimal number of windowed reflections moving the origin to each reachable lattice point.

    Plain BFS on points; no length formula is used.
    """
    memo = system.cache("origin_distance_map")
    key = (window, max_len)
    if key in memo:
        return memo[key]
    alphabet = _alphabet(system, window)
    origin: LatticeVector = (0,) * system.rank
    dist = {origin: 0}
    frontier = [origin]
    for d in range(1, max_len + 1):
        nxt = []
        for lam in frontier:
            for r in alphabet:
                moved = _reflect_point(system, r, lam)
                if moved not in dist:
                    dist[moved] = d
                    nxt.append(moved)
        frontier = nxt
    memo[key] = dist
    return dist


def f_lambda_polynomial(
    system: RootSystem,
    lam: LatticeVector,
    window: int,
    table: FiniteGroupTable | None = None,
) -> LengthPolynomial:
    """``f_lambda(x) = sum_{w0} x^{l_R(t_lambda w0)}``; every term must be oracle-certified."""
    table = table or enumerate_w0(system)
    shift = translation(system, lam)
    max_len = real_dimension(system, lam).k + system.rank
    lengths = []
    for w0 in table.elements:
        w = compose(shift, w0)
        report = oracle_affine_length(w, window, max_len, table)
        if not report.exact:
            raise RuntimeError(
                f"length of t{list(lam)}*w0 is uncertified at window {window} "
                f"(bounds {report.lower}..{report.upper}); increase the window"
            )
        lengths.append(report.lower)
    return LengthPolynomial.from_lengths(lengths)


# -- the A3 crossing pair ----------------------------------------------------------


@dataclass(frozen=True)
class CrossingReport:
    """Length-3 factorizations of the 4-cycle ``r_a12 r_a23 r_a34`` in ``W(A3)``."""

    factorizations: tuple[tuple[int, int, int], ...]
    both_crossing: int
    covered: frozenset[int]
    reflection_count: int

    @property
    def total(self) -> int:
        return len(self.factorizations)

    @property
    def ok(self) -> bool:
        return self.both_crossing == 0 and len(self.covered) == self.reflection_count

    def to_dict(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "both_crossing": self.both_crossing,
            "coverage": f"{len(self.covered)}/{self.reflection_count}",
        }


def a3_crossing_obstruction(system: RootSystem | None = None) -> CrossingReport:
    """Every reflection occurs in some minimal factorization, but ``r_a13`` and ``r_a24`` never together."""
    system = system or roots.build("A3")
    table = enumerate_w0(system)
    e = linalg.vec
    cycle = [reflection(system, e(1, -1, 0, 0), 0), reflection(system, e(0, 1, -1, 0), 0), reflection(system, e(0, 0, 1, -1), 0)]
    target = table.ordinal(evaluate_word(system, cycle))
    crossing = {
        reflection(system, e(1, 0, -1, 0), 0).root_index,
        reflection(system, e(0, 1, 0, -1), 0).root_index,
    }
    left = table.left_reflection
    count = len(system.positive_roots)
    found = tuple(
        (a, b, c)
        for a, b, c in itertools.product(range(count), repeat=3)
        if left[a][left[b][table.reflections_R0[c]]] == target
    )
    report = CrossingReport(
        factorizations=found,
        both_crossing=sum(1 for f in found if crossing <= set(f)),
        covered=frozenset(i for f in found for i in f),
        reflection_count=count,
    )
    if not report.ok:
        raise RuntimeError(f"crossing obstruction failed: {report.to_dict()}")
    return report
