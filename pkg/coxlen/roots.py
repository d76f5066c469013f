"""Crystallographic root systems in exact rational coordinates."""

from __future__ import annotations

import itertools
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property, lru_cache
from typing import Literal

from coxlen import linalg
from coxlen.linalg import Matrix, Vector

Family = Literal["A", "B", "C", "D", "E", "F", "G"]
VALID_FAMILIES: set[Family] = {"A", "B", "C", "D", "E", "F", "G"}

LatticeVector = tuple[int, ...]

_MIN_RANK: dict[str, int] = {"A": 1, "B": 2, "C": 2, "D": 2}
_FIXED_RANKS: dict[str, set[int]] = {"E": {6, 7, 8}, "F": {4}, "G": {2}}

_HALF = Fraction(1, 2)

# Bound on memo tables keyed by arbitrary lattice or ambient vectors.
VECTOR_CACHE_SIZE = 4096


@dataclass(frozen=True)
class RootSystemSpec:
    """A root system type: one or more irreducible ``(family, rank)`` components."""

    components: tuple[tuple[Family, int], ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("A root system spec needs at least one component")
        for family, rank in self.components:
            if family not in VALID_FAMILIES:
                raise ValueError(f"Invalid family '{family}'. Must be one of: {', '.join(sorted(VALID_FAMILIES))}")
            if family in _FIXED_RANKS and rank not in _FIXED_RANKS[family]:
                allowed = ", ".join(str(r) for r in sorted(_FIXED_RANKS[family]))
                raise ValueError(f"Invalid rank {rank} for family {family}. Must be one of: {allowed}")
            if family in _MIN_RANK and rank < _MIN_RANK[family]:
                raise ValueError(f"Invalid rank {rank} for family {family}. Must be at least {_MIN_RANK[family]}")

    @classmethod
    def parse(cls, text: str) -> RootSystemSpec:
        """Parse ``"A3"``, ``"D4"``, ``"A1xA2"`` style strings."""
        # syntax imports the group modules, which import this one
        from coxlen.syntax import ParseError

        components: list[tuple[Family, int]] = []
        offset = 0
        for part in text.split("x"):
            match = re.fullmatch(r"\s*([A-Za-z])(\d+)\s*", part)
            if match is None:
                raise ParseError(f"Invalid root system component '{part.strip()}' in '{text}'", offset)
            family = match.group(1).upper()
            if family not in VALID_FAMILIES:
                raise ParseError(
                    f"Invalid family '{family}'. Must be one of: {', '.join(sorted(VALID_FAMILIES))}",
                    offset + match.start(1),
                )
            components.append((family, int(match.group(2))))  # type: ignore[arg-type]
            offset += len(part) + 1
        return cls(tuple(components))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def __str__(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.components)


def _lex_positive(v: Vector) -> bool:
    for a in v:
        if a != 0:
            return a > 0
    return False


def _positive_and_simple(roots: Sequence[Vector]) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Positive roots (lexicographic order on coordinates) and the indecomposable ones among them.

    Positive roots ascend lexicographically; ``r(p,i)`` numbering follows this order.
    Simple roots descend, so type A starts ``e1 - e2, e2 - e3, ...``.
    """
    positive = sorted(r for r in roots if _lex_positive(r))
    positive_set = set(positive)
    simple = [
        beta
        for beta in reversed(positive)
        if not any(alpha != beta and linalg.sub(beta, alpha) in positive_set for alpha in positive)
    ]
    return tuple(positive), tuple(simple)


def coroot(alpha: Vector) -> Vector:
    """``alpha^vee = 2 alpha / <alpha, alpha>``."""
    norm = linalg.inner(alpha, alpha)
    if norm == 0:
        raise ValueError("The zero vector has no coroot")
    return linalg.scale(Fraction(2) / norm, alpha)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A finite crystallographic root system with its coroots and coroot lattice.

    Roots are stored as the positive roots (index order) followed by their negatives;
    ``coroots`` is paired with ``roots`` index-wise.
    """

    name: str
    ambient_dim: int
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    exponents: tuple[int, ...] = ()
    _caches: dict[str, dict] = field(default_factory=dict, init=False, repr=False)

    @cached_property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(linalg.neg(r) for r in self.positive_roots)

    @cached_property
    def coroots(self) -> tuple[Vector, ...]:
        return tuple(coroot(r) for r in self.roots)

    @cached_property
    def positive_coroots(self) -> tuple[Vector, ...]:
        return tuple(coroot(r) for r in self.positive_roots)

    @cached_property
    def simple_coroots(self) -> tuple[Vector, ...]:
        return tuple(coroot(r) for r in self.simple_roots)

    @property
    def rank(self) -> int:
        """Semisimple rank ``n``."""
        return len(self.simple_roots)

    @cached_property
    def root_set(self) -> frozenset[Vector]:
        return frozenset(self.roots)

    @cached_property
    def _positive_lookup(self) -> dict[Vector, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    def positive_index(self, root: Vector) -> tuple[int, int]:
        """Return ``(index, sign)`` with ``root == sign * positive_roots[index]``."""
        lookup = self._positive_lookup
        if root in lookup:
            return lookup[root], 1
        negated = linalg.neg(root)
        if negated in lookup:
            return lookup[negated], -1
        raise ValueError(f"{_fmt(root)} is not a root of {self.name}")

    def cache(self, name: str) -> dict:
        """Per-system memo table shared by the modules that compute on this system.

        Tables live as long as the system, i.e. the process. Use them only for keys
        drawn from finite sets (root indices, elements of ``W0``, search parameters);
        vector-keyed memos go through ``lru_cache`` with ``VECTOR_CACHE_SIZE``.
        """
        return self._caches.setdefault(name, {})

    @cached_property
    def _lattice_basis(self) -> Matrix:
        return linalg.from_columns(self.simple_coroots, self.ambient_dim)

    def lattice_to_ambient(self, lam: Sequence[int]) -> Vector:
        """Ambient coordinates of ``sum lam_i * simple_coroot_i``."""
        if len(lam) != self.rank:
            raise ValueError(f"dimension mismatch: {len(lam)} coefficients for rank {self.rank}")
        out = linalg.zero(self.ambient_dim)
        for c, b in zip(lam, self.simple_coroots):
            if c:
                out = linalg.add(out, linalg.scale(c, b))
        return out

    def ambient_to_lattice(self, v: Vector) -> LatticeVector:
        """Coordinates of ``v`` in the simple coroot basis; ``ValueError`` if ``v`` is not in ``L``."""
        return _ambient_to_lattice(self, tuple(v))

    @cached_property
    def root_pairings(self) -> tuple[tuple[int, ...], ...]:
        """``root_pairings[p][j] = <simple_coroot_j, positive_root_p>``, always an integer."""
        return tuple(
            linalg.as_ints(linalg.inner(b, alpha) for b in self.simple_coroots) for alpha in self.positive_roots
        )

    @cached_property
    def coroot_coords(self) -> tuple[LatticeVector, ...]:
        """Lattice coordinates of each positive coroot."""
        return tuple(self.ambient_to_lattice(c) for c in self.positive_coroots)

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, rank={self.rank}, roots={len(self.roots)})"


@lru_cache(maxsize=VECTOR_CACHE_SIZE)
def _ambient_to_lattice(system: RootSystem, v: Vector) -> LatticeVector:
    coeffs = linalg.solve(system._lattice_basis, v)
    if coeffs is None:
        raise ValueError(f"{_fmt(v)} is not in the span of the coroots of {system.name}")
    if not linalg.is_integral(coeffs):
        raise ValueError(f"{_fmt(v)} is not in the coroot lattice of {system.name}")
    return linalg.as_ints(coeffs)


def _fmt(v: Vector) -> str:
    return "(" + ", ".join(str(a) for a in v) + ")"


# -- catalog ---------------------------------------------------------------

_EXPONENTS: dict[str, dict[int, tuple[int, ...]]] = {
    "E": {
        6: (1, 4, 5, 7, 8, 11),
        7: (1, 5, 7, 9, 11, 13, 17),
        8: (1, 7, 11, 13, 17, 19, 23, 29),
    },
    "F": {4: (1, 5, 7, 11)},
    "G": {2: (1, 5)},
}


def exponents(family: Family, rank: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(range(1, rank + 1))
    if family in ("B", "C"):
        return tuple(range(1, 2 * rank, 2))
    if family == "D":
        return tuple(sorted(tuple(range(1, 2 * rank - 2, 2)) + (rank - 1,)))
    return _EXPONENTS[family][rank]


def root_count(family: Family, rank: int) -> int:
    """Catalog value of ``|Phi|``."""
    if family == "A":
        return rank * (rank + 1)
    if family in ("B", "C"):
        return 2 * rank * rank
    if family == "D":
        return 2 * rank * (rank - 1)
    return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}[(family, rank)]


def _pm_pairs(n: int) -> set[Vector]:
    """``{±e_i ± e_j : i < j}`` in dimension ``n``."""
    out: set[Vector] = set()
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * n
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    return out


def _e8_roots() -> set[Vector]:
    roots = _pm_pairs(8)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(tuple(s * _HALF for s in signs))
    return roots


def _irreducible_roots(family: Family, rank: int) -> tuple[int, set[Vector]]:
    """Ambient dimension and full root set of one irreducible component."""
    n = rank
    if family == "A":
        roots = {
            tuple(Fraction(int(k == i) - int(k == j)) for k in range(n + 1))
            for i in range(n + 1)
            for j in range(n + 1)
            if i != j
        }
        return n + 1, roots
    if family == "B":
        return n, _pm_pairs(n) | {linalg.basis_vector(n, i, s) for i in range(n) for s in (1, -1)}
    if family == "C":
        return n, _pm_pairs(n) | {linalg.basis_vector(n, i, 2 * s) for i in range(n) for s in (1, -1)}
    if family == "D":
        return n, _pm_pairs(n)
    if family == "G":
        short = {
            tuple(Fraction(int(k == i) - int(k == j)) for k in range(3)) for i in range(3) for j in range(3) if i != j
        }
        long = set()
        for i in range(3):
            v = tuple(Fraction(2 if k == i else -1) for k in range(3))
            long.add(v)
            long.add(linalg.neg(v))
        return 3, short | long
    if family == "F":
        roots = _pm_pairs(4) | {linalg.basis_vector(4, i, s) for i in range(4) for s in (1, -1)}
        roots |= {tuple(s * _HALF for s in signs) for signs in itertools.product((1, -1), repeat=4)}
        return 4, roots
    e8 = _e8_roots()
    if rank == 8:
        return 8, e8
    # E7 is the centralizer of the root e7+e8 in E8; E6 additionally of e6+e8.
    fixed = [linalg.vec(0, 0, 0, 0, 0, 0, 1, 1)]
    if rank == 6:
        fixed.append(linalg.vec(0, 0, 0, 0, 0, 1, 0, 1))
    return 8, {r for r in e8 if all(linalg.inner(r, f) == 0 for f in fixed)}


def build(spec: RootSystemSpec | str) -> RootSystem:
    """Construct the root system of ``spec``; reducible specs become orthogonal direct sums.

    Systems are shared per spec, so their memo tables are too.
    """
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    return _build(spec)


@cache
def _build(spec: RootSystemSpec) -> RootSystem:
    blocks: list[tuple[int, set[Vector]]] = []
    for family, rank in spec.components:
        dim, roots = _irreducible_roots(family, rank)
        if len(roots) != root_count(family, rank):
            raise RuntimeError(f"{family}{rank}: built {len(roots)} roots, expected {root_count(family, rank)}")
        blocks.append((dim, roots))

    ambient = sum(dim for dim, _ in blocks)
    all_roots: set[Vector] = set()
    start = 0
    for dim, roots in blocks:
        pad_before = (Fraction(0),) * start
        pad_after = (Fraction(0),) * (ambient - start - dim)
        all_roots |= {pad_before + r + pad_after for r in roots}
        start += dim

    positive, simple = _positive_and_simple(sorted(all_roots))
    exps = tuple(sorted(e for family, rank in spec.components for e in exponents(family, rank)))
    return RootSystem(
        name=str(spec),
        ambient_dim=ambient,
        positive_roots=positive,
        simple_roots=simple,
        exponents=exps,
    )


def sub_root_system(phi: RootSystem, subspace_basis: Sequence[Vector]) -> RootSystem:
    """``Phi ∩ V'`` for ``V' = span(subspace_basis)``, with its own simple system.

    The exponents of the sub-system are left empty: it is not classified.
    """
    if subspace_basis:
        key = linalg.rref(subspace_basis)
    else:
        key = ()
    memo = phi.cache("sub_root_system")
    if key in memo:
        return memo[key]
    inside = [r for r in phi.roots if linalg.in_span(list(subspace_basis), r) is not None]
    positive, simple = _positive_and_simple(inside)
    sub = RootSystem(
        name=f"sub({phi.name}, rank {len(simple)})",
        ambient_dim=phi.ambient_dim,
        positive_roots=positive,
        simple_roots=simple,
    )
    memo[key] = sub
    return sub
