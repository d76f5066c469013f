"""Elements of the affine Weyl group ``W = W0 ⋉ T`` in normal form ``t_lambda w0``.

Elements act on ``V`` in function notation, so products compose right to left.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from coxlen import linalg
from coxlen.linalg import Matrix, Vector
from coxlen.roots import LatticeVector, RootSystem


@dataclass(frozen=True, order=True)
class AffineReflection:
    """``r_{alpha,i}``: the reflection fixing ``{x : <x, alpha> = i}``.

    ``root_index`` points into ``RootSystem.positive_roots`` (0-based).
    """

    root_index: int
    offset: int

    def __str__(self) -> str:
        return f"r({self.root_index + 1},{self.offset})"


def reflection(system: RootSystem, root: Vector, offset: int) -> AffineReflection:
    """Canonical label of ``r_{root,offset}``, using ``r_{-a,-i} = r_{a,i}``."""
    index, sign = system.positive_index(root)
    return AffineReflection(index, sign * offset)


@dataclass(frozen=True)
class ReflectionWord:
    """A product ``r_1 r_2 ... r_k`` of affine reflections."""

    letters: tuple[AffineReflection, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[AffineReflection]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> AffineReflection:
        return self.letters[index]

    def __add__(self, other: ReflectionWord) -> ReflectionWord:
        return ReflectionWord(self.letters + other.letters)

    def reversed(self) -> ReflectionWord:
        return ReflectionWord(self.letters[::-1])

    def __str__(self) -> str:
        return "*".join(str(r) for r in self.letters) if self.letters else "e"


def word(letters: Iterable[AffineReflection]) -> ReflectionWord:
    return ReflectionWord(tuple(letters))


@dataclass(frozen=True)
class AffineElement:
    """``t_lambda w0`` with ``lambda`` in simple-coroot coordinates and ``w0`` an ambient matrix."""

    system: RootSystem = field(compare=False, repr=False)
    translation: LatticeVector
    linear: Matrix

    def __post_init__(self) -> None:
        if len(self.translation) != self.system.rank:
            raise ValueError(
                f"dimension mismatch: translation has {len(self.translation)} coordinates, rank is {self.system.rank}"
            )
        _validate_linear(self.system, self.linear)

    @property
    def ambient_translation(self) -> Vector:
        return self.system.lattice_to_ambient(self.translation)

    def __call__(self, x: Vector) -> Vector:
        return linalg.add(self.ambient_translation, linalg.mat_vec(self.linear, x))

    def __mul__(self, other: AffineElement) -> AffineElement:
        return compose(self, other)

    @property
    def is_identity(self) -> bool:
        return self.is_translation and not any(self.translation)

    @property
    def is_translation(self) -> bool:
        return self.linear == linalg.identity(self.system.ambient_dim)

    @property
    def fixes_origin(self) -> bool:
        return not any(self.translation)


def _validate_linear(system: RootSystem, m: Matrix) -> None:
    """Linear parts must permute ``Phi`` and fix the orthogonal complement of its span."""
    seen = system.cache("valid_linear")
    if m in seen:
        return
    n = system.ambient_dim
    if len(m) != n or any(len(row) != n for row in m):
        raise ValueError(f"linear part must be a {n}x{n} matrix")
    for r in system.roots:
        if linalg.mat_vec(m, r) not in system.root_set:
            raise ValueError(f"linear part does not permute the roots of {system.name}")
    for v in _complement(system):
        if linalg.mat_vec(m, v) != v:
            raise ValueError("linear part moves vectors orthogonal to the roots")
    seen[m] = True


def _complement(system: RootSystem) -> tuple[Vector, ...]:
    memo = system.cache("complement")
    if "basis" not in memo:
        memo["basis"] = linalg.nullspace(system.positive_roots, system.ambient_dim)
    return memo["basis"]


def lattice_action(system: RootSystem, m: Matrix) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of ``m`` acting on simple-coroot coordinates (``W0`` preserves ``L``)."""
    memo = system.cache("lattice_action")
    if m not in memo:
        cols = [system.ambient_to_lattice(linalg.mat_vec(m, b)) for b in system.simple_coroots]
        memo[m] = tuple(tuple(col[i] for col in cols) for i in range(system.rank))
    return memo[m]


def act_on_lattice(system: RootSystem, m: Matrix, lam: LatticeVector) -> LatticeVector:
    action = lattice_action(system, m)
    return tuple(sum(a * c for a, c in zip(row, lam)) for row in action)


def _linear_product(system: RootSystem, a: Matrix, b: Matrix) -> Matrix:
    memo = system.cache("linear_product")
    key = (a, b)
    if key not in memo:
        memo[key] = linalg.mat_mul(a, b)
    return memo[key]


def identity(system: RootSystem) -> AffineElement:
    return AffineElement(system, (0,) * system.rank, linalg.identity(system.ambient_dim))


def translation(system: RootSystem, lam: Iterable[int]) -> AffineElement:
    """``t_lambda`` for ``lambda`` in simple-coroot coordinates."""
    return AffineElement(system, tuple(lam), linalg.identity(system.ambient_dim))


def reflection_matrix(system: RootSystem, root_index: int) -> Matrix:
    """Matrix of ``x -> x - <x, alpha> alpha^vee``."""
    memo = system.cache("reflection_matrix")
    if root_index not in memo:
        alpha = system.positive_roots[root_index]
        check = system.positive_coroots[root_index]
        n = system.ambient_dim
        memo[root_index] = tuple(
            tuple(Fraction(int(i == j)) - check[i] * alpha[j] for j in range(n)) for i in range(n)
        )
    return memo[root_index]


def apply_reflection(system: RootSystem, r: AffineReflection, x: Vector) -> Vector:
    """``r_{alpha,i}(x) = x - (<x, alpha> - i) alpha^vee``."""
    alpha = system.positive_roots[r.root_index]
    check = system.positive_coroots[r.root_index]
    return linalg.sub(x, linalg.scale(linalg.inner(x, alpha) - r.offset, check))


def reflection_to_element(system: RootSystem, r: AffineReflection) -> AffineElement:
    """Normal form of ``r_{alpha,i}``: translation ``i alpha^vee``, linear part ``r_alpha``."""
    check = system.coroot_coords[r.root_index]
    return AffineElement(system, tuple(r.offset * c for c in check), reflection_matrix(system, r.root_index))


def compose(u: AffineElement, v: AffineElement) -> AffineElement:
    """Normal form of ``u ∘ v``: ``(lam, A)(mu, B) = (lam + A mu, AB)``."""
    if u.system is not v.system:
        raise ValueError(f"cannot compose elements of {u.system.name} and {v.system.name}")
    moved = act_on_lattice(u.system, u.linear, v.translation)
    return AffineElement(
        u.system,
        tuple(a + b for a, b in zip(u.translation, moved)),
        _linear_product(u.system, u.linear, v.linear),
    )


def inverse(w: AffineElement) -> AffineElement:
    """``(t_lam A)^-1 = t_{-A^T lam} A^T`` since ``A`` is orthogonal."""
    back = linalg.transpose(w.linear)
    moved = act_on_lattice(w.system, back, w.translation)
    return AffineElement(w.system, tuple(-c for c in moved), back)


def project(w: AffineElement) -> AffineElement:
    """The image ``p(w) = w0`` in the finite Weyl group."""
    return AffineElement(w.system, (0,) * w.system.rank, w.linear)


def evaluate_word(system: RootSystem, letters: Iterable[AffineReflection]) -> AffineElement:
    result = identity(system)
    for r in letters:
        result = compose(result, reflection_to_element(system, r))
    return result


def is_reflection(w: AffineElement) -> AffineReflection | None:
    """The canonical label of ``w`` when ``w`` is some ``r_{alpha,i}``, else ``None``."""
    system = w.system
    by_matrix = system.cache("reflection_by_matrix")
    if not by_matrix:
        for p in range(len(system.positive_roots)):
            by_matrix[reflection_matrix(system, p)] = p
    p = by_matrix.get(w.linear)
    if p is None:
        return None
    check = system.coroot_coords[p]
    lead = next(i for i, c in enumerate(check) if c)
    offset, rem = divmod(w.translation[lead], check[lead])
    if rem or tuple(offset * c for c in check) != w.translation:
        return None
    return AffineReflection(p, offset)


def conjugate(system: RootSystem, r: AffineReflection, s: AffineReflection) -> AffineReflection:
    """The reflection ``r s r``."""
    outer = reflection_to_element(system, r)
    found = is_reflection(compose(outer, compose(reflection_to_element(system, s), outer)))
    if found is None:
        raise RuntimeError(f"conjugate of {s} by {r} is not a reflection")
    return found
