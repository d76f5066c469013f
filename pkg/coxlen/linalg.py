"""Exact rational linear algebra over ``fractions.Fraction``."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(*coords: int | Fraction) -> Vector:
    """Build a vector from ints or fractions."""
    return tuple(Fraction(c) for c in coords)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int, scale: int | Fraction = 1) -> Vector:
    """Return ``scale * e_i`` in dimension ``n`` (0-based ``i``)."""
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(n))


def _check_dims(u: Sequence[Fraction], v: Sequence[Fraction]) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")


def inner(u: Vector, v: Vector) -> Fraction:
    """Standard inner product, computed exactly."""
    _check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int | Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Iterable[Fraction]) -> bool:
    return all(a == 0 for a in v)


def is_integral(v: Iterable[Fraction]) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def as_ints(v: Iterable[Fraction]) -> tuple[int, ...]:
    """Convert an integral vector to ints, raising ``ValueError`` otherwise."""
    out = []
    for a in v:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"non-integral entry {a}")
        out.append(a.numerator)
    return tuple(out)


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    if not m:
        return ()
    return tuple(zip(*m))


def from_columns(cols: Sequence[Vector], n_rows: int) -> Matrix:
    """Matrix whose columns are ``cols``; ``n_rows`` fixes the shape when ``cols`` is empty."""
    return tuple(tuple(c[i] for c in cols) for i in range(n_rows))


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(inner(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = transpose(b)
    return tuple(tuple(inner(row, col) for col in cols) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(sub(ra, rb) for ra, rb in zip(a, b))


def _row_reduce(
    rows: Sequence[Sequence[Fraction]],
    n_cols: int,
    rhs: Sequence[Fraction] | None = None,
) -> tuple[list[list[Fraction]], list[Fraction] | None, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the reduced rows, the transformed right-hand side and the pivot columns.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    t = [Fraction(x) for x in rhs] if rhs is not None else None
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            if t is not None:
                t[r], t[pivot] = t[pivot], t[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        if t is not None:
            t[r] /= p
        for i in range(len(m)):
            f = m[i][c]
            if i == r or f == 0:
                continue
            m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            if t is not None:
                t[i] -= f * t[r]
        pivots.append(c)
        r += 1
    return m, t, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Row rank over the rationals."""
    if not m:
        return 0
    _, _, pivots = _row_reduce(m, len(m[0]))
    return len(pivots)


def rref(m: Sequence[Sequence[Fraction]]) -> Matrix:
    """Nonzero rows of the reduced row echelon form; a canonical key for a row space."""
    if not m:
        return ()
    reduced, _, pivots = _row_reduce(m, len(m[0]))
    return tuple(tuple(row) for row in reduced[: len(pivots)])


def nullspace(m: Sequence[Sequence[Fraction]], n_cols: int) -> tuple[Vector, ...]:
    """A basis of ``{x : m @ x = 0}``."""
    reduced, _, pivots = _row_reduce(m, n_cols)
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        x = [Fraction(0)] * n_cols
        x[free] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -reduced[i][free]
        basis.append(tuple(x))
    return tuple(basis)


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of ``a @ x = b``, or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} rows but {len(b)} entries")
    n_cols = len(a[0]) if a else 0
    reduced, t, pivots = _row_reduce(a, n_cols, b)
    assert t is not None
    if any(t[i] != 0 for i in range(len(pivots), len(t))):
        return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = t[i]
    return tuple(x)


def in_span(basis: Sequence[Vector], v: Vector) -> list[Fraction] | None:
    """Coefficients expressing ``v`` in ``basis``, or ``None`` if ``v`` is outside the span.

    An empty list means ``v`` is zero and ``basis`` is empty.
    """
    for b in basis:
        _check_dims(b, v)
    x = solve(from_columns(basis, len(v)), v)
    if x is None:
        return None
    combo = zero(len(v))
    for c, b in zip(x, basis):
        combo = add(combo, scale(c, b))
    if combo != tuple(Fraction(a) for a in v):
        raise RuntimeError("span coefficients failed to reproduce the vector")
    return list(x)


def is_independent(vectors: Sequence[Vector]) -> bool:
    return rank(vectors) == len(vectors)
