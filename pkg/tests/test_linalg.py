"""Tests for exact rational linear algebra."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from coxlen import linalg
from coxlen.linalg import vec


class TestInner:
    """Test the exact inner product."""

    def test_orthogonal_axes(self) -> None:
        assert linalg.inner(vec(1, 0), vec(0, 1)) == 0

    def test_norm_of_type_a_root(self) -> None:
        assert linalg.inner(vec(1, -1, 0), vec(1, -1, 0)) == 2

    def test_sum(self) -> None:
        assert linalg.inner(vec(1, 1), vec(2, 3)) == 5

    def test_fractions_are_exact(self) -> None:
        assert linalg.inner(vec(Fraction(1, 3), 1), vec(Fraction(1, 3), 0)) == Fraction(1, 9)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(ValueError, match="dimension mismatch"):
            linalg.inner(vec(1, 0), vec(1, 0, 0))


class TestRank:
    """Test row rank by exact elimination."""

    def test_zero_matrix(self) -> None:
        assert linalg.rank([linalg.zero(3)] * 3) == 0

    def test_identity(self) -> None:
        assert linalg.rank(linalg.identity(4)) == 4

    def test_dependent_rows(self) -> None:
        rows = [vec(1, 1, 0, 0), vec(1, -1, 0, 0), vec(2, 0, 0, 0)]
        assert linalg.rank(rows) == 2

    def test_empty(self) -> None:
        assert linalg.rank([]) == 0

    def test_rank_equals_rank_of_transpose(self) -> None:
        """Row rank equals column rank on 200 random integer matrices."""
        rng = random.Random(7)
        for _ in range(200):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = tuple(vec(*(rng.randint(-2, 2) for _ in range(cols))) for _ in range(rows))
            assert linalg.rank(m) == linalg.rank(linalg.transpose(m))


class TestInSpan:
    """Test span membership with coefficients."""

    def test_empty_basis_zero_vector(self) -> None:
        assert linalg.in_span([], linalg.zero(2)) == []

    def test_empty_basis_nonzero_vector(self) -> None:
        assert linalg.in_span([], vec(1, 0)) is None

    def test_two_e1(self) -> None:
        basis = [vec(1, 1, 0, 0), vec(1, -1, 0, 0)]
        assert linalg.in_span(basis, vec(2, 0, 0, 0)) == [1, 1]

    def test_outside_span(self) -> None:
        assert linalg.in_span([vec(1, 1)], vec(1, 0)) is None

    def test_coefficients_reproduce_vector(self) -> None:
        """Returned coefficients recombine to the vector on 200 random cases."""
        rng = random.Random(11)
        for _ in range(200):
            basis = [vec(*(rng.randint(-3, 3) for _ in range(3))) for _ in range(rng.randint(1, 3))]
            coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in basis]
            v = linalg.zero(3)
            for c, b in zip(coeffs, basis):
                v = linalg.add(v, linalg.scale(c, b))
            found = linalg.in_span(basis, v)
            assert found is not None
            combo = linalg.zero(3)
            for c, b in zip(found, basis):
                combo = linalg.add(combo, linalg.scale(c, b))
            assert combo == v


class TestSolve:
    """Test exact solving of linear systems."""

    def test_identity(self) -> None:
        v = vec(3, Fraction(-1, 2), 7)
        assert linalg.solve(linalg.identity(3), v) == v

    def test_inconsistent(self) -> None:
        assert linalg.solve([linalg.zero(2), linalg.zero(2)], vec(1, 0)) is None

    def test_columns_example(self) -> None:
        a = linalg.from_columns([vec(1, 1), vec(1, -1)], 2)
        assert linalg.solve(a, vec(2, 0)) == vec(1, 1)

    def test_free_variables_are_zero(self) -> None:
        assert linalg.solve([vec(1, 1)], vec(4)) == vec(4, 0)

    def test_row_count_mismatch(self) -> None:
        with pytest.raises(ValueError, match="dimension mismatch"):
            linalg.solve(linalg.identity(2), vec(1, 2, 3))

    def test_solution_satisfies_system(self) -> None:
        rng = random.Random(13)
        for _ in range(200):
            a = tuple(vec(*(rng.randint(-3, 3) for _ in range(3))) for _ in range(3))
            b = vec(*(rng.randint(-5, 5) for _ in range(3)))
            x = linalg.solve(a, b)
            if x is not None:
                assert linalg.mat_vec(a, x) == b


class TestHelpers:
    """Test the smaller vector and matrix helpers."""

    def test_nullspace(self) -> None:
        basis = linalg.nullspace([vec(1, -1, 0), vec(0, 1, -1)], 3)
        assert basis == (vec(1, 1, 1),)

    def test_rref_is_canonical(self) -> None:
        a = [vec(1, 1, 0), vec(1, -1, 0)]
        b = [vec(2, 0, 0), vec(0, 3, 0)]
        assert linalg.rref(a) == linalg.rref(b)

    def test_as_ints_rejects_fractions(self) -> None:
        with pytest.raises(ValueError, match="non-integral"):
            linalg.as_ints(vec(Fraction(1, 2)))

    def test_mat_mul_identity(self) -> None:
        m = (vec(1, 2), vec(3, 4))
        assert linalg.mat_mul(m, linalg.identity(2)) == m
