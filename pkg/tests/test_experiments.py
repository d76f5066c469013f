"""Tests for the named experiments."""

from __future__ import annotations

import pytest

from coxlen.experiments import (
    EXPERIMENTS,
    A3CrossingExperiment,
    CarterExperiment,
    CensusExperiment,
    EquivalenceExperiment,
    ExperimentResult,
    FLambdaExperiment,
    PropertiesExperiment,
    SolomonExperiment,
    UCPowersExperiment,
    lattice_box,
)


class TestExperimentResult:
    """Test row bookkeeping and serialization."""

    def test_add_row_orders_columns(self) -> None:
        result = ExperimentResult("demo", ("a", "b"))
        result.add_row(b=2, a=1)
        assert list(result.rows[0]) == ["a", "b"]

    def test_missing_column(self) -> None:
        result = ExperimentResult("demo", ("a", "b"))
        with pytest.raises(ValueError, match="missing columns: b"):
            result.add_row(a=1)

    def test_ok_until_failure(self) -> None:
        result = ExperimentResult("demo", ("a",))
        assert result.ok
        result.fail("broken")
        assert not result.ok
        assert result.to_dict()["failures"] == ["broken"]

    def test_csv_lists(self) -> None:
        result = ExperimentResult("demo", ("lambda", "k"))
        result.add_row(**{"lambda": [1, -1], "k": 2})
        assert result.to_csv() == "lambda,k\n\"[1,-1]\",2\n"


class TestLatticeBox:
    """Test enumeration of lattice boxes."""

    def test_size(self) -> None:
        assert len(list(lattice_box(2, 1))) == 9

    def test_lexicographic(self) -> None:
        assert list(lattice_box(1, 1)) == [(-1,), (0,), (1,)]

    def test_negative_box(self) -> None:
        with pytest.raises(ValueError, match="non-negative"):
            lattice_box(2, -1)


class TestRegistry:
    """Test the name -> class registry."""

    def test_names(self) -> None:
        assert set(EXPERIMENTS) == {
            "census",
            "equivalence",
            "carter",
            "solomon",
            "f-lambda",
            "a3-crossing",
            "uc-powers",
            "properties",
        }


class TestLatticeExperiments:
    """Test the sweeps over lattice boxes."""

    def test_census(self) -> None:
        result = CensusExperiment("A2", box=1).run()
        assert result.ok, result.failures
        assert len(result.rows) == 9
        assert result.summary["max_length"] == 4

    def test_census_with_oracle(self) -> None:
        result = CensusExperiment("A2", box=1, window=2).run()
        assert result.ok, result.failures
        assert {row["certificate"] for row in result.rows} == {"oracle-certified"}

    def test_census_b2(self) -> None:
        assert CensusExperiment("B2", box=2).run().ok

    def test_equivalence(self) -> None:
        result = EquivalenceExperiment("A2", box=1).run()
        assert result.ok, result.failures
        row = next(r for r in result.rows if r["lambda"] == [1, -1])
        assert (row["real"], row["integral"], row["origin"]) == (2, 2, 2)

    def test_equivalence_window_too_small(self) -> None:
        result = EquivalenceExperiment("A1", box=2, window=1).run()
        assert not result.ok
        assert any("increase --window" in f for f in result.failures)


class TestFiniteExperiments:
    """Test the experiments on finite Weyl groups."""

    def test_carter(self) -> None:
        result = CarterExperiment(["A2", "B2", "G2"]).run()
        assert result.ok
        assert [row["elements"] for row in result.rows] == [6, 8, 12]

    def test_solomon(self) -> None:
        result = SolomonExperiment(["B2"]).run()
        assert result.rows[0]["coefficients"] == [1, 4, 3]
        assert result.rows[0]["exponents"] == [1, 3]

    def test_a3_crossing(self) -> None:
        result = A3CrossingExperiment().run()
        assert result.rows == [{"total": 16, "both_crossing": 0, "coverage": "6/6"}]


class TestPolynomialExperiments:
    """Test the coset polynomial sweep."""

    def test_a1(self) -> None:
        result = FLambdaExperiment("A1", box=2, window=2).run()
        assert result.ok, result.failures
        assert [row["coefficients"] for row in result.rows] == [[0, 1, 1], [0, 1, 1], [1, 1], [0, 1, 1], [0, 1, 1]]

    def test_a2_origin(self) -> None:
        result = FLambdaExperiment("A2", box=0, window=1).run()
        assert result.ok
        assert result.rows[0]["coefficients"] == [1, 3, 2]


class TestUniversalExperiment:
    """Test powers of ``abc``."""

    def test_powers(self) -> None:
        result = UCPowersExperiment(max_n=3).run()
        assert result.ok
        assert [row["lr"] for row in result.rows] == [3, 4, 5]
        assert [row["cross_checked"] for row in result.rows] == [True, True, False]

    def test_max_n_limit(self) -> None:
        with pytest.raises(ValueError, match="at most 4"):
            UCPowersExperiment(max_n=5)


class TestProperties:
    """Test the seeded randomized sweep."""

    def test_small_run(self) -> None:
        result = PropertiesExperiment(seed=7, cases=25).run()
        assert result.ok, result.failures
        assert [row["property"] for row in result.rows] == [
            "rewriting",
            "involution",
            "homomorphism",
            "normal-form",
            "inverse-bounds",
            "reducible-additivity",
            "finite-factors",
        ]
        assert result.summary["finite_factor_max"] == 5

    def test_seed_is_reproducible(self) -> None:
        first = PropertiesExperiment(seed=11, cases=10).run()
        second = PropertiesExperiment(seed=11, cases=10).run()
        assert first.to_dict() == second.to_dict()
