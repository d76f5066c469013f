"""Tests for parsing and printing elements."""

from __future__ import annotations

import random

import pytest

from coxlen import roots
from coxlen.affine import AffineReflection, compose, evaluate_word, identity, reflection_to_element, translation
from coxlen.syntax import ParseError, format_element, format_lattice, parse_element, parse_lattice


@pytest.fixture
def a2() -> roots.RootSystem:
    return roots.build("A2")


class TestParseElement:
    """Test the ``t[...] * r(p,i) * e`` syntax."""

    def test_translation_times_reflection(self, a2: roots.RootSystem) -> None:
        w = parse_element(a2, "t[1,0]*r(2,0)")
        assert w == compose(translation(a2, (1, 0)), reflection_to_element(a2, AffineReflection(1, 0)))

    def test_identity(self, a2: roots.RootSystem) -> None:
        assert parse_element(a2, "e") == identity(a2)

    def test_whitespace(self, a2: roots.RootSystem) -> None:
        assert parse_element(a2, "  t[1, 0] * e ") == translation(a2, (1, 0))

    def test_negative_offset(self, a2: roots.RootSystem) -> None:
        assert parse_element(a2, "r(3,-2)") == reflection_to_element(a2, AffineReflection(2, -2))

    def test_right_to_left(self, a2: roots.RootSystem) -> None:
        letters = [AffineReflection(0, 1), AffineReflection(2, 0)]
        assert parse_element(a2, "r(1,1)*r(3,0)") == evaluate_word(a2, letters)


class TestParseErrors:
    """Test error positions."""

    @pytest.mark.parametrize(
        "text,position",
        [("t[1,0]*x", 7), ("t[1,0]x", 6), ("r(9,0)", 2), ("t[1]", 0), ("t[1,x]", 4), ("", 0), ("e*", 2)],
    )
    def test_position(self, a2: roots.RootSystem, text: str, position: int) -> None:
        with pytest.raises(ParseError) as exc:
            parse_element(a2, text)
        assert exc.value.position == position

    def test_root_index_message(self, a2: roots.RootSystem) -> None:
        with pytest.raises(ParseError, match="Must be between 1 and 3"):
            parse_element(a2, "r(0,1)")

    def test_is_value_error(self, a2: roots.RootSystem) -> None:
        with pytest.raises(ValueError):
            parse_element(a2, "q")


class TestLattice:
    """Test bracketed lattice vectors."""

    def test_parse(self) -> None:
        assert parse_lattice("[2,2,1,1]") == (2, 2, 1, 1)

    def test_parse_with_spaces(self) -> None:
        assert parse_lattice(" [1, -1]", roots.build("A2")) == (1, -1)

    def test_rank_mismatch(self) -> None:
        with pytest.raises(ParseError, match="Expected 3 coordinates"):
            parse_lattice("[1,2]", roots.build("A3"))

    def test_missing_brackets(self) -> None:
        with pytest.raises(ParseError) as exc:
            parse_lattice("2,2")
        assert exc.value.position == 0

    def test_format(self) -> None:
        assert format_lattice((1, -1, 0)) == "[1,-1,0]"


class TestFormatElement:
    """Test the printed normal form."""

    def test_identity(self, a2: roots.RootSystem) -> None:
        assert format_element(identity(a2)) == "e"

    def test_translation(self, a2: roots.RootSystem) -> None:
        assert format_element(translation(a2, (2, -1))) == "t[2,-1]"

    def test_reflection_through_origin(self, a2: roots.RootSystem) -> None:
        assert format_element(reflection_to_element(a2, AffineReflection(1, 0))) == "r(2,0)"

    def test_round_trip(self) -> None:
        """Printed elements parse back to themselves on 200 random elements."""
        rng = random.Random(73)
        systems = [roots.build(t) for t in ("A2", "B2", "G2", "A3")]
        for _ in range(200):
            system = rng.choice(systems)
            count = len(system.positive_roots)
            letters = [AffineReflection(rng.randrange(count), rng.randint(-3, 3)) for _ in range(rng.randint(0, 5))]
            w = evaluate_word(system, letters)
            assert parse_element(system, format_element(w)) == w
