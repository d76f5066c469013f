"""Tests for the universal Coxeter group on three generators."""

from __future__ import annotations

import random

import pytest

from coxlen.universal import (
    MAX_WORD_LENGTH,
    UCWord,
    describe,
    dyer_factorization,
    inversions,
    is_uc_reflection,
    reduce,
    standard_length,
    uc_reflection_length,
    unrestricted_reflection_length,
)


def _random_letters(rng: random.Random, size: int) -> str:
    return "".join(rng.choice("abc") for _ in range(size))


class TestWords:
    """Test free reduction and word arithmetic."""

    @pytest.mark.parametrize("raw,reduced", [("abba", ""), ("abc", "abc"), ("abcca", "aba"), ("aa", ""), ("", "")])
    def test_reduce(self, raw: str, reduced: str) -> None:
        assert reduce(raw).letters == reduced

    def test_invalid_letters(self) -> None:
        with pytest.raises(ValueError, match="Invalid letters"):
            UCWord("abd")

    def test_str_of_identity(self) -> None:
        assert str(UCWord()) == "e"

    def test_product_reduces(self) -> None:
        assert (UCWord("abc") * UCWord("cba")).is_identity

    def test_power(self) -> None:
        assert (UCWord("abc") ** 2).letters == "abcabc"
        assert (UCWord("ab") ** -1).letters == "ba"

    def test_reduce_and_inverse(self) -> None:
        """Reduction is idempotent and ``w * w^-1`` is trivial on 200 random words."""
        rng = random.Random(61)
        for _ in range(200):
            w = UCWord(_random_letters(rng, rng.randint(0, 10)))
            once = reduce(w)
            assert reduce(once) == once
            assert all(x != y for x, y in zip(once.letters, once.letters[1:]))
            assert (w * w.inverse()).is_identity


class TestReflections:
    """Test recognition of reflections and inversions."""

    @pytest.mark.parametrize("text", ["a", "aba", "abcba", "cbabc"])
    def test_palindromes(self, text: str) -> None:
        assert is_uc_reflection(text)

    @pytest.mark.parametrize("text", ["", "ab", "abc", "abab"])
    def test_non_reflections(self, text: str) -> None:
        assert not is_uc_reflection(text)

    def test_inversions_of_abc(self) -> None:
        assert [t.letters for t in inversions("abc")] == ["a", "aba", "abcba"]

    def test_inversions_shorten(self) -> None:
        rng = random.Random(67)
        for _ in range(50):
            w = reduce(_random_letters(rng, rng.randint(1, 9)))
            found = inversions(w)
            assert len(found) == standard_length(w)
            for t in found:
                assert is_uc_reflection(t)
                assert standard_length(t * w) < standard_length(w)


class TestReflectionLength:
    """Test reflection length by deletion."""

    @pytest.mark.parametrize(
        "text,length",
        [("", 0), ("a", 1), ("ab", 2), ("aba", 1), ("abc", 3), ("abcabc", 4), ("abcabcabc", 5), ("abcabcabcabc", 6)],
    )
    def test_lengths(self, text: str, length: int) -> None:
        assert uc_reflection_length(text) == length

    def test_factorization_multiplies_to_word(self) -> None:
        rng = random.Random(71)
        for _ in range(50):
            w = reduce(_random_letters(rng, rng.randint(0, 10)))
            factors = dyer_factorization(w)
            product = UCWord()
            for t in factors:
                assert is_uc_reflection(t)
                product = product * t
            assert product == w
            assert len(factors) % 2 == len(w) % 2

    def test_unrestricted_agrees(self) -> None:
        for text in ["a", "ab", "abc", "abca", "abcb", "abcabc"]:
            assert unrestricted_reflection_length(text) == len(dyer_factorization(text))

    def test_unrestricted_depth_limit(self) -> None:
        assert unrestricted_reflection_length("abc", max_depth=2) is None

    def test_unrestricted_rejects_deep_search(self) -> None:
        with pytest.raises(ValueError, match="between 0 and 4"):
            unrestricted_reflection_length("abc", max_depth=5)

    def test_envelope(self) -> None:
        with pytest.raises(ValueError, match="at most"):
            uc_reflection_length("abc" * 4 + "a")

    def test_envelope_uses_reduced_length(self) -> None:
        assert uc_reflection_length("abc" * 4 + "cc") == 6
        assert MAX_WORD_LENGTH == 12

    def test_describe(self) -> None:
        assert describe("abcca") == {"word": "abcca", "reduced": "aba", "ls": 3, "lr": 1}
