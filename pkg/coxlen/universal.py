"""The universal Coxeter group on three involutions ``a``, ``b``, ``c``.

The only relations are ``a^2 = b^2 = c^2 = 1``, so every element has a unique
reduced word with no two equal neighbours. Reflections are the conjugates of the
generators, which in reduced form are exactly the odd-length palindromes.

Reflection length is computed from the deletion criterion: ``l_R(w)`` is the least
number of letters that must be deleted from a reduced word of ``w`` to leave the
identity. Each deleted letter contributes one inversion of ``w`` to the factorization.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

ALPHABET = frozenset("abc")
MAX_WORD_LENGTH = 12
MAX_UNRESTRICTED_WORD_LENGTH = 8
MAX_UNRESTRICTED_DEPTH = 4


@dataclass(frozen=True)
class UCWord:
    """A word over ``{a, b, c}``; ``reduce`` gives the normal form."""

    letters: str = ""

    def __post_init__(self) -> None:
        bad = sorted(set(self.letters) - ALPHABET)
        if bad:
            raise ValueError(f"Invalid letters {bad} in '{self.letters}'. Must be one of: a, b, c")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __mul__(self, other: UCWord) -> UCWord:
        return reduce(UCWord(self.letters + other.letters))

    def __pow__(self, n: int) -> UCWord:
        if n < 0:
            return self.inverse() ** -n
        return reduce(UCWord(self.letters * n))

    def inverse(self) -> UCWord:
        # product of involutions
        return UCWord(self.letters[::-1])

    @property
    def is_identity(self) -> bool:
        return not reduce(self).letters

    def __str__(self) -> str:
        return self.letters or "e"


def reduce(w: UCWord | str) -> UCWord:
    """Cancel adjacent equal letters until none remain."""
    stack: list[str] = []
    for letter in UCWord(w) if isinstance(w, str) else w:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return UCWord("".join(stack))


def is_uc_reflection(w: UCWord | str) -> bool:
    """Reduced reflections are the odd palindromes ``u s u^-1``."""
    letters = reduce(w).letters
    return len(letters) % 2 == 1 and letters == letters[::-1]


def standard_length(w: UCWord | str) -> int:
    return len(reduce(w))


def inversions(w: UCWord | str) -> tuple[UCWord, ...]:
    """The reflections ``t`` with ``l_S(t w) < l_S(w)``, one per letter of the reduced word.

    The ``j``-th one is ``u s_j u^-1`` where ``u`` is the prefix before position ``j``;
    multiplying it onto ``w`` on the left deletes letter ``j``.
    """
    letters = reduce(w).letters
    found = tuple(UCWord(letters[:j] + letters[j] + letters[:j][::-1]) for j in range(len(letters)))
    if len(set(found)) != len(letters):
        raise RuntimeError(f"inversions of '{letters}' are not distinct")
    return found


def _check_envelope(letters: str, limit: int) -> None:
    if len(letters) > limit:
        raise ValueError(f"word '{letters}' has length {len(letters)}, the search supports at most {limit}")


def dyer_factorization(w: UCWord | str) -> tuple[UCWord, ...]:
    """A shortest reflection factorization drawn from the inversions of ``w``.

    Tries position sets of increasing size (matching the parity of ``l_S(w)``) until
    deleting them leaves the identity; the deleted inversions, in descending position
    order, multiply to ``w``.
    """
    letters = reduce(w).letters
    _check_envelope(letters, MAX_WORD_LENGTH)
    invs = inversions(letters)
    m = len(letters)
    for d in range(m % 2, m + 1, 2):
        for chosen in itertools.combinations(range(m), d):
            skip = set(chosen)
            rest = "".join(c for i, c in enumerate(letters) if i not in skip)
            if reduce(rest).letters:
                continue
            factors = tuple(invs[i] for i in reversed(chosen))
            product = UCWord()
            for t in factors:
                product = product * t
            if product.letters != letters:
                raise RuntimeError(f"inversion product {product} does not reproduce '{letters}'")
            return factors
    raise RuntimeError(f"no deletion set reduces '{letters}' to the identity")


def _reflection_ball(radius: int) -> frozenset[UCWord]:
    """All reflections of reduced length at most ``2 * radius - 1``."""
    out: set[UCWord] = set()
    frontier = [""]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for s in sorted(ALPHABET):
                if u and u[-1] == s:
                    continue
                out.add(UCWord(u + s + u[::-1]))
                nxt.append(u + s)
        frontier = nxt
    return frozenset(out)


def unrestricted_reflection_length(w: UCWord | str, max_depth: int = MAX_UNRESTRICTED_DEPTH) -> int | None:
    """Shortest product of reflections of length ``<= 2 l_S(w) - 1`` equal to ``w``.

    Meet in the middle over products of at most two reflections, so depths up to four
    are covered; ``None`` means no factorization of length ``<= max_depth`` exists.
    """
    if not 0 <= max_depth <= 4:
        raise ValueError(f"max_depth must be between 0 and 4, got {max_depth}")
    target = reduce(w)
    _check_envelope(target.letters, MAX_UNRESTRICTED_WORD_LENGTH)
    m = len(target)
    if m == 0:
        return 0
    ball = _reflection_ball(m)
    products = {reduce(UCWord(s.letters + t.letters)) for s in ball for t in ball}
    halves: dict[int, frozenset[UCWord] | set[UCWord]] = {1: ball, 2: products}
    for d in range(m % 2 or 2, max_depth + 1, 2):
        if d == 1:
            if target in ball:
                return 1
            continue
        left = halves[d // 2]
        right = halves[d - d // 2]
        if any((x.inverse() * target) in right for x in left):
            return d
    return None


def uc_reflection_length(w: UCWord | str) -> int:
    """Exact ``l_R(w)``; short words are cross-checked against the unrestricted search."""
    letters = reduce(w).letters
    _check_envelope(letters, MAX_WORD_LENGTH)
    length = len(dyer_factorization(letters))
    if len(letters) <= MAX_UNRESTRICTED_WORD_LENGTH:
        check = unrestricted_reflection_length(letters)
        expected = length if length <= MAX_UNRESTRICTED_DEPTH else None
        if check != expected:
            raise RuntimeError(
                f"restricted and unrestricted searches disagree on '{letters}': {length} vs {check}"
            )
    return length


def describe(w: UCWord | str) -> dict[str, Any]:
    """JSON-ready summary ``{word, reduced, ls, lr}``."""
    raw = w.letters if isinstance(w, UCWord) else w
    reduced = reduce(w)
    return {
        "word": raw,
        "reduced": str(reduced),
        "ls": len(reduced),
        "lr": uc_reflection_length(reduced),
    }
