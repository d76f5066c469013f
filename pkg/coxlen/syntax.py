"""Text syntax for affine group elements.

``t[c1,...,cn]`` is a translation in simple-coroot coordinates, ``r(p,i)`` the
reflection with 1-based positive-root index ``p`` and offset ``i``, and ``e`` the
identity. Factors are joined with ``*`` and act right to left.
"""

from __future__ import annotations

import re

from coxlen.affine import (
    AffineElement,
    AffineReflection,
    compose,
    identity,
    project,
    reflection_to_element,
    translation,
)
from coxlen.length import spherical_factorization
from coxlen.roots import LatticeVector, RootSystem

_INT = r"\s*(-?\d+)\s*"
_TRANSLATION = re.compile(r"t\[([^\]]*)\]")
_REFLECTION = re.compile(rf"r\({_INT},{_INT}\)")
_IDENTITY = re.compile(r"e(?![A-Za-z0-9])")


class ParseError(ValueError):
    """A malformed expression; ``position`` is the 0-based column of the problem."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at column {position})")
        self.message = message
        self.position = position


def _parse_ints(body: str, offset: int) -> LatticeVector:
    if not body.strip():
        return ()
    values = []
    column = offset
    for part in body.split(","):
        if not re.fullmatch(_INT, part):
            raise ParseError(f"Invalid integer '{part.strip()}'", column)
        values.append(int(part))
        column += len(part) + 1
    return tuple(values)


def parse_lattice(text: str, system: RootSystem | None = None) -> LatticeVector:
    """Parse ``"[2,2,1,1]"``; with ``system`` the length must equal its rank."""
    stripped = text.strip()
    start = len(text) - len(text.lstrip())
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError(f"Expected a bracketed integer list, got '{stripped}'", start)
    lam = _parse_ints(stripped[1:-1], start + 1)
    if system is not None and len(lam) != system.rank:
        raise ParseError(f"Expected {system.rank} coordinates for {system.name}, got {len(lam)}", start)
    return lam


def _parse_factor(system: RootSystem, text: str, pos: int) -> tuple[AffineElement, int]:
    if m := _TRANSLATION.match(text, pos):
        lam = _parse_ints(m.group(1), m.start(1))
        if len(lam) != system.rank:
            raise ParseError(f"Expected {system.rank} coordinates for {system.name}, got {len(lam)}", pos)
        return translation(system, lam), m.end()
    if m := _REFLECTION.match(text, pos):
        p, offset = int(m.group(1)), int(m.group(2))
        count = len(system.positive_roots)
        if not 1 <= p <= count:
            raise ParseError(f"Root index {p} out of range. Must be between 1 and {count}", m.start(1))
        return reflection_to_element(system, AffineReflection(p - 1, offset)), m.end()
    if m := _IDENTITY.match(text, pos):
        return identity(system), m.end()
    raise ParseError("Expected 't[...]', 'r(p,i)' or 'e'", pos)


def parse_element(system: RootSystem, text: str) -> AffineElement:
    """Parse a ``*``-separated product into its normal form."""
    pos = 0
    result = identity(system)
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        factor, pos = _parse_factor(system, text, pos)
        result = compose(result, factor)
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return result
        if text[pos] != "*":
            raise ParseError(f"Unexpected character '{text[pos]}'", pos)
        pos += 1


def format_lattice(lam: LatticeVector) -> str:
    return "[" + ",".join(str(c) for c in lam) + "]"


def format_element(w: AffineElement) -> str:
    """``t[lambda]`` followed by a minimal factorization of ``w0``; re-parses to ``w``."""
    if w.is_identity:
        return "e"
    parts = []
    if not w.fixes_origin:
        parts.append(f"t{format_lattice(w.translation)}")
    parts.extend(str(r) for r in spherical_factorization(project(w)))
    return "*".join(parts)
