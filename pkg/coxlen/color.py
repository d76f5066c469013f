"""ANSI styling for status lines on stderr."""

from __future__ import annotations

import sys
from typing import TextIO

BOLD = "\033[1m"
DIM = "\033[2m"
RED = "\033[31m"
GREEN = "\033[32m"
YELLOW = "\033[33m"
CYAN = "\033[36m"
RESET = "\033[0m"

STATUS_STYLES = {"PASS": GREEN, "FAIL": RED, "SKIP": YELLOW}


def _is_tty(stream: TextIO) -> bool:
    return hasattr(stream, "isatty") and stream.isatty()


def color(text: str, code: str, stream: TextIO | None = None) -> str:
    """Wrap text in ANSI codes if ``stream`` (stderr by default) is a TTY."""
    if not _is_tty(stream if stream is not None else sys.stderr):
        return text
    return f"{code}{text}{RESET}"


def status(label: str, message: str) -> None:
    """Print ``  LABEL  message`` to stderr, e.g. ``PASS  solomon``."""
    code = STATUS_STYLES.get(label, CYAN)
    print(f"  {color(label.ljust(4), code)}  {message}", file=sys.stderr)


def warn(message: str) -> None:
    print(f"  {color('Warning:', YELLOW)} {message}", file=sys.stderr)
