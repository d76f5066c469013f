"""Command-line interface: ``coxlen <subcommand> ...``.

Results go to stdout (or ``--out``) as JSON or CSV; status lines go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal, NoReturn

from coxlen import roots
from coxlen.color import warn
from coxlen.experiments import EXPERIMENTS, SCHEMA, Experiment
from coxlen.experiments.finite import FINITE_TYPES
from coxlen.harness import Harness
from coxlen.length import (
    integral_expression,
    length_bounds,
    minimal_coroot_subspaces,
    move_origin_word,
    real_dimension,
)
from coxlen.oracle import enumerate_w0, oracle_affine_length
from coxlen.roots import RootSystem
from coxlen.syntax import ParseError, format_element, format_lattice, parse_element, parse_lattice
from coxlen.universal import UCWord, describe, dyer_factorization

OutputFormat = Literal["json", "csv"]
VALID_FORMATS: set[OutputFormat] = {"json", "csv"}

DEFAULT_WINDOW = 3
DEFAULT_SEED = 2024


class UsageError(Exception):
    """Bad command-line arguments."""


@dataclass(frozen=True)
class CommandConfig:
    """Parsed command line. ``max_len`` defaults to ``2n + 2`` of the queried system."""

    command: str
    system: str | None = None
    expression: str | None = None
    window: int | None = None
    max_len: int | None = None
    output_format: OutputFormat = "json"
    out: str | None = None
    seed: int = DEFAULT_SEED
    all_minimal: bool = False
    oracle: bool = False
    types: tuple[str, ...] = ()
    box: int | None = None
    max_n: int = 4
    verbose: bool = False
    fail_fast: bool = False

    def __post_init__(self) -> None:
        if self.output_format not in VALID_FORMATS:
            raise ValueError(
                f"Invalid format '{self.output_format}'. Must be one of: {', '.join(sorted(VALID_FORMATS))}"
            )

    def max_len_for(self, system: RootSystem) -> int:
        return self.max_len if self.max_len is not None else 2 * system.rank + 2

    @property
    def search_window(self) -> int:
        return self.window if self.window is not None else DEFAULT_WINDOW


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coxlen", description="Reflection length in affine Coxeter groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", default="json", choices=sorted(VALID_FORMATS))
    common.add_argument("--out", default=None, help="write the result to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", parents=[common], help="list positive roots, coroots and simple roots")
    p.add_argument("system")

    p = sub.add_parser("length", parents=[common], help="bounds or exact reflection length of an element")
    p.add_argument("system")
    p.add_argument("expression")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="refine inexact bounds with the windowed search")

    p = sub.add_parser("dimension", parents=[common], help="dimension of a coroot-lattice vector")
    p.add_argument("system")
    p.add_argument("expression", metavar="lambda")
    p.add_argument("--all-minimal", action="store_true")

    p = sub.add_parser("factor", parents=[common], help="a reflection factorization of an element")
    p.add_argument("system")
    p.add_argument("expression")

    p = sub.add_parser("experiment", parents=[common], help="run a named experiment, or 'all'")
    p.add_argument("name", choices=sorted(EXPERIMENTS) + ["all"])
    p.add_argument("--type", dest="types", default=None, help="root system type(s), comma separated")
    p.add_argument("--box", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--fail-fast", action="store_true")

    p = sub.add_parser("uc", parents=[common], help="reflection length in the universal Coxeter group")
    p.add_argument("expression", metavar="word")
    return parser


def parse_config(argv: Sequence[str]) -> CommandConfig:
    args = build_parser().parse_args(list(argv))
    values = vars(args)
    types = values.get("types")
    # the empty uc word is the identity, so test for None rather than falsiness
    expression = values.get("expression")
    return CommandConfig(
        command=args.command,
        system=values.get("system"),
        expression=expression if expression is not None else values.get("name"),
        window=values.get("window"),
        max_len=values.get("max_len"),
        output_format=args.output_format,
        out=args.out,
        seed=values.get("seed", DEFAULT_SEED),
        all_minimal=values.get("all_minimal", False),
        oracle=values.get("oracle", False),
        types=tuple(t.strip() for t in types.split(",") if t.strip()) if types else (),
        box=values.get("box"),
        max_n=values.get("max_n", 4),
        verbose=values.get("verbose", False),
        fail_fast=values.get("fail_fast", False),
    )


# -- output --------------------------------------------------------------------


def _flat(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    if value is None:
        return ""
    return str(value)


def render(payload: dict[str, Any], output_format: OutputFormat) -> str:
    """JSON document, or a one-row CSV whose nested values are compact JSON."""
    if output_format == "json":
        return json.dumps(payload, indent=2)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    body = {k: v for k, v in payload.items() if k != "schema"}
    writer.writerow(body.keys())
    writer.writerow(_flat(v) for v in body.values())
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def error_payload(kind: str, message: str, position: int | None = None) -> dict[str, Any]:
    return {"schema": SCHEMA, "error": {"kind": kind, "message": message, "position": position}}


# -- commands --------------------------------------------------------------------


def _system(config: CommandConfig) -> RootSystem:
    assert config.system is not None
    return roots.build(config.system)


def _vector(v: Sequence[Any]) -> list[str]:
    return [str(a) for a in v]


def cmd_roots(config: CommandConfig) -> dict[str, Any]:
    system = _system(config)
    return {
        "schema": SCHEMA,
        "system": system.name,
        "rank": system.rank,
        "ambient_dim": system.ambient_dim,
        "exponents": list(system.exponents),
        "positive_roots": [
            {"index": i + 1, "root": _vector(r), "coroot": _vector(c)}
            for i, (r, c) in enumerate(zip(system.positive_roots, system.positive_coroots))
        ],
        "simple_roots": [_vector(r) for r in system.simple_roots],
    }


def cmd_length(config: CommandConfig) -> dict[str, Any]:
    system = _system(config)
    assert config.expression is not None
    w = parse_element(system, config.expression)
    report = length_bounds(w)
    if config.oracle and not report.exact:
        checked = oracle_affine_length(w, config.search_window, config.max_len_for(system), enumerate_w0(system))
        if checked.exact:
            report = checked
        elif checked.upper is None:
            warn(f"no factorization within window {config.search_window} and {config.max_len_for(system)} letters")
    return {"schema": SCHEMA, "system": system.name, "element": format_element(w), **report.to_dict()}


def cmd_dimension(config: CommandConfig) -> dict[str, Any]:
    system = _system(config)
    assert config.expression is not None
    lam = parse_lattice(config.expression, system)
    real = real_dimension(system, lam)
    payload: dict[str, Any] = {
        "schema": SCHEMA,
        "system": system.name,
        "lambda": list(lam),
        "k": real.k,
        "real": real.to_dict(),
        "integral": integral_expression(system, lam).to_dict(),
    }
    if config.all_minimal:
        payload["minimal_subspaces"] = [[_vector(c) for c in basis] for basis in minimal_coroot_subspaces(system, lam)]
    return payload


def cmd_factor(config: CommandConfig) -> dict[str, Any]:
    system = _system(config)
    assert config.expression is not None
    w = parse_element(system, config.expression)
    report = length_bounds(w)
    assert report.witness_word is not None
    return {
        "schema": SCHEMA,
        "system": system.name,
        "element": format_element(w),
        "word": str(report.witness_word),
        "length": len(report.witness_word),
        "exact": report.exact,
        "certificate": report.certificate,
        "move_origin": str(move_origin_word(system, w.translation)),
        "translation": format_lattice(w.translation),
    }


def cmd_uc(config: CommandConfig) -> dict[str, Any]:
    assert config.expression is not None
    word = "" if config.expression == "e" else config.expression
    payload = describe(UCWord(word))
    payload["factorization"] = [str(t) for t in dyer_factorization(word)]
    return {"schema": SCHEMA, **payload}


def build_experiments(name: str, config: CommandConfig) -> list[Experiment]:
    """Instantiate ``name`` from the flags that apply to it.

    Sweeps over a single root system (census, equivalence, f-lambda) get one
    instance per ``--type`` entry; the finite-group experiments take them all at once.
    """
    types = config.types or ("A2",)
    box = config.box
    if name == "census":
        return [EXPERIMENTS[name](t, box if box is not None else 3, config.window) for t in types]
    if name == "equivalence":
        return [EXPERIMENTS[name](t, box if box is not None else 3, config.window) for t in types]
    if name == "f-lambda":
        return [EXPERIMENTS[name](t, box if box is not None else 2, config.search_window) for t in types]
    if name in ("carter", "solomon"):
        return [EXPERIMENTS[name](config.types or FINITE_TYPES)]
    if name == "uc-powers":
        return [EXPERIMENTS[name](config.max_n)]
    if name == "properties":
        return [EXPERIMENTS[name](config.seed)]
    return [EXPERIMENTS[name]()]


def cmd_experiment(config: CommandConfig) -> tuple[str, bool]:
    assert config.expression is not None
    names = sorted(EXPERIMENTS) if config.expression == "all" else [config.expression]
    harness = Harness().add(*(e for n in names for e in build_experiments(n, config)))
    ok = harness.run(verbose=config.verbose, fail_fast=config.fail_fast)
    if config.output_format == "csv":
        text = "".join(r.to_csv() for r in harness.results)
    elif len(harness.results) == 1:
        text = harness.results[0].to_json()
    else:
        text = json.dumps({"schema": SCHEMA, "ok": ok, "results": [r.to_dict() for r in harness.results]}, indent=2)
    return text, ok


_COMMANDS = {
    "roots": cmd_roots,
    "length": cmd_length,
    "dimension": cmd_dimension,
    "factor": cmd_factor,
    "uc": cmd_uc,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_config(argv)
        if config.command == "experiment":
            text, ok = cmd_experiment(config)
            emit(text, config.out)
            return 0 if ok else 1
        emit(render(_COMMANDS[config.command](config), config.output_format), config.out)
        return 0
    except UsageError as e:
        payload, code = error_payload("usage", str(e)), 2
    except ParseError as e:
        payload, code = error_payload("parse", e.message, e.position), 2
    except ValueError as e:
        payload, code = error_payload("value", str(e)), 1
    except RuntimeError as e:
        payload, code = error_payload("runtime", str(e)), 1
    emit(json.dumps(payload, indent=2), None)
    return code


if __name__ == "__main__":
    sys.exit(main())
