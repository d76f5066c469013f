"""Base experiment interface."""

from __future__ import annotations

import csv
import io
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

SCHEMA = "coxlen/1"


@dataclass
class ExperimentResult:
    """Rows of one experiment plus its verdict.

    ``columns`` fixes the CSV header and the key order of every row.
    """

    name: str
    columns: tuple[str, ...]
    rows: list[dict[str, Any]] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add_row(self, **values: Any) -> None:
        missing = [c for c in self.columns if c not in values]
        if missing:
            raise ValueError(f"row for '{self.name}' is missing columns: {', '.join(missing)}")
        self.rows.append({c: values[c] for c in self.columns})

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "experiment": self.name,
            "ok": self.ok,
            "summary": self.summary,
            "failures": self.failures,
            "columns": list(self.columns),
            "rows": self.rows,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(str(v) for v in value) + "]"
    if value is None:
        return ""
    return str(value)


class Experiment(ABC):
    """Abstract base class for all experiments."""

    name: str
    columns: tuple[str, ...]

    def new_result(self) -> ExperimentResult:
        return ExperimentResult(self.name, self.columns)

    @abstractmethod
    def run(self) -> ExperimentResult:
        """Run the experiment and collect its rows and failures."""
