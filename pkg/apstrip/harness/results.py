"""
Result tables and their CSV / JSON files
"""
import csv
import io
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator

Cell = Union[bool, int, float, str]


class OutputFormat(str, Enum):
    """Which result files to write"""
    CSV = "csv"
    JSON = "json"
    BOTH = "both"


class Check(BaseModel):
    """One pass/fail assertion of an experiment"""
    name: str
    passed: bool
    detail: str = ""


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    return value


class ResultTable(BaseModel):
    """Rows produced by one experiment, with its checks and run metadata"""

    experiment: str
    columns: List[str]
    rows: List[List[Cell]] = Field(default_factory=list)
    checks: List[Check] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("rows", mode="before")
    @classmethod
    def plain_cells(cls, rows):
        return [[_plain(cell) for cell in row] for row in rows]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[Check]:
        return next((check for check in self.checks if not check.passed), None)

    def to_csv(self) -> str:
        """Header and rows; floats in shortest round-trip form"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(cell) for cell in row])
        return buffer.getvalue()

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def format_cell(cell: Cell) -> str:
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, float):
        return repr(cell)
    return str(cell)


class CheckList:
    """Collects checks while an experiment runs"""

    def __init__(self):
        self.checks: List[Check] = []

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name=name, passed=bool(passed), detail=detail))
        return bool(passed)

    def bound(self, name: str, values: Sequence[float], limit: float, slack: float = 0.0) -> bool:
        """Check max(values) <= limit + slack"""
        worst = max(values)
        return self.add(name, worst <= limit + slack, f"max {worst!r} vs limit {limit!r}")

    def floor(self, name: str, values: Sequence[float], limit: float, slack: float = 0.0) -> bool:
        """Check min(values) >= limit - slack"""
        worst = min(values)
        return self.add(name, worst >= limit - slack, f"min {worst!r} vs floor {limit!r}")


def write_outputs(table: ResultTable, out_dir: Union[str, Path],
                  fmt: OutputFormat = OutputFormat.BOTH) -> List[Path]:
    """
    Write <out_dir>/<experiment>.csv and/or .json.

    Args:
        table: Result table
        out_dir: Output directory (created if missing)
        fmt: Which files to write

    Returns:
        Paths written
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt in (OutputFormat.CSV, OutputFormat.BOTH):
        path = out / f"{table.experiment}.csv"
        path.write_text(table.to_csv(), encoding="utf-8")
        written.append(path)
    if fmt in (OutputFormat.JSON, OutputFormat.BOTH):
        path = out / f"{table.experiment}.json"
        path.write_text(table.to_json(), encoding="utf-8")
        written.append(path)
    return written
