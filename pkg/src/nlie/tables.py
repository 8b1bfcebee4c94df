"""Parameter sweeps over the calculators and their CSV, LaTeX and JSON output."""

import csv
import inspect
import io
import json
import logging
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, List, Union

from rich.table import Table

from .counting.basic import basic_count, dim_modular_tensor, dim_modular_tensor_triple, graded_dim_range
from .counting.multipliers import (
    MultiplierResult,
    bound_2multiplier_dimL2_k,
    dim_2multiplier_dimL2_one,
    dim_2multiplier_direct_sum,
    dim_2multiplier_heisenberg,
    dim_multiplier_abelian,
    dim_multiplier_heisenberg,
    dim_schur_multiplier_abelian,
)
from .counting.witt import witt_count
from .errors import NLieError, ParameterError, TermCapExceededError
from .oracle.compare import CompareRow
from .oracle.free import graded_dimension
from .structure.capability import (
    is_2capable_heisenberg,
    is_capable_abelian,
    is_capable_heisenberg_sum,
)

logger = logging.getLogger(__name__)

SKIPPED = "skipped"
INVALID = "invalid"

CALCULATORS: Dict[str, Callable[..., Any]] = {
    "count_basic": basic_count,
    "witt_count": witt_count,
    "graded_dim_range": graded_dim_range,
    "dim_modular_tensor": dim_modular_tensor,
    "dim_modular_tensor_triple": dim_modular_tensor_triple,
    "dim_multiplier_abelian": dim_multiplier_abelian,
    "dim_schur_multiplier_abelian": dim_schur_multiplier_abelian,
    "dim_multiplier_heisenberg": dim_multiplier_heisenberg,
    "dim_2multiplier_heisenberg": dim_2multiplier_heisenberg,
    "dim_2multiplier_direct_sum": dim_2multiplier_direct_sum,
    "dim_2multiplier_dimL2_one": dim_2multiplier_dimL2_one,
    "bound_2multiplier_dimL2_k": bound_2multiplier_dimL2_k,
    "graded_dimension": graded_dimension,
    "is_capable_abelian": is_capable_abelian,
    "is_capable_heisenberg_sum": is_capable_heisenberg_sum,
    "is_2capable_heisenberg": is_2capable_heisenberg,
}


@dataclass
class ResultTable:
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def to_csv(table: ResultTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def _latex_escape(text: str) -> str:
    for char, escaped in (("\\", r"\textbackslash{}"), ("_", r"\_"), ("&", r"\&"), ("%", r"\%"), ("#", r"\#")):
        text = text.replace(char, escaped)
    return text


def to_latex(table: ResultTable) -> str:
    """booktabs tabular; numbers right-aligned."""
    lines = [
        r"\begin{tabular}{" + "r" * len(table.columns) + "}",
        r"\toprule",
        " & ".join(_latex_escape(c) for c in table.columns) + r" \\",
        r"\midrule",
    ]
    for row in table.rows:
        lines.append(" & ".join(_latex_escape(_cell(v)) for v in row) + r" \\")
    lines += [r"\bottomrule", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def to_json(table: ResultTable) -> str:
    return json.dumps(table.records(), indent=2) + "\n"


def to_rich(table: ResultTable, title: str = "") -> Table:
    rich_table = Table(title=title or None)
    for column in table.columns:
        rich_table.add_column(column, justify="right")
    for row in table.rows:
        rich_table.add_row(*(_cell(v) for v in row))
    return rich_table


RENDERERS = {"csv": to_csv, "latex": to_latex, "json": to_json}


def render(table: ResultTable, fmt: str) -> str:
    if fmt not in RENDERERS:
        raise ParameterError(f"unknown format '{fmt}', expected one of {', '.join(RENDERERS)}")
    return RENDERERS[fmt](table)


def compare_table(rows: List[CompareRow]) -> ResultTable:
    columns = ["w", "formula", "oracle", "witt", "agree"]
    return ResultTable(columns, [[row.to_dict()[c] for c in columns] for row in rows])


def _axis_values(name: str, axis: Any) -> List[int]:
    if isinstance(axis, list):
        values = axis
    elif isinstance(axis, dict) and set(axis) == {"start", "stop"}:
        values = list(range(axis["start"], axis["stop"] + 1))
    else:
        raise ParameterError(f"grid axis '{name}' must be a list or {{\"start\", \"stop\"}}")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ParameterError(f"grid axis '{name}' must hold integers")
    return values


def _value(result: Any) -> Any:
    if isinstance(result, MultiplierResult):
        return result.value
    if hasattr(result, "dimension"):
        return result.dimension
    return result


def run_sweep(sweep: Dict[str, Any]) -> ResultTable:
    """
    Evaluate one calculator over a parameter grid.

    sweep = {"calculator": name, "grid": {axis: [values] | {"start", "stop"}},
            "fixed": {param: value}}. Rows follow the grid order with the
    first axis varying slowest. Cells outside a formula's range read
    "invalid" and oracle cells above the term cap read "skipped".
    """
    if not isinstance(sweep, dict):
        raise ParameterError("sweep description must be a JSON object")
    name = sweep.get("calculator")
    if name not in CALCULATORS:
        raise ParameterError(
            f"unknown calculator {name!r}; available: {', '.join(sorted(CALCULATORS))}"
        )
    grid = sweep.get("grid") or {}
    fixed = sweep.get("fixed") or {}
    if not isinstance(grid, dict) or not isinstance(fixed, dict):
        raise ParameterError("'grid' and 'fixed' must be JSON objects")
    for key, value in fixed.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterError(f"fixed parameter '{key}' must be an integer")

    calculator = CALCULATORS[name]
    axes = list(grid)
    table = ResultTable(columns=axes + ["value"])
    values = [_axis_values(axis, grid[axis]) for axis in axes]
    if not axes or any(not v for v in values):
        return table
    try:
        inspect.signature(calculator).bind(**dict.fromkeys(list(fixed) + axes))
    except TypeError as e:
        raise ParameterError(f"{name}: {e}")

    for point in product(*values):
        params = dict(fixed)
        params.update(zip(axes, point))
        try:
            cell = _value(calculator(**params))
        except TermCapExceededError as e:
            logger.info("%s%s skipped: %s", name, point, e)
            cell = SKIPPED
        except NLieError as e:
            logger.info("%s%s invalid: %s", name, point, e)
            cell = INVALID
        table.rows.append(list(point) + [cell])
    return table


def load_sweep(path: Union[str, Path]) -> Dict[str, Any]:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ParameterError(f"sweep file not found: {path}")
    except json.JSONDecodeError as e:
        raise ParameterError(f"{path}: invalid JSON ({e})")
