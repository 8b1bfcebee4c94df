"""JSON interchange format for algebras.

{
  "arity": n,
  "dim": d,
  "labels": ["x", "x1", ...],
  "brackets": [
    {"args": [i1, ..., in], "value": [{"index": k, "coeff": "p/q"}, ...]},
    ...
  ]
}

Indices are 1-based and "args" must be strictly increasing. Coefficients
are strings (or integers) holding exact rationals.
"""

import json
from pathlib import Path
from typing import Union

from ..errors import AlgebraFormatError, NLieError
from .algebra import NLieAlgebra
from .linalg import format_fraction, to_fraction


def _require(data: dict, key: str, kind):
    if key not in data:
        raise AlgebraFormatError(f"missing field '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise AlgebraFormatError(f"field '{key}' has the wrong type")
    return value


def algebra_from_dict(data: dict) -> NLieAlgebra:
    """Build an algebra from its parsed JSON description."""
    if not isinstance(data, dict):
        raise AlgebraFormatError("algebra description must be a JSON object")
    arity = _require(data, "arity", int)
    dim = _require(data, "dim", int)
    labels = data.get("labels") or []
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise AlgebraFormatError("'labels' must be a list of strings")
    brackets = data.get("brackets", [])
    if not isinstance(brackets, list):
        raise AlgebraFormatError("'brackets' must be a list")

    constants = {}
    for position, entry in enumerate(brackets, start=1):
        if not isinstance(entry, dict):
            raise AlgebraFormatError(f"bracket #{position} must be an object")
        args = _require(entry, "args", list)
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in args):
            raise AlgebraFormatError(f"bracket #{position}: args must be integers")
        key = tuple(i - 1 for i in args)
        if key in constants:
            raise AlgebraFormatError(f"bracket {args} given twice")

        vector = {}
        for term in _require(entry, "value", list):
            if not isinstance(term, dict):
                raise AlgebraFormatError(f"bracket #{position}: value terms must be objects")
            index = _require(term, "index", int)
            coeff = term.get("coeff")
            try:
                coefficient = to_fraction(coeff)
            except (TypeError, ValueError, ZeroDivisionError):
                raise AlgebraFormatError(f"bracket #{position}: bad coefficient {coeff!r}")
            if not 1 <= index <= dim:
                raise AlgebraFormatError(f"bracket #{position}: index {index} outside 1..{dim}")
            vector[index - 1] = vector.get(index - 1, 0) + coefficient
        constants[key] = vector

    try:
        return NLieAlgebra(arity, dim, constants, tuple(labels))
    except AlgebraFormatError:
        raise
    except NLieError as e:
        raise AlgebraFormatError(str(e)) from e


def algebra_to_dict(algebra: NLieAlgebra) -> dict:
    return {
        "arity": algebra.arity,
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "brackets": [
            {
                "args": [i + 1 for i in key],
                "value": [
                    {"index": k + 1, "coeff": format_fraction(v)} for k, v in value
                ],
            }
            for key, value in algebra.constants
        ],
    }


def load_algebra(path: Union[str, Path]) -> NLieAlgebra:
    """
    Read an algebra from a JSON file.

    Raises:
        AlgebraFormatError: if the file is missing, is not JSON or does not
            describe an algebra
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise AlgebraFormatError(f"file not found: {path}")
    except json.JSONDecodeError as e:
        raise AlgebraFormatError(f"{path}: invalid JSON ({e})")
    return algebra_from_dict(data)


def dump_algebra(algebra: NLieAlgebra, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(algebra_to_dict(algebra), f, indent=2)
        f.write("\n")
