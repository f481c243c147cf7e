"""JSON reports: complex numbers as ``[re, im]``, keys sorted, tolerances
echoed by the report objects themselves."""

import dataclasses
import enum
import json
import logging
import math
from collections.abc import Mapping
from fractions import Fraction
from pathlib import Path

import numpy as np

from polygen.constants.types import ReportDict
from polygen.helpers.helpers import atomic_write_text, complex_to_pair

logger = logging.getLogger(__name__)


def to_jsonable(value: object) -> object:
    """Convert report values into plain JSON types.

    Non-finite floats become the strings ``"inf"``, ``"-inf"`` and ``"nan"``
    so the output stays strict JSON.
    """
    if value is None or isinstance(value, bool | str | int):
        return value
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, complex):
        return [to_jsonable(part) for part in complex_to_pair(value)]
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, enum.Enum):
        return to_jsonable(value.value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            field.name: to_jsonable(getattr(value, field.name))
            for field in dataclasses.fields(value)
            if not field.name.startswith("_")
        }
    if isinstance(value, Mapping):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [to_jsonable(item) for item in value]
    raise TypeError(f"Cannot serialise {type(value).__name__} to JSON")


def dumps_report(report: ReportDict) -> str:
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True) + "\n"


def write_report(report: ReportDict, path: Path) -> Path:
    atomic_write_text(path, dumps_report(report))
    logger.info("Wrote %s", path)
    return path
