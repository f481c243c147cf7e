import cmath
import math
import os
import tempfile
from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path

from polygen.constants.types import ComplexPair


def lcm_of(values: Iterable[int]) -> int:
    return math.lcm(*values)


def rotation_multiplier(q: int, p: int, modulus: float = 1.0) -> complex:
    """Return ``modulus * exp(2*pi*i*q/p)`` with exact values on the axes."""
    turns = Fraction(q, p) % 1
    exact = {
        Fraction(0): 1 + 0j,
        Fraction(1, 4): 1j,
        Fraction(1, 2): -1 + 0j,
        Fraction(3, 4): -1j,
    }
    unit = exact.get(turns)
    if unit is None:
        unit = cmath.exp(2j * math.pi * float(turns))
    return modulus * unit


def phase_turns(z: complex) -> float:
    """Argument of ``z`` as a fraction of a full turn, in [0, 1)."""
    turns = cmath.phase(z) / (2 * math.pi)
    return turns % 1.0


def rational_phase(
    z: complex, max_denominator: int, tol: float
) -> Fraction | None:
    """Best rational approximation r/s of the phase of ``z`` in turns.

    Returns None when no fraction with denominator up to ``max_denominator``
    lies within ``tol`` turns of the measured phase.
    """
    turns = phase_turns(z)
    candidate = Fraction(turns).limit_denominator(max_denominator)
    if abs(float(candidate) - turns) > tol:
        return None
    # phases just below a full turn approximate 1/1
    return candidate % 1


def complex_to_pair(value: complex) -> ComplexPair:
    return [float(value.real), float(value.imag)]


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
