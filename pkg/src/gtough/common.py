"""Shared exact-rational helpers and the verdict record used by all checkers."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Accepts Fraction, int, a ``(numerator, denominator)`` pair, or a string
    like ``"4/3"`` or ``"2"``.  Floats are rejected: every toughness
    comparison in this package is exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {type(value).__name__}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, tuple) and len(value) == 2:
        num, den = value
        if isinstance(num, bool) or isinstance(den, bool):
            raise TypeError("exact rational required, got bool")
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("rational pair must be two ints")
        return Fraction(num, den)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational {value!r}") from exc
    raise TypeError(f"exact rational required, got {type(value).__name__}")


def fraction_str(value: Fraction | None) -> str:
    """Serialize a Fraction as ``"p/q"`` (always with denominator); None -> ``"inf"``."""
    if value is None:
        return "inf"
    return f"{value.numerator}/{value.denominator}"


def ceil_fraction(value: Fraction | int) -> int:
    """Exact ceiling of a rational using integer arithmetic only."""
    frac = as_fraction(value)
    return -((-frac.numerator) // frac.denominator)


@dataclass(frozen=True)
class ClauseVerdict:
    """Outcome of one structural check on one graph (or one edge of it).

    ``applicable`` is whether the check's hypothesis is satisfied; a check
    whose hypothesis fails holds vacuously, so ``applicable=False`` forces
    ``holds=True``.  ``evaluable=False`` marks conclusions that cannot be
    decided for the given parameters (e.g. a cut of size exactly 2t is
    demanded while 2t is not an integer); such verdicts also keep
    ``holds=True`` and are counted separately by scan summaries.
    """

    clause: str
    applicable: bool
    holds: bool
    evaluable: bool = True
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.applicable and not self.holds:
            raise ValueError("a verdict with a failed hypothesis holds vacuously")
        if not self.evaluable and not self.holds:
            raise ValueError("a non-evaluable verdict cannot be marked failed")

    @property
    def failed(self) -> bool:
        return self.applicable and self.evaluable and not self.holds

    def to_dict(self) -> dict:
        return {
            "clause": self.clause,
            "applicable": self.applicable,
            "holds": self.holds,
            "evaluable": self.evaluable,
            "witness": self.witness,
        }
