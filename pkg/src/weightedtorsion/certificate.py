from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Certificate:
    """Outcome of an exact identity check.

    ``ok`` is False when the identity was evaluated and failed; violated
    preconditions raise instead.
    """

    name: str
    ok: bool
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "details": jsonable(self.details)}


def jsonable(x):
    """Recursively convert fractions to "p/q" strings for JSON output."""
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
