"""Run-time configuration shared by all modules."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from .errors import InvalidInput

DEFAULT_REL_TOL = Fraction(1, 2**30)
PRECISION_CAP = Fraction(1, 2**240)


@dataclass(frozen=True)
class Config:
    """Tolerances, caps and budgets.

    ``rel_tol`` is the default relative width of every enclosure;
    ``precision_cap`` is the tightest tolerance tried before a comparison is
    declared inconclusive.
    """

    rel_tol: Fraction = DEFAULT_REL_TOL
    precision_cap: Fraction = PRECISION_CAP
    max_field_degree: int = 16
    max_factor_degree: int = 16
    max_enum_degree: int = 6
    max_enum_height: Fraction = Fraction(16)
    trial_division_bound: int = 10**6
    rho_iterations: int = 200_000
    workers: int = 1
    output_format: str = "json"
    tower_window: int = 3

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "output_format":
                if value not in ("json", "table"):
                    raise InvalidInput(f"unknown output format {value!r}")
            elif not value > 0:
                raise InvalidInput(f"config value {f.name} must be positive")

    def updated(self, **changes) -> Config:
        changes = {k: v for k, v in changes.items() if v is not None}
        for key in ("rel_tol", "precision_cap", "max_enum_height"):
            if key in changes:
                changes[key] = Fraction(changes[key])
        return replace(self, **changes)

    @classmethod
    def from_file(cls, path) -> Config:
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InvalidInput(f"unknown config keys: {sorted(unknown)}")
        return cls().updated(**data)

    def to_json(self) -> dict:
        out = asdict(self)
        for key, value in out.items():
            if isinstance(value, Fraction):
                out[key] = str(value)
        return out


DEFAULT = Config()
