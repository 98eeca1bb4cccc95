"""Structured check reports and canonical JSON serialisation.

Canonical form: keys sorted, floats printed with 17 significant digits (so
doubles round-trip exactly), no whitespace surprises.  Identical inputs give
byte-identical output.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

__all__ = ["ARTIFACT_VERSION", "CheckReport", "canonical_json", "digest"]

ARTIFACT_VERSION = "0.1.0"


def _render(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool) or isinstance(value, np.bool_):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError("cannot serialise non-finite float")
        return format(v, ".17g")
    if isinstance(value, complex):
        return _render({"re": value.real, "im": value.imag})
    if isinstance(value, str):
        out = value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{out}"'
    if isinstance(value, np.ndarray):
        return _render(value.tolist())
    if isinstance(value, dict):
        items = sorted(value.items(), key=lambda kv: str(kv[0]))
        body = ",".join(f"{_render(str(k))}:{_render(v)}" for k, v in items)
        return "{" + body + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_render(v) for v in value) + "]"
    if hasattr(value, "to_dict"):
        return _render(value.to_dict())
    raise TypeError(f"cannot serialise value of type {type(value)!r}")


def canonical_json(value) -> str:
    """Deterministic JSON text with 17-significant-digit floats."""
    return _render(value)


def digest(value) -> str:
    """Short content digest of any canonically serialisable value."""
    return hashlib.sha256(canonical_json(value).encode()).hexdigest()[:16]


@dataclass
class CheckReport:
    """Result of one verification: name, input digests/seeds, residual vs
    tolerance, verdict, and optionally a spectrum and free-form details."""

    check: str
    inputs: dict
    residual: float
    tolerance: float
    passed: bool
    spectrum: list | None = None
    details: dict = field(default_factory=dict)
    diagnostic: bool = False

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "inputs": self.inputs,
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": bool(self.passed),
        }
        if self.spectrum is not None:
            out["spectrum"] = [float(x) for x in self.spectrum]
        if self.details:
            out["details"] = self.details
        if self.diagnostic:
            out["diagnostic"] = True
        return out
