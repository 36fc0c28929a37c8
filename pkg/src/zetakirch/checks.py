"""Verdict objects shared by every identity check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection

ALL = "*"


def perturbed(name: str, rhs, perturb: Collection[str] = ()):
    """Negative control: ``rhs + 1`` (constant coefficient) when ``name`` is selected."""
    if perturb and (name in perturb or ALL in perturb):
        return rhs + 1
    return rhs


@dataclass
class Check:
    name: str
    lhs: object
    rhs: object
    passed: bool
    diff: object = None
    tolerance: float | None = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        mode = "exact" if self.tolerance is None else f"tol={self.tolerance:g}"
        text = f"[{status}] {self.name} ({mode}): lhs = {_fmt(self.lhs)}; rhs = {_fmt(self.rhs)}"
        if not self.passed and self.diff is not None:
            text += f"; lhs - rhs = {_fmt(self.diff)}"
        if self.note:
            text += f"  # {self.note}"
        return text


def _fmt(x, limit: int = 120) -> str:
    if isinstance(x, complex):
        return f"{x.real:.15g}{x.imag:+.15g}j"
    if isinstance(x, float):
        return f"{x:.15g}"
    text = str(x)
    if len(text) > limit and hasattr(x, "terms"):
        return f"<polynomial with {len(x)} terms>"
    return text


def exact_check(name: str, lhs, rhs, perturb: Collection[str] = (), note: str = "") -> Check:
    rhs = perturbed(name, rhs, perturb)
    diff = lhs - rhs
    return Check(name, lhs, rhs, not diff, diff if diff else None, note=note)


def numeric_check(name: str, lhs, rhs, rel_tol: float, perturb: Collection[str] = (), note: str = "") -> Check:
    rhs = perturbed(name, rhs, perturb)
    diff = complex(lhs) - complex(rhs)
    scale = max(abs(complex(lhs)), abs(complex(rhs)), 1.0)
    ok = abs(diff) <= rel_tol * scale
    return Check(name, lhs, rhs, ok, diff, tolerance=rel_tol, note=note)


@dataclass
class Verdict:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Verdict"):
        self.checks.extend(other.checks)

    def __bool__(self):
        return self.passed

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]
