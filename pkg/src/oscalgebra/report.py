"""Machine-readable outcomes of relation, Jacobi and residual checks.

Symbolic checks carry an exact-zero marker instead of a floating residual;
informational entries never affect the pass/fail verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

EXACT_ZERO = "0 (exact)"

MODE_SYMBOLIC = "symbolic"
MODE_NUMERIC = "numeric"

PASS = "pass"
FAIL = "fail"
INFORMATIONAL = "informational"


@dataclass(frozen=True)
class Check:
    name: str
    mode: str
    status: str
    residual: float | None = None  # None with exact=True means exact zero
    exact: bool = False
    detail: str = ""

    def residual_json(self):
        if self.exact:
            return EXACT_ZERO
        return self.residual

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "status": self.status,
            "residual": self.residual_json(),
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        residual = d.get("residual")
        exact = residual == EXACT_ZERO
        return cls(
            name=d["name"],
            mode=d["mode"],
            status=d["status"],
            residual=None if exact else residual,
            exact=exact,
            detail=d.get("detail", ""),
        )


def symbolic_check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(
        name=name,
        mode=MODE_SYMBOLIC,
        status=PASS if ok else FAIL,
        residual=None,
        exact=ok,
        detail=detail,
    )


def numeric_check(name: str, residual: float, tolerance: float, detail: str = "") -> Check:
    return Check(
        name=name,
        mode=MODE_NUMERIC,
        status=PASS if residual <= tolerance else FAIL,
        residual=residual,
        detail=detail,
    )


def informational(name: str, detail: str, mode: str = MODE_SYMBOLIC) -> Check:
    return Check(name=name, mode=mode, status=INFORMATIONAL, detail=detail)


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    casimir_eigenvalue: Fraction | None = None

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def counts(self) -> tuple[int, int, int]:
        n_pass = sum(1 for c in self.checks if c.status == PASS)
        n_fail = sum(1 for c in self.checks if c.status == FAIL)
        n_info = sum(1 for c in self.checks if c.status == INFORMATIONAL)
        return n_pass, n_fail, n_info

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        if other.casimir_eigenvalue is not None:
            self.casimir_eigenvalue = other.casimir_eigenvalue

    def as_dict(self) -> dict:
        return {
            "checks": [c.as_dict() for c in self.checks],
            "casimir": None
            if self.casimir_eigenvalue is None
            else str(self.casimir_eigenvalue),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        kappa = d.get("casimir")
        return cls(
            checks=[Check.from_dict(c) for c in d.get("checks", [])],
            casimir_eigenvalue=None if kappa is None else Fraction(kappa),
        )
