"""Shared report records produced by identity checks and suite runs."""

from __future__ import annotations

from dataclasses import dataclass, field

NEAR_ZERO_RHS = 1e-12
_FLOOR = 1e-300


@dataclass(frozen=True)
class CheckReport:
    """One identity checked against one oracle at one parameter point."""

    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    oracle: str
    passed: bool
    diagnostics: str = ""

    @property
    def near_zero_rhs(self) -> bool:
        return abs(self.rhs) < NEAR_ZERO_RHS


def make_report(identity_id: str, params: dict, lhs: complex, rhs: complex,
                oracle: str, tol: float, diagnostics: str = "") -> CheckReport:
    lhs, rhs = complex(lhs), complex(rhs)
    abs_res = float(abs(lhs - rhs))
    rel_res = float(abs_res / max(abs(rhs), _FLOOR))
    near_zero = abs(rhs) < NEAR_ZERO_RHS
    # near-zero right-hand sides make relative residuals meaningless;
    # flag them and judge on the absolute residual instead
    passed = bool(abs_res < tol) if near_zero else bool(rel_res < tol)
    if near_zero:
        diagnostics = (diagnostics + " " if diagnostics else "") + "NearZeroRHS"
    return CheckReport(identity_id, dict(params), lhs, rhs,
                       abs_res, rel_res, oracle, passed, diagnostics)


def failed_report(identity_id: str, params: dict, oracle: str,
                  diagnostics: str) -> CheckReport:
    """Error-path report: the check could not produce a numeric comparison."""
    nan = complex(float("nan"), 0.0)
    return CheckReport(identity_id, dict(params), nan, nan,
                       float("inf"), float("inf"), oracle, False, diagnostics)


@dataclass
class IdentityAggregate:
    identity_id: str
    n_checked: int = 0
    n_passed: int = 0
    max_residual: float = 0.0
    residuals: list = field(default_factory=list)

    def add(self, report: CheckReport) -> None:
        self.n_checked += 1
        if report.passed:
            self.n_passed += 1
        res = report.abs_residual if report.near_zero_rhs else report.rel_residual
        self.residuals.append(res)
        self.max_residual = max(self.max_residual, res)

    @property
    def median_residual(self) -> float:
        if not self.residuals:
            return 0.0
        ordered = sorted(self.residuals)
        mid = len(ordered) // 2
        if len(ordered) % 2 == 1:
            return ordered[mid]
        return 0.5 * (ordered[mid - 1] + ordered[mid])

    @property
    def all_passed(self) -> bool:
        return self.n_passed == self.n_checked
