"""Extended summation theorems: series builders and gamma closed forms.

Seven two-term closed forms for 3F2(1/2), 3F2(-1) and 4F3(1) carrying an
extra numerator parameter d+1 over a denominator parameter d.  Each right
hand side is a prefactor times a brace of two gamma-ratio terms, some with
rational coefficients alpha and beta; every one reduces to a classical
summation theorem at a distinguished value of d.

The closed forms are transcribed term by term; rhs_closed_form evaluates
them, validity() screens parameter bindings against the stated conditions,
degenerate exclusions, pole proximity and series convergence, and check()
compares a closed form against the direct series oracle.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .errors import DegenerateParameterError, InvalidBinding, ValidityError
from .gammafn import POLE_TOL, gamma_ratio, GammaRatioSpec, is_nonpositive_integer
from .reporting import CheckReport, failed_report, make_report
from .series import HyperSeriesSpec, classify, eval_series

__all__ = [
    "ClosedFormBreakdown",
    "DixonVariant",
    "REQUIRED_SYMBOLS",
    "SummationId",
    "check",
    "lhs_spec",
    "rhs_closed_form",
    "rhs_gamma_arguments",
    "validity",
]

# exact-degeneracy detection; sampler margins are much wider
_DEGENERATE_TOL = 1e-12


class SummationId(str, enum.Enum):
    GAUSS2X = "gauss2x"
    BAILEYX = "baileyx"
    KUMMERX = "kummerx"
    WATSON1X = "watson1x"
    WATSON2X = "watson2x"
    DIXONX = "dixonx"
    WHIPPLEX = "whipplex"


class DixonVariant(str, enum.Enum):
    """The two printed readings of the second-term denominator in the
    dixonx closed form; they differ in a single gamma factor.

    HALF_A_MINUS_B carries Gamma(1 + a/2 - b) Gamma(1 + a/2 - c);
    HALF_A_MINUS_C_TWICE carries Gamma(1 + a/2 - c) twice.  Which one is
    consistent is settled numerically by verifier.resolve_dixon_variant.
    """

    HALF_A_MINUS_B = "half_a_minus_b"
    HALF_A_MINUS_C_TWICE = "half_a_minus_c_twice"


REQUIRED_SYMBOLS: dict[SummationId, tuple[str, ...]] = {
    SummationId.GAUSS2X: ("a", "b", "d"),
    SummationId.BAILEYX: ("a", "c", "d"),
    SummationId.KUMMERX: ("a", "b", "d"),
    SummationId.WATSON1X: ("a", "b", "c", "d"),
    SummationId.WATSON2X: ("a", "b", "c", "d"),
    SummationId.DIXONX: ("a", "b", "c", "d"),
    SummationId.WHIPPLEX: ("a", "c", "d", "e"),
}


@dataclass(frozen=True)
class ClosedFormBreakdown:
    """prefactor * (term1 + term2), with the rational alpha/beta exposed
    for the two identities that use them (0 elsewhere)."""

    prefactor: complex
    term1: complex
    term2: complex
    alpha: complex
    beta: complex
    value: complex


def _binding(id: SummationId, params: dict) -> dict[str, complex]:
    want = set(REQUIRED_SYMBOLS[id])
    got = set(params)
    if got != want:
        raise InvalidBinding(
            f"{id.value} needs exactly symbols {sorted(want)}, got {sorted(got)}"
        )
    return {k: complex(v) for k, v in params.items()}


def lhs_spec(id: SummationId, params: dict) -> HyperSeriesSpec:
    """The exact series whose sum the closed form claims."""
    p = _binding(id, params)
    a = p.get("a")
    b = p.get("b")
    c = p.get("c")
    d = p.get("d")
    e = p.get("e")
    if id is SummationId.GAUSS2X:
        return HyperSeriesSpec([a, b, d + 1], [(a + b + 3) / 2, d], 0.5)
    if id is SummationId.BAILEYX:
        return HyperSeriesSpec([a, 1 - a, d + 1], [c + 1, d], 0.5)
    if id is SummationId.KUMMERX:
        return HyperSeriesSpec([a, b, d + 1], [2 + a - b, d], -1.0)
    if id is SummationId.WATSON1X:
        return HyperSeriesSpec([a, b, c, d + 1], [(a + b + 1) / 2, 2 * c + 1, d], 1.0)
    if id is SummationId.WATSON2X:
        return HyperSeriesSpec([a, b, c, d + 1], [(a + b + 3) / 2, 2 * c, d], 1.0)
    if id is SummationId.DIXONX:
        return HyperSeriesSpec([a, b, c, d + 1], [2 + a - b, 1 + a - c, d], 1.0)
    if id is SummationId.WHIPPLEX:
        return HyperSeriesSpec([a, 1 - a, c, d + 1], [e + 1, 2 * c - e + 1, d], 1.0)
    raise InvalidBinding(f"unknown identity {id}")


class _Gammas:
    """Gamma-ratio evaluator that records every argument it is handed.

    ``collect_only`` skips evaluation so validity() can screen arguments
    for pole proximity without tripping PoleError first.
    """

    def __init__(self, collect_only: bool = False):
        self.collect_only = collect_only
        self.numerator_args: list[complex] = []
        self.denominator_args: list[complex] = []

    def ratio(self, num, den) -> complex:
        self.numerator_args.extend(complex(x) for x in num)
        self.denominator_args.extend(complex(x) for x in den)
        if self.collect_only:
            return complex(1.0)
        return gamma_ratio(GammaRatioSpec(num, den))


def _cpow(base: complex, expo: complex) -> complex:
    """Principal-branch power for the 2^x prefactors."""
    return cmath.exp(complex(expo) * cmath.log(complex(base)))


def _degeneracy_reason(id: SummationId, p: dict[str, complex]) -> str | None:
    if id is SummationId.KUMMERX and abs(p["b"] - 1.0) <= _DEGENERATE_TOL:
        return "degenerate b=1"
    if id is SummationId.DIXONX:
        if abs(p["b"] - 1.0) <= _DEGENERATE_TOL:
            return "degenerate b=1"
        if abs(1 + p["a"] - p["b"] - p["c"]) <= _DEGENERATE_TOL:
            return "degenerate 1+a-b-c=0"
    if id is SummationId.WATSON2X:
        if abs(p["a"] - p["b"] - 1.0) <= _DEGENERATE_TOL:
            return "degenerate a-b=1"
        if abs(p["a"] - p["b"] + 1.0) <= _DEGENERATE_TOL:
            return "degenerate a-b=-1"
    return None


def _condition_reason(id: SummationId, p: dict[str, complex]) -> str | None:
    """First violated stated condition, or None."""
    if p["d"].real <= 0.0:
        return "Re(d)<=0"
    if id in (SummationId.WATSON1X, SummationId.WATSON2X):
        if (2 * p["c"] - p["a"] - p["b"]).real <= -1.0:
            return "Re(2c-a-b)<=-1"
    if id is SummationId.DIXONX:
        if (p["a"] - 2 * p["b"] - 2 * p["c"]).real <= -2.0:
            return "Re(a-2b-2c)<=-2"
    if id is SummationId.WHIPPLEX:
        if p["c"].real <= 0.0:
            return "Re(c)<=0"
    return None


def _build(id: SummationId, p: dict[str, complex], gr: _Gammas,
           dixon_variant: DixonVariant) -> tuple[complex, complex, complex, complex, complex]:
    """prefactor, term1, term2, alpha, beta for the requested identity."""
    a = p.get("a")
    b = p.get("b")
    c = p.get("c")
    d = p.get("d")
    e = p.get("e")
    zero = complex(0.0)

    if id is SummationId.GAUSS2X:
        pre = gr.ratio([0.5, (a + b + 3) / 2, (a - b - 1) / 2], [(a - b + 3) / 2])
        t1 = ((a + b - 1) / 2 - a * b / d) * gr.ratio([], [(a + 1) / 2, (b + 1) / 2])
        t2 = ((a + b + 1) / d - 2) * gr.ratio([], [a / 2, b / 2])
        return pre, t1, t2, zero, zero

    if id is SummationId.BAILEYX:
        pre = _cpow(2.0, -c) * gr.ratio([0.5, c + 1], [])
        t1 = (2 / d) * gr.ratio([], [(a + c) / 2, (c - a + 1) / 2])
        t2 = (1 - c / d) * gr.ratio([], [(a + c + 1) / 2, (c - a) / 2 + 1])
        return pre, t1, t2, zero, zero

    if id is SummationId.KUMMERX:
        pre = gr.ratio([0.5, 2 + a - b], []) / (_cpow(2.0, a) * (1 - b))
        t1 = ((1 + a - b) / d - 1) * gr.ratio([], [a / 2, a / 2 - b + 1.5])
        t2 = (1 - a / d) * gr.ratio([], [(a + 1) / 2, 1 + a / 2 - b])
        return pre, t1, t2, zero, zero

    if id is SummationId.WATSON1X:
        pre = _cpow(2.0, a + b - 2) * gr.ratio(
            [c + 0.5, (a + b + 1) / 2, c - (a + b - 1) / 2], [0.5, a, b])
        t1 = gr.ratio([a / 2, b / 2], [c - (a - 1) / 2, c - (b - 1) / 2])
        t2 = ((2 * c - d) / d) * gr.ratio(
            [(a + 1) / 2, (b + 1) / 2], [c - a / 2 + 1, c - b / 2 + 1])
        return pre, t1, t2, zero, zero

    if id is SummationId.WATSON2X:
        alpha = (a * (2 * c - a) + b * (2 * c - b) - 2 * c + 1
                 - (a * b / d) * (4 * c - a - b - 1))
        beta = 8 * ((a + b + 1) / (2 * d) - 1)
        pre = _cpow(2.0, a + b - 2) * gr.ratio(
            [c + 0.5, (a + b + 3) / 2, c - (a + b + 1) / 2], [0.5, a, b]) \
            / ((a - b - 1) * (a - b + 1))
        t1 = alpha * gr.ratio([a / 2, b / 2], [c - (a - 1) / 2, c - (b - 1) / 2])
        t2 = beta * gr.ratio([(a + 1) / 2, (b + 1) / 2], [c - a / 2, c - b / 2])
        return pre, t1, t2, alpha, beta

    if id is SummationId.DIXONX:
        alpha = 1 - (1 + a - b) / d
        beta = ((1 + a - b) / (1 + a - b - c)
                * ((a / d) * (1 + a - b - 2 * c) - 2 * (1 + a / 2 - b - c)))
        pre = _cpow(2.0, -a) * gr.ratio([0.5], []) / (b - 1)
        t1 = alpha * gr.ratio(
            [2 + a - b, 1 + a - c, a / 2 - b - c + 1.5],
            [a / 2, 2 + a - b - c, a / 2 - c + 0.5, a / 2 - b + 1.5])
        second = (1 + a / 2 - b if dixon_variant is DixonVariant.HALF_A_MINUS_B
                  else 1 + a / 2 - c)
        t2 = (beta / 2) * gr.ratio(
            [1 + a - b, 1 + a - c, 1 + a / 2 - b - c],
            [(a + 1) / 2, 1 + a - b - c, second, 1 + a / 2 - c])
        return pre, t1, t2, alpha, beta

    if id is SummationId.WHIPPLEX:
        pre = _cpow(2.0, -2 * a) * gr.ratio(
            [e + 1, e - c, 2 * c - e + 1], [e - a + 1, e - c + 1, 2 * c - a - e + 1])
        t1 = (1 - (2 * c - e) / d) * gr.ratio(
            [(e - a) / 2 + 1, c - (a + e) / 2 + 0.5],
            [(a + e) / 2, c - (e - a) / 2 + 0.5])
        t2 = (e / d - 1) * gr.ratio(
            [(e - a + 1) / 2, c - (a + e) / 2 + 1],
            [(a + e + 1) / 2, c + (a - e) / 2])
        return pre, t1, t2, zero, zero

    raise InvalidBinding(f"unknown identity {id}")


def rhs_closed_form(id: SummationId, params: dict,
                    dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
                    ) -> ClosedFormBreakdown:
    """Evaluate the printed closed form.

    Raises DegenerateParameterError at the explicit exclusions,
    ValidityError when a stated condition fails, PoleError when a
    numerator gamma argument sits on a pole.  Degenerate parameters never
    get silent limits: the printed expression is evaluated as printed.
    """
    p = _binding(id, params)
    reason = _degeneracy_reason(id, p)
    if reason is not None:
        raise DegenerateParameterError(reason)
    reason = _condition_reason(id, p)
    if reason is not None:
        raise ValidityError(reason)
    gr = _Gammas()
    pre, t1, t2, alpha, beta = _build(id, p, gr, dixon_variant)
    return ClosedFormBreakdown(pre, t1, t2, alpha, beta, pre * (t1 + t2))


def rhs_gamma_arguments(id: SummationId, params: dict,
                        dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
                        ) -> tuple[list[complex], list[complex]]:
    """All gamma arguments of the closed form (numerator, denominator)."""
    p = _binding(id, params)
    gr = _Gammas(collect_only=True)
    _build(id, p, gr, dixon_variant)
    return gr.numerator_args, gr.denominator_args


def _pole_proximity_reason(num_args, den_args, margin: float) -> str | None:
    for z in num_args:
        n = min(round(z.real), 0)
        if abs(z - n) <= margin:
            return f"numerator gamma argument {z:.6g} within {margin:g} of pole"
    for z in den_args:
        if is_nonpositive_integer(z, POLE_TOL):
            continue  # exact denominator pole means an exact zero: well defined
        n = min(round(z.real), 0)
        if abs(z - n) <= margin:
            return f"denominator gamma argument {z:.6g} within {margin:g} of pole"
    return None


def validity(id: SummationId, params: dict, margin: float = 1e-3,
             dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
             ) -> tuple[bool, str]:
    """Stated conditions + degenerate exclusions + pole margins + series
    convergence, reported as (ok, machine-readable reason)."""
    try:
        p = _binding(id, params)
    except InvalidBinding as exc:
        return False, str(exc)
    reason = _degeneracy_reason(id, p)
    if reason is not None:
        return False, reason
    # widen the degenerate exclusions to the sampling margin
    if id in (SummationId.KUMMERX, SummationId.DIXONX) and abs(p["b"] - 1.0) <= margin:
        return False, "degenerate b=1 (margin)"
    if id is SummationId.DIXONX and abs(1 + p["a"] - p["b"] - p["c"]) <= margin:
        return False, "degenerate 1+a-b-c=0 (margin)"
    if id is SummationId.WATSON2X and (
            abs(p["a"] - p["b"] - 1.0) <= margin or abs(p["a"] - p["b"] + 1.0) <= margin):
        return False, "degenerate a-b=+-1 (margin)"
    reason = _condition_reason(id, p)
    if reason is not None:
        return False, reason
    spec = lhs_spec(id, params)
    cls = classify(spec)
    if not cls.summable:
        return False, "series divergent"
    num_args, den_args = rhs_gamma_arguments(id, params, dixon_variant)
    reason = _pole_proximity_reason(num_args, den_args, margin)
    if reason is not None:
        return False, reason
    return True, "ok"


def check(id: SummationId, params: dict, tol: float,
          series_tol: float | None = None,
          dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
          ) -> CheckReport:
    """Series oracle vs closed form at one parameter point.

    Errors never propagate: they come back as a failed report.
    """
    if series_tol is None:
        series_tol = max(tol * 1e-2, 1e-13)
    try:
        spec = lhs_spec(id, params)
        lhs = eval_series(spec, tol=series_tol)
        rhs = rhs_closed_form(id, params, dixon_variant)
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        return failed_report(f"sum.{id.value}", params, "series",
                             f"{type(exc).__name__}: {exc}")
    diag = "" if lhs.converged else "series not converged"
    return make_report(f"sum.{id.value}", params, lhs.value, rhs.value,
                       "series", tol, diag)
