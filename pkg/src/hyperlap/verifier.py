"""Parameter sampling under validity constraints, residual computation and
suite orchestration over the full identity catalog.

Twenty identities are certified: the seven extended summation theorems
(sum.*), six classical Laplace transforms and seven new Laplace
transforms (lap.*).  Each is hit with up to four independent oracles:

* series       -- closed form against direct/accelerated summation,
* quadrature   -- closed form against adaptive numerical integration,
* compositional-- compositional route against the verbatim transcription,
* specialization -- extended transform at the distinguished d against the
                  classical entry it must collapse to.

Samples are drawn sequentially from per-(identity, oracle) child seeds, so
results are reproducible bit for bit regardless of how checks might be
scheduled.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from . import laplace, summation
from .errors import SamplerExhausted, SlowDecayError
from .laplace import (CLASSICAL_IDS, LaplaceCase, LaplaceId, NEW_IDS,
                      REQUIRED_LAPLACE_SYMBOLS, SUMMATION_OF, W_FACTOR,
                      case_gamma_arguments, closed_form, closed_form_direct,
                      lhs_integrand, specialization_target, transform_rhs_series)
from .quadrature import laplace_numeric
from .reporting import CheckReport, IdentityAggregate, failed_report, make_report
from .series import eval_series
from .summation import (DixonVariant, REQUIRED_SYMBOLS, SummationId, lhs_spec,
                        rhs_closed_form)

__all__ = [
    "ALL_IDENTITY_IDS",
    "DEFAULT_TOLERANCES",
    "SamplerConfig",
    "SuiteResult",
    "parse_identity",
    "resolve_dixon_variant",
    "run_suite",
    "sample_valid",
]

SUM_PREFIX = "sum."
LAP_PREFIX = "lap."

ALL_IDENTITY_IDS: tuple[str, ...] = tuple(
    [SUM_PREFIX + sid.value for sid in SummationId]
    + [LAP_PREFIX + lid.value for lid in CLASSICAL_IDS]
    + [LAP_PREFIX + lid.value for lid in NEW_IDS]
)

DEFAULT_TOLERANCES: dict[str, float] = {
    "series": 1e-9,        # arguments 1/2 and -1
    "series_unit": 1e-6,   # unit-argument series
    "quadrature": 1e-5,
    "specialization": 1e-10,
    "compositional": 1e-13,
}

# series excess margins: keep draws clear of the convergence boundary so
# the oracles stay fast and well conditioned
_UNIT_EXCESS_MARGIN = 0.05
_ALT_EXCESS_MARGIN = -0.95
_POWER_MARGIN = 0.05  # Re of the t-power exponent

_DEFAULT_RANGES: dict[str, tuple[float, float]] = {
    "a": (0.3, 3.0), "b": (0.3, 3.0), "c": (0.3, 3.0),
    "e": (0.3, 3.0), "d": (0.3, 4.0), "s": (0.5, 4.0),
}


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 42
    ranges: dict = field(default_factory=lambda: dict(_DEFAULT_RANGES))
    pole_margin: float = 1e-3
    max_rejects: int = 10000
    # imaginary perturbation amplitude for the complex robustness mode
    complex_im: float = 0.0


def parse_identity(identity_id: str) -> tuple[str, object]:
    """'sum.kummerx' -> ('sum', SummationId.KUMMERX); same for 'lap.*'.

    Only checkable catalog entries are accepted: the bare transform-law
    ids (general, lap_*) name a rule, not an identity with a closed form.
    """
    try:
        if identity_id.startswith(SUM_PREFIX):
            return "sum", SummationId(identity_id[len(SUM_PREFIX):])
        if identity_id.startswith(LAP_PREFIX):
            lid = LaplaceId(identity_id[len(LAP_PREFIX):])
            if lid not in REQUIRED_LAPLACE_SYMBOLS:
                raise ValueError(
                    f"{identity_id} names the transform law, not a checkable identity")
            return "lap", lid
    except ValueError as exc:
        raise ValueError(f"unknown identity id {identity_id!r}: {exc}") from None
    raise ValueError(f"unknown identity id {identity_id!r} "
                     f"(expected sum.<name> or lap.<name>)")


def _child_rng(cfg: SamplerConfig, label: str) -> np.random.Generator:
    digest = hashlib.sha256(f"{cfg.seed}:{label}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "little"))


def _draw_symbol(rng: np.random.Generator, cfg: SamplerConfig, sym: str) -> complex:
    lo, hi = cfg.ranges[sym]
    val = complex(rng.uniform(lo, hi))
    if cfg.complex_im > 0.0 and sym != "s":
        val += 1j * rng.uniform(-cfg.complex_im, cfg.complex_im)
    return val


def _pole_margin_ok(num_args, den_args, margin: float) -> bool:
    return summation._pole_proximity_reason(num_args, den_args, margin) is None


def _summation_candidate(rng, cfg, sid: SummationId) -> dict:
    return {sym: _draw_symbol(rng, cfg, sym) for sym in REQUIRED_SYMBOLS[sid]}


def _summation_ok(sid: SummationId, binding: dict, cfg: SamplerConfig) -> bool:
    ok, _why = summation.validity(sid, binding, margin=cfg.pole_margin)
    if not ok:
        return False
    spec = lhs_spec(sid, binding)
    z = spec.argument
    excess = spec.excess().real
    if abs(z - 1.0) <= 1e-14 and excess < _UNIT_EXCESS_MARGIN:
        return False
    if abs(z + 1.0) <= 1e-14 and excess < _ALT_EXCESS_MARGIN:
        return False
    return True


def _laplace_candidate(rng, cfg, lid: LaplaceId) -> tuple[dict, complex]:
    params = {}
    for sym in REQUIRED_LAPLACE_SYMBOLS[lid]:
        params[sym] = _draw_symbol(rng, cfg, sym)
    if lid is LaplaceId.WHIPPLE_L:
        # hard linear constraints hold by construction
        params["b"] = 1 - params["a"]
        params["d"] = 1 + 2 * params["c"] - params["e"]
    s = complex(rng.uniform(*cfg.ranges["s"]))
    return params, s


def _laplace_ok(lid: LaplaceId, params: dict, s: complex, cfg: SamplerConfig) -> bool:
    try:
        case = LaplaceCase(lid, params, s)
        laplace._check_case_validity(case)
    except Exception:
        return False
    if case.power.real < _POWER_MARGIN:
        return False
    if lid in SUMMATION_OF:
        ok, _why = summation.validity(SUMMATION_OF[lid], params, margin=cfg.pole_margin)
        if not ok:
            return False
    integ = lhs_integrand(case)
    # the transform's series route adds the power as a numerator parameter
    excess = (integ.spec.excess() - case.power).real
    wf = W_FACTOR[lid]
    if wf == 1.0 and excess < _UNIT_EXCESS_MARGIN:
        return False
    if wf == -1.0 and excess < _ALT_EXCESS_MARGIN:
        return False
    num_args, den_args = case_gamma_arguments(case)
    return _pole_margin_ok(num_args, den_args, cfg.pole_margin)


def sample_valid(identity_id: str, cfg: SamplerConfig, n: int,
                 label_suffix: str = "") -> list[dict]:
    """n parameter bindings passing every validity screen, rejection-sampled
    deterministically from the per-identity child stream.

    Laplace bindings carry the drawn s under the key "s"."""
    kind, ident = parse_identity(identity_id)
    rng = _child_rng(cfg, identity_id + label_suffix)
    out: list[dict] = []
    rejects = 0
    while len(out) < n:
        if rejects > cfg.max_rejects:
            raise SamplerExhausted(
                f"{identity_id}: {rejects} rejects for {len(out)}/{n} draws")
        if kind == "sum":
            binding = _summation_candidate(rng, cfg, ident)
            if _summation_ok(ident, binding, cfg):
                out.append(binding)
            else:
                rejects += 1
        else:
            params, s = _laplace_candidate(rng, cfg, ident)
            if _laplace_ok(ident, params, s, cfg):
                params = dict(params)
                params["s"] = s
                out.append(params)
            else:
                rejects += 1
    return out


def _split_laplace_binding(binding: dict) -> tuple[dict, complex]:
    params = {k: v for k, v in binding.items() if k != "s"}
    return params, binding["s"]


def _series_tolerance_key(identity_id: str) -> str:
    kind, ident = parse_identity(identity_id)
    if kind == "sum":
        z = {SummationId.GAUSS2X: 0.5, SummationId.BAILEYX: 0.5,
             SummationId.KUMMERX: -1.0}.get(ident, 1.0)
    else:
        z = W_FACTOR[ident]
    return "series_unit" if z == 1.0 else "series"


def check_series(identity_id: str, binding: dict, tol: float,
                 dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
                 ) -> CheckReport:
    """Closed form against the series oracle."""
    kind, ident = parse_identity(identity_id)
    if kind == "sum":
        return summation.check(ident, binding, tol, dixon_variant=dixon_variant)
    params, s = _split_laplace_binding(binding)
    try:
        case = LaplaceCase(ident, params, s)
        integ = lhs_integrand(case)
        series_tol = max(tol * 1e-2, 1e-13)
        lhs = transform_rhs_series(integ.power, case.s, integ.w, integ.spec,
                                   tol=series_tol)
        rhs = closed_form(case, dixon_variant)
    except Exception as exc:  # noqa: BLE001
        return failed_report(identity_id, binding, "series",
                             f"{type(exc).__name__}: {exc}")
    return make_report(identity_id, binding, lhs, rhs.value, "series", tol)


def check_quadrature(identity_id: str, binding: dict, tol: float,
                     oracle_tol: float = 1e-7,
                     dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
                     ) -> CheckReport:
    """Closed form against the numerical-integration oracle (Laplace only)."""
    kind, ident = parse_identity(identity_id)
    if kind != "lap":
        return failed_report(identity_id, binding, "quadrature",
                             "quadrature oracle applies to Laplace identities")
    params, s = _split_laplace_binding(binding)
    try:
        case = LaplaceCase(ident, params, s)
        integ = lhs_integrand(case)
        lhs = laplace_numeric(integ.power, case.s, integ.w, integ.spec,
                              tol=oracle_tol)
        rhs = closed_form(case, dixon_variant)
    except SlowDecayError as exc:
        return failed_report(identity_id, binding, "quadrature",
                             f"SlowDecayError: {exc}")
    except Exception as exc:  # noqa: BLE001
        return failed_report(identity_id, binding, "quadrature",
                             f"{type(exc).__name__}: {exc}")
    return make_report(identity_id, binding, lhs.value, rhs.value, "quadrature",
                       tol, diagnostics=f"nodes={lhs.nodes_used}")


def check_compositional(identity_id: str, binding: dict, tol: float,
                        dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
                        ) -> CheckReport:
    """Verbatim transcription against the compositional route (new ids)."""
    kind, ident = parse_identity(identity_id)
    if kind != "lap" or ident not in SUMMATION_OF:
        return failed_report(identity_id, binding, "compositional",
                             "compositional check applies to the new transforms")
    params, s = _split_laplace_binding(binding)
    try:
        case = LaplaceCase(ident, params, s)
        direct = closed_form_direct(case, dixon_variant)
        composed = closed_form(case, dixon_variant)
    except Exception as exc:  # noqa: BLE001
        return failed_report(identity_id, binding, "compositional",
                             f"{type(exc).__name__}: {exc}")
    return make_report(identity_id, binding, direct.value, composed.value,
                       "compositional", tol)


def check_specialization(identity_id: str, binding: dict, tol: float) -> CheckReport:
    """Extended transform at its distinguished d against the classical entry."""
    kind, ident = parse_identity(identity_id)
    if kind != "lap" or ident not in SUMMATION_OF:
        return failed_report(identity_id, binding, "specialization",
                             "specialization applies to the new transforms")
    params, s = _split_laplace_binding(binding)
    rule = specialization_target(ident)
    try:
        params = dict(params)
        params["d"] = rule.d_value(params)
        reduced = closed_form(LaplaceCase(ident, params, s))
        classical = closed_form(LaplaceCase(rule.classical_id,
                                            rule.classical_params(params), s))
    except Exception as exc:  # noqa: BLE001
        return failed_report(identity_id, binding, "specialization",
                             f"{type(exc).__name__}: {exc}")
    return make_report(identity_id, {**params, "s": s}, reduced.value,
                       classical.value, "specialization", tol)


def _specialized_ok(lid: LaplaceId, binding: dict, cfg: SamplerConfig) -> bool:
    """A draw usable for the specialization check: valid for the extended
    entry at the substituted d AND for the classical target."""
    rule = specialization_target(lid)
    params, s = _split_laplace_binding(binding)
    params = dict(params)
    params["d"] = rule.d_value(params)
    if params["d"].real < _POWER_MARGIN:
        return False
    try:
        ext_case = LaplaceCase(lid, params, s)
        laplace._check_case_validity(ext_case)
        cl_case = LaplaceCase(rule.classical_id, rule.classical_params(params), s)
        laplace._check_case_validity(cl_case)
    except Exception:
        return False
    for case in (ext_case, cl_case):
        num_args, den_args = case_gamma_arguments(case)
        if not _pole_margin_ok(num_args, den_args, cfg.pole_margin):
            return False
    return True


def sample_for_specialization(identity_id: str, cfg: SamplerConfig,
                              n: int) -> list[dict]:
    kind, ident = parse_identity(identity_id)
    rng = _child_rng(cfg, identity_id + ":specialization")
    out: list[dict] = []
    rejects = 0
    while len(out) < n:
        if rejects > cfg.max_rejects:
            raise SamplerExhausted(f"{identity_id}: specialization sampling exhausted")
        params, s = _laplace_candidate(rng, cfg, ident)
        binding = dict(params)
        binding["s"] = s
        if _laplace_ok(ident, params, s, cfg) and _specialized_ok(ident, binding, cfg):
            out.append(binding)
        else:
            rejects += 1
    return out


def resolve_dixon_variant(cfg: SamplerConfig, n: int = 50,
                          ) -> tuple[str, list[dict]]:
    """Decide which printed reading of the dixonx second-term denominator
    agrees with the series oracle.

    Draws are restricted to bindings where the two candidate closed forms
    differ by at least 1% -- draws where they nearly coincide carry no
    discriminating power.  Verdict: the variant whose max residual stays
    under 1e-8 while the other variant's residual exceeds 1e-3 on every
    draw; anything else is inconclusive.
    """
    if n < 20:
        raise ValueError("variant resolution needs n >= 20 draws")
    sid = SummationId.DIXONX
    rng = _child_rng(cfg, "sum.dixonx:variant")
    evidence: list[dict] = []
    rejects = 0
    while len(evidence) < n:
        if rejects > cfg.max_rejects:
            raise SamplerExhausted("dixon variant sampling exhausted")
        binding = _summation_candidate(rng, cfg, sid)
        if not _summation_ok(sid, binding, cfg):
            rejects += 1
            continue
        try:
            rhs_b = rhs_closed_form(sid, binding, DixonVariant.HALF_A_MINUS_B).value
            rhs_c2 = rhs_closed_form(sid, binding, DixonVariant.HALF_A_MINUS_C_TWICE).value
        except Exception:
            rejects += 1
            continue
        if abs(rhs_b - rhs_c2) < 1e-2 * max(abs(rhs_b), abs(rhs_c2)):
            rejects += 1
            continue
        lhs = eval_series(lhs_spec(sid, binding), tol=1e-11)
        res_b = float(abs(lhs.value - rhs_b) / max(abs(rhs_b), 1e-300))
        res_c2 = float(abs(lhs.value - rhs_c2) / max(abs(rhs_c2), 1e-300))
        row = {k: v for k, v in binding.items()}
        row["residual_half_a_minus_b"] = res_b
        row["residual_half_a_minus_c_twice"] = res_c2
        evidence.append(row)
    max_b = max(r["residual_half_a_minus_b"] for r in evidence)
    min_b = min(r["residual_half_a_minus_b"] for r in evidence)
    max_c2 = max(r["residual_half_a_minus_c_twice"] for r in evidence)
    min_c2 = min(r["residual_half_a_minus_c_twice"] for r in evidence)
    if max_b < 1e-8 and min_c2 > 1e-3:
        verdict = DixonVariant.HALF_A_MINUS_B.value
    elif max_c2 < 1e-8 and min_b > 1e-3:
        verdict = DixonVariant.HALF_A_MINUS_C_TWICE.value
    else:
        verdict = "inconclusive"
    return verdict, evidence


@dataclass
class SuiteResult:
    per_identity: dict
    environment: dict
    dixon_variant_verdict: str
    dixon_evidence: list
    sampler_failures: dict
    reports: list

    @property
    def overall_pass(self) -> bool:
        if self.sampler_failures:
            return False
        return all(agg["n_passed"] == agg["n_checked"]
                   for agg in self.per_identity.values())

    def to_dict(self) -> dict:
        return {
            "schema_version": "1",
            "environment": self.environment,
            "per_identity": self.per_identity,
            "dixon_variant_verdict": self.dixon_variant_verdict,
            "dixon_evidence": [_evidence_to_dict(row) for row in self.dixon_evidence],
            "sampler_failures": self.sampler_failures,
            "overall_pass": self.overall_pass,
            "reports": [_report_to_dict(r) for r in self.reports],
        }


def _evidence_to_dict(row: dict) -> dict:
    out = {}
    for key in sorted(row):
        val = row[key]
        if isinstance(val, complex):
            out[key] = {"re": val.real, "im": val.imag}
        else:
            out[key] = val
    return out


def _report_to_dict(r: CheckReport) -> dict:
    out = {"identity_id": r.identity_id}
    params = {}
    for key in sorted(r.params):
        val = complex(r.params[key])
        params[key] = {"re": val.real, "im": val.imag}
    out["params"] = params
    out.update({
        "lhs_re": r.lhs.real, "lhs_im": r.lhs.imag,
        "rhs_re": r.rhs.real, "rhs_im": r.rhs.imag,
        "abs_residual": r.abs_residual, "rel_residual": r.rel_residual,
        "oracle": r.oracle, "pass": r.passed, "diagnostics": r.diagnostics,
    })
    return out


_QUADRATURE_CAP = 25
_COMPOSITIONAL_CAP = 100


def run_suite(ids: list[str] | None = None,
              cfg: SamplerConfig | None = None,
              n_per_id: int = 200,
              tolerances: dict | None = None,
              resolve_variant: bool | None = None,
              dixon_variant: DixonVariant = DixonVariant.HALF_A_MINUS_B,
              keep_reports: bool = True) -> SuiteResult:
    """Run every oracle over every requested identity.

    Deterministic for fixed (cfg, ids, n_per_id): sampling uses dedicated
    child streams per identity and oracle, so the subsets consumed by the
    capped oracles never shift the others.
    """
    ids = list(ids) if ids is not None else list(ALL_IDENTITY_IDS)
    cfg = cfg or SamplerConfig()
    tols = dict(DEFAULT_TOLERANCES)
    if tolerances:
        tols.update(tolerances)

    per_identity: dict = {}
    sampler_failures: dict = {}
    all_reports: list[CheckReport] = []

    for identity_id in ids:
        kind, ident = parse_identity(identity_id)
        agg = IdentityAggregate(identity_id)
        reports: list[CheckReport] = []
        series_tol = tols[_series_tolerance_key(identity_id)]
        try:
            bindings = sample_valid(identity_id, cfg, n_per_id)
        except SamplerExhausted as exc:
            sampler_failures[identity_id] = str(exc)
            bindings = []
        for binding in bindings:
            reports.append(check_series(identity_id, binding, series_tol,
                                        dixon_variant))
        if kind == "lap":
            for binding in bindings[:min(_QUADRATURE_CAP, len(bindings))]:
                reports.append(check_quadrature(identity_id, binding,
                                                tols["quadrature"],
                                                dixon_variant=dixon_variant))
            if ident in SUMMATION_OF:
                for binding in bindings[:min(_COMPOSITIONAL_CAP, len(bindings))]:
                    reports.append(check_compositional(identity_id, binding,
                                                       tols["compositional"],
                                                       dixon_variant))
                try:
                    spec_bindings = sample_for_specialization(identity_id, cfg,
                                                              n_per_id)
                except SamplerExhausted as exc:
                    sampler_failures[identity_id + ":specialization"] = str(exc)
                    spec_bindings = []
                for binding in spec_bindings:
                    reports.append(check_specialization(identity_id, binding,
                                                        tols["specialization"]))
        for rep in reports:
            agg.add(rep)
        per_identity[identity_id] = {
            "n_checked": agg.n_checked,
            "n_passed": agg.n_passed,
            "max_residual": agg.max_residual,
            "median_residual": agg.median_residual,
        }
        all_reports.extend(reports)

    if resolve_variant is None:
        resolve_variant = "sum.dixonx" in ids
    if resolve_variant and n_per_id > 0:
        verdict, evidence = resolve_dixon_variant(cfg, n=max(20, min(50, n_per_id)))
    else:
        verdict, evidence = "not_run", []

    environment = {
        "seed": cfg.seed,
        "ranges": {k: list(v) for k, v in sorted(cfg.ranges.items())},
        "pole_margin": cfg.pole_margin,
        "complex_im": cfg.complex_im,
        "n_per_id": n_per_id,
        "tolerances": dict(sorted(tols.items())),
        "precision_mode": "float64+double-double",
        "dixon_variant": dixon_variant.value,
    }
    return SuiteResult(per_identity, environment, verdict, evidence,
                       sampler_failures, all_reports if keep_reports else [])
