"""The proof as an ordered list of independently runnable numerical steps.

Each step compares one computed quantity against the value the argument says
it must have and produces a :class:`StepReport`.  Quadrature error estimates
are heuristic (embedded-rule differences); only the series steps produce
guaranteed enclosures.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable

from . import __version__
from .core import G_AT_0, G_AT_1, g_numeric, gprime_closed, log_moment_integral
from .leibniz import DOMINATION_SLACK, check_domination, check_leibniz, endpoint_gaps
from .quadrature import (
    BudgetExhaustedError,
    QuadConfig,
    QuadratureError,
    integrate,
    integrate_with_transform,
    power_transform,
)
from .series import Enclosure, odd_to_full_relation, sum_odd_reciprocal_squares, sum_reciprocal_squares

__all__ = [
    "STEP_IDS",
    "GRIDS",
    "StepReport",
    "ProofReport",
    "UnknownStepError",
    "run_step",
    "run_steps",
    "run_all",
    "serialize_report",
    "parse_report",
]

PI2 = math.pi**2

# Sample grids and sizes used by the steps; echoed into every report.
GRIDS = {
    "leibniz_t": [round(0.1 * k, 1) for k in range(1, 10)],
    "leibniz_h": 1e-5,
    "domination": {"delta": 0.01, "nx": 200, "nt": 200},
    "continuity_0": [10.0**-k for k in range(1, 11)],
    "continuity_1": [1.0 - 10.0**-k for k in range(1, 11)],
    "continuity_tol": 1e-3,
    "interchange_N": 50,
    "moments_n": list(range(21)),
    "series_N": 10**6,
}

# Multiplier on cfg.abs_tol for steps whose integrands are singular at an end.
SINGULAR_TOL_FACTOR = 100.0


class UnknownStepError(KeyError):
    pass


@dataclass
class StepReport:
    step_id: str
    description: str
    computed: float
    expected: float
    abs_err: float
    tol: float
    passed: bool
    converged: bool = True
    n_evals: int = 0
    notes: str = ""

    @classmethod
    def compare(cls, step_id, description, computed, expected, tol, n_evals=0, notes="", converged=True):
        abs_err = abs(computed - expected)
        return cls(step_id, description, computed, expected, abs_err, tol,
                   converged and abs_err <= tol, converged, n_evals, notes)


@dataclass
class ProofReport:
    steps: list[StepReport]
    config_echo: dict = field(default_factory=dict)
    timestamp: str = ""
    version: str = __version__

    @property
    def all_pass(self) -> bool:
        return all(s.passed for s in self.steps)


# --------------------------------------------------------------------------
# Steps.  Each takes the config and returns a StepReport; quadrature failures
# propagate and are turned into failing reports by run_step.


def _step_domination(cfg):
    p = GRIDS["domination"]
    rep = check_domination(p["delta"], p["nx"], p["nt"])
    excess = max(rep.max_violation, 0.0)
    notes = (
        f"max(|df/dt| - 1/(2t)) = {rep.max_violation:.3e} over {len(rep.grid)} points, "
        f"max |df/dt|*2t = {rep.max_ratio:.15f}; integrability/existence checked only as "
        f"finiteness on the grid (all finite: {rep.all_finite})"
    )
    return StepReport.compare(
        "domination", "|df/dt| <= 1/(2t) on the sample grid (positive excess shown)",
        excess, 0.0, DOMINATION_SLACK, notes=notes, converged=rep.all_finite,
    )


def _step_lemma_gprime(cfg):
    tol = SINGULAR_TOL_FACTOR * cfg.abs_tol
    worst = None
    n_evals = 0
    for t in GRIDS["leibniz_t"]:
        chk = check_leibniz(t, GRIDS["leibniz_h"], cfg, tol)
        n_evals += chk.n_evals
        if worst is None or chk.max_pairwise_gap > worst.max_pairwise_gap:
            worst = chk
    notes = (
        f"worst t={worst.t}: FD={worst.fd_value!r}, quad={worst.quad_of_dfdt!r}, "
        f"closed={worst.closed_form!r}"
    )
    return StepReport.compare(
        "lemma-gprime", "max pairwise gap of FD(g), int df/dt dx, closed-form g' over t grid",
        worst.max_pairwise_gap, 0.0, tol, n_evals, notes,
    )


def _continuity(end, cfg):
    seq = GRIDS[f"continuity_{end}"]
    gaps = endpoint_gaps(end, seq, cfg)
    limit = g_numeric(end, cfg).value
    last = g_numeric(seq[-1], cfg).value
    trend = gaps[-1] == min(gaps)
    notes = f"gaps from t={seq[0]:.3g} to t={seq[-1]!r}: {gaps[0]:.3e} -> {gaps[-1]:.3e}; last gap smallest: {trend}"
    return StepReport.compare(
        f"continuity-{end}", f"g(t_n) -> g({end}) along t_n -> {end}",
        last, limit, max(GRIDS["continuity_tol"], cfg.abs_tol), notes=notes, converged=trend,
    )


def _step_continuity_0(cfg):
    return _continuity(0, cfg)


def _step_continuity_1(cfg):
    return _continuity(1, cfg)


def _step_ftc(cfg):
    rhs = integrate_with_transform(gprime_closed, 0.0, 1.0, power_transform(2), cfg)
    g0 = g_numeric(0.0, cfg)
    g1 = g_numeric(1.0, cfg)
    return StepReport.compare(
        "ftc", "int_0^1 g'(t) dt (t = u^2) vs g(1) - g(0)",
        rhs.value, g1.value - g0.value, SINGULAR_TOL_FACTOR * cfg.abs_tol,
        rhs.n_evals + g0.n_evals + g1.n_evals,
        f"quadrature error estimate {rhs.error_est:.2e} (heuristic)",
    )


def _step_g0(cfg):
    r = g_numeric(0.0, cfg)
    return StepReport.compare("g0", "g(0) = int pi dx", r.value, G_AT_0, cfg.abs_tol, r.n_evals,
                              f"error estimate {r.error_est:.2e} (heuristic)")


def _step_g1(cfg):
    r = g_numeric(1.0, cfg)
    return StepReport.compare("g1", "g(1) = int 2x dx", r.value, G_AT_1, cfg.abs_tol, r.n_evals,
                              f"error estimate {r.error_est:.2e} (heuristic)")


def _step_substitution(cfg):
    lhs = integrate(lambda t: 0.5 * math.log(t) / (math.sqrt(t) * (1.0 - t)), 0.0, 1.0, cfg)
    rhs = integrate(lambda u: 2.0 * math.log(u) / ((1.0 - u) * (1.0 + u)), 0.0, 1.0, cfg)
    return StepReport.compare(
        "substitution", "1/2 int log t/(sqrt(t)(1-t)) dt vs 2 int log u/(1-u^2) du",
        lhs.value, rhs.value, SINGULAR_TOL_FACTOR * cfg.abs_tol, lhs.n_evals + rhs.n_evals,
    )


def _truncated_kernel(n_terms):
    k = 2 * n_terms

    def integrand(u):
        lu = math.log(u)
        # (1 - u^k) / (1 - u^2) without cancellation near u = 1
        return lu * math.expm1(k * lu) / math.expm1(2.0 * lu)

    return integrand


def _step_interchange(cfg):
    N = GRIDS["interchange_N"]
    # Split the tolerance so the summed moment errors and the kernel error stay within abs_tol.
    moment_cfg = cfg.with_tol(cfg.abs_tol / (2 * (N + 1)))
    moments = [log_moment_integral(n, moment_cfg) for n in range(N + 1)]
    kernel = integrate(_truncated_kernel(N + 1), 0.0, 1.0, cfg.with_tol(cfg.abs_tol / 2))
    total = math.fsum(m.value for m in moments)
    return StepReport.compare(
        "interchange", f"sum_(n<={N}) int u^2n log u du vs int log u (1-u^{2 * N + 2})/(1-u^2) du",
        total, kernel.value, cfg.abs_tol, sum(m.n_evals for m in moments) + kernel.n_evals,
    )


def _step_moments(cfg):
    worst_n, worst_val, worst_err = 0, 0.0, -1.0
    n_evals = 0
    for n in GRIDS["moments_n"]:
        r = log_moment_integral(n, cfg)
        n_evals += r.n_evals
        err = abs(r.value + 1.0 / (2 * n + 1) ** 2)
        if err > worst_err:
            worst_n, worst_val, worst_err = n, r.value, err
    return StepReport.compare(
        "moments", "int u^2n log u du = -1/(2n+1)^2, worst n shown",
        worst_val, -1.0 / (2 * worst_n + 1) ** 2, cfg.abs_tol, n_evals,
        f"n = {GRIDS['moments_n'][0]}..{GRIDS['moments_n'][-1]}; worst n = {worst_n}",
    )


def _enclosure_step(step_id, description, enc: Enclosure, target, notes):
    # abs_err <= tol exactly when target lies in the enclosure (up to rounding of the midpoint).
    return StepReport.compare(step_id, description, enc.midpoint, target, 0.5 * enc.width,
                              notes=f"[{enc.lo!r}, {enc.hi!r}]; {notes}")


def _step_series_odd(cfg):
    N = GRIDS["series_N"]
    enc = sum_odd_reciprocal_squares(N)
    return _enclosure_step(
        "series-odd", f"enclosure of sum 1/(2n+1)^2 (N={N}) contains pi^2/8", enc, PI2 / 8,
        "pi^2/8 evaluated from math.pi; containment is the claim under test",
    )


def _step_basel(cfg):
    N = GRIDS["series_N"]
    odd, three_quarters_full = odd_to_full_relation(N)
    overlap = odd.intersect(three_quarters_full)
    enc = overlap.scale(4.0 / 3.0).intersect(sum_reciprocal_squares(N))
    return _enclosure_step(
        "basel", f"4/3 x (odd-series enclosure) meets sum 1/n^2 enclosure (N={N}); contains pi^2/6",
        enc, PI2 / 6, "pi^2/6 evaluated from math.pi; containment is the claim under test",
    )


_REGISTRY: dict[str, tuple[str, Callable[[QuadConfig], StepReport], float]] = {
    # step id: (description used on failure, function, reference value used on failure)
    "domination": ("|df/dt| <= 1/(2t)", _step_domination, 0.0),
    "lemma-gprime": ("three-way g'(t) agreement", _step_lemma_gprime, 0.0),
    "continuity-0": ("g continuous at t=0", _step_continuity_0, G_AT_0),
    "continuity-1": ("g continuous at t=1", _step_continuity_1, G_AT_1),
    "ftc": ("g(1) - g(0) = int g'", _step_ftc, G_AT_1 - G_AT_0),
    "g0": ("g(0) = pi^2/2", _step_g0, G_AT_0),
    "g1": ("g(1) = pi^2/4", _step_g1, G_AT_1),
    "substitution": ("u = sqrt(t) substitution", _step_substitution, -PI2 / 4),
    "interchange": ("sum/integral interchange", _step_interchange, 0.0),
    "moments": ("log moments", _step_moments, 0.0),
    "series-odd": ("sum 1/(2n+1)^2 = pi^2/8", _step_series_odd, PI2 / 8),
    "basel": ("sum 1/n^2 = pi^2/6", _step_basel, PI2 / 6),
}

STEP_IDS: tuple[str, ...] = tuple(_REGISTRY)


def _tol_for(step_id: str, cfg: QuadConfig) -> float:
    if step_id == "domination":
        return DOMINATION_SLACK
    if step_id in ("ftc", "substitution", "lemma-gprime"):
        return SINGULAR_TOL_FACTOR * cfg.abs_tol
    if step_id.startswith("continuity"):
        return max(GRIDS["continuity_tol"], cfg.abs_tol)
    return cfg.abs_tol


def run_step(step_id: str, cfg: QuadConfig | None = None) -> StepReport:
    """Run one registered step.  Numerical failures come back as failing reports."""
    cfg = cfg or QuadConfig()
    try:
        description, func, reference = _REGISTRY[step_id]
    except KeyError:
        raise UnknownStepError(f"unknown step {step_id!r}; known steps: {', '.join(STEP_IDS)}") from None
    try:
        return func(cfg)
    except QuadratureError as exc:
        n_evals = exc.result.n_evals if isinstance(exc, BudgetExhaustedError) else 0
        return StepReport(step_id, description, math.nan, reference, math.nan, _tol_for(step_id, cfg),
                          False, False, n_evals, f"quadrature failed: {exc}")


def _config_echo(cfg: QuadConfig) -> dict:
    return {"quadrature": asdict(cfg), "grids": GRIDS, "singular_tol_factor": SINGULAR_TOL_FACTOR}


def run_steps(step_ids: Iterable[str], cfg: QuadConfig | None = None, timestamp: str | None = None) -> ProofReport:
    """Run the requested steps, reported in proof order (duplicates dropped)."""
    cfg = cfg or QuadConfig()
    wanted = set(step_ids)
    unknown = wanted.difference(STEP_IDS)
    if unknown:
        raise UnknownStepError(f"unknown step(s): {', '.join(sorted(unknown))}")
    steps = [run_step(s, cfg) for s in STEP_IDS if s in wanted]
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return ProofReport(steps, _config_echo(cfg), timestamp)


def run_all(cfg: QuadConfig | None = None, timestamp: str | None = None) -> ProofReport:
    return run_steps(STEP_IDS, cfg, timestamp)


# --------------------------------------------------------------------------
# Serialization.  JSON keys are stable; non-finite floats become null so the
# output is strict JSON.

def _num(x: float):
    return x if math.isfinite(x) else None


def _step_to_dict(s: StepReport) -> dict:
    return {
        "step_id": s.step_id,
        "description": s.description,
        "computed": _num(s.computed),
        "expected": _num(s.expected),
        "abs_err": _num(s.abs_err),
        "tol": _num(s.tol),
        "pass": s.passed,
        "converged": s.converged,
        "n_evals": s.n_evals,
        "notes": s.notes,
    }


def _fmt(x: float) -> str:
    return f"{x:.12g}" if math.isfinite(x) else "nan"


def serialize_report(report: ProofReport, format: str = "json") -> bytes:
    """Render ``report`` as ``"json"``, ``"markdown"`` or ``"plain"`` (UTF-8 bytes)."""
    if format == "json":
        doc = {
            "version": report.version,
            "timestamp": report.timestamp,
            "all_pass": report.all_pass,
            "config": report.config_echo,
            "steps": [_step_to_dict(s) for s in report.steps],
        }
        return (json.dumps(doc, indent=2, allow_nan=False) + "\n").encode()
    if format == "markdown":
        lines = [
            f"# Proof report ({'PASS' if report.all_pass else 'FAIL'})",
            "",
            f"version {report.version}, {report.timestamp}",
            "",
            "| step | result | computed | expected | abs_err | tol | n_evals | notes |",
            "|---|---|---|---|---|---|---|---|",
        ]
        for s in report.steps:
            notes = s.notes.replace("|", "\\|")
            lines.append(
                f"| {s.step_id} | {'PASS' if s.passed else 'FAIL'} | {_fmt(s.computed)} | {_fmt(s.expected)} "
                f"| {_fmt(s.abs_err)} | {_fmt(s.tol)} | {s.n_evals} | {notes} |"
            )
        return ("\n".join(lines) + "\n").encode()
    if format == "plain":
        lines = [
            f"{'PASS' if s.passed else 'FAIL'} {s.step_id} {_fmt(s.computed)} {_fmt(s.expected)} "
            f"{_fmt(s.abs_err)} {_fmt(s.tol)}"
            for s in report.steps
        ]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")


def parse_report(data: bytes | str) -> ProofReport:
    """Inverse of ``serialize_report(report, "json")``."""
    doc = json.loads(data)

    def num(x):
        return math.nan if x is None else float(x)

    steps = [
        StepReport(d["step_id"], d["description"], num(d["computed"]), num(d["expected"]),
                   num(d["abs_err"]), num(d["tol"]), d["pass"], d["converged"], d["n_evals"], d["notes"])
        for d in doc["steps"]
    ]
    return ProofReport(steps, doc.get("config", {}), doc["timestamp"], doc["version"])
