"""Numerical checks for differentiating g(t) under the integral sign.

Three things are checked on sample points:

* the domination bound ``|df/dt(x, t)| <= 1/(2t)`` (AM-GM), which gives the
  integrable majorant ``1/(2 delta)`` on ``t > delta``;
* agreement of a central difference of g, the quadrature of df/dt, and the
  closed form of g'(t);
* continuity of g at the endpoints t = 0 and t = 1.

Integrability and existence of df/dt are "almost everywhere" statements; here
they can only be checked as finiteness of the samples on the grids used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import HALF_PI, check_t, eval_dfdt, g_numeric, gprime_closed
from .quadrature import QuadConfig, integrate

__all__ = [
    "DOMINATION_SLACK",
    "DominationReport",
    "LeibnizCheck",
    "StepSizeError",
    "endpoint_dense_grid",
    "check_domination",
    "check_leibniz",
    "endpoint_gaps",
    "check_endpoint_continuity",
]

DOMINATION_SLACK = 1e-12


class StepSizeError(ValueError):
    """The finite-difference stencil leaves the open interval (0, 1)."""


@dataclass
class DominationReport:
    delta: float
    grid: list[tuple[float, float]] = field(repr=False)
    max_violation: float
    max_ratio: float
    all_finite: bool
    passed: bool


@dataclass
class LeibnizCheck:
    t: float
    fd_value: float
    quad_of_dfdt: float
    closed_form: float
    max_pairwise_gap: float
    tol: float
    passed: bool
    n_evals: int


def endpoint_dense_grid(n: int) -> np.ndarray:
    """``n`` points of (0, pi/2), clustered cubically toward both ends."""
    u = np.arange(1, n + 1) / (n + 1)
    w = np.where(u < 0.5, 4.0 * u**3, 1.0 - 4.0 * (1.0 - u) ** 3)
    return HALF_PI * w


def check_domination(delta: float, nx: int, nt: int) -> DominationReport:
    """Sweep ``|df/dt| - 1/(2t)`` over an ``nx`` by ``nt`` grid with t in (delta, 1).

    ``max_ratio`` is the largest ``|df/dt| * 2t``; the bound is tight (ratio 1)
    where ``t = tan^2 x``.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")
    if nx < 2 or nt < 2:
        raise ValueError("nx and nt must both be >= 2")
    xs = endpoint_dense_grid(nx).tolist()
    ts = (delta + (1.0 - delta) * np.arange(1, nt + 1) / (nt + 1)).tolist()

    grid = []
    violation = -math.inf
    ratio = 0.0
    finite = True
    for t in ts:
        bound = 1.0 / (2.0 * t)
        for x in xs:
            d = eval_dfdt(x, t)
            finite = finite and math.isfinite(d)
            violation = max(violation, abs(d) - bound)
            ratio = max(ratio, abs(d) * 2.0 * t)
            grid.append((x, t))
    passed = finite and violation <= DOMINATION_SLACK
    return DominationReport(float(delta), grid, violation, ratio, finite, passed)


def check_leibniz(t: float, h: float, cfg: QuadConfig | None = None, tol: float = 1e-6) -> LeibnizCheck:
    """Compare (g(t+h) - g(t-h))/2h, int df/dt(x, t) dx and the closed-form g'(t).

    The two g evaluations are integrated to ``min(cfg.abs_tol, tol*h/10)`` so
    that quadrature noise, amplified by 1/h in the difference quotient, stays
    well below ``tol``.
    """
    cfg = cfg or QuadConfig()
    t = check_t(t, open_left=True, open_right=True)
    if not h > 0:
        raise StepSizeError(f"h must be positive, got {h!r}")
    if not (t - h > 0.0 and t + h < 1.0):
        raise StepSizeError(f"stencil [{t - h!r}, {t + h!r}] leaves (0, 1)")

    fd_cfg = cfg.with_tol(min(cfg.abs_tol, tol * h / 10.0))
    g_plus = g_numeric(t + h, fd_cfg)
    g_minus = g_numeric(t - h, fd_cfg)
    fd = (g_plus.value - g_minus.value) / (2.0 * h)
    quad = integrate(lambda x: eval_dfdt(x, t), 0.0, HALF_PI, cfg)
    closed = gprime_closed(t)

    gap = max(abs(fd - quad.value), abs(fd - closed), abs(quad.value - closed))
    n_evals = g_plus.n_evals + g_minus.n_evals + quad.n_evals
    return LeibnizCheck(t, fd, quad.value, closed, gap, tol, gap <= tol, n_evals)


def endpoint_gaps(end: int, t_sequence: Sequence[float], cfg: QuadConfig | None = None) -> list[float]:
    """``|g(t_n) - g(end)|`` for each t_n, all values by quadrature."""
    if end not in (0, 1):
        raise ValueError(f"end must be 0 or 1, got {end!r}")
    ts = [check_t(t, open_left=True, open_right=True) for t in t_sequence]
    if not ts:
        raise ValueError("t_sequence is empty")
    dist = [abs(t - end) for t in ts]
    if any(d2 >= d1 for d1, d2 in zip(dist, dist[1:])):
        raise ValueError("t_sequence must approach the chosen end monotonically")
    limit = g_numeric(end, cfg).value
    return [abs(g_numeric(t, cfg).value - limit) for t in ts]


def check_endpoint_continuity(
    end: int, t_sequence: Sequence[float], cfg: QuadConfig | None = None, tol: float = 1e-3
) -> bool:
    """True iff the last gap ``|g(t_n) - g(end)|`` is within ``tol`` and is the smallest one."""
    gaps = endpoint_gaps(end, t_sequence, cfg)
    return gaps[-1] <= tol and gaps[-1] == min(gaps)
