"""Closed-form objects of the parametric integral g(t) = int_0^{pi/2} f(x, t) dx.

Here ``f(x, t) = arccos((t - tan^2 x) / (t + tan^2 x))``.  Everything that the
textbook writes with ``tan x`` is evaluated over ``cos^2 x`` and ``sin^2 x``
instead so that nothing overflows as ``x -> pi/2``; the ``naive_*`` variants
keep the tan-based forms for testing only.
"""

from __future__ import annotations

import math

from .quadrature import QuadConfig, QuadResult, integrate

__all__ = [
    "HALF_PI",
    "G_AT_0",
    "G_AT_1",
    "DomainError",
    "check_t",
    "check_x",
    "eval_f",
    "eval_dfdt",
    "naive_f",
    "naive_dfdt",
    "g_numeric",
    "gprime_closed",
    "inner_antiderivative",
    "log_moment_integral",
]

HALF_PI = 0.5 * math.pi
G_AT_0 = math.pi**2 / 2
G_AT_1 = math.pi**2 / 4

# Below this distance from t = 1, g'(t) switches to its Taylor expansion.
EPS_SWITCH = 1e-4
# arccos arguments are clamped only when they overshoot +-1 by rounding slop.
CLAMP_SLOP = 1e-14


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


def check_t(t: float, *, open_left: bool = False, open_right: bool = False) -> float:
    t = float(t)
    lo_ok = t > 0.0 if open_left else t >= 0.0
    hi_ok = t < 1.0 if open_right else t <= 1.0
    if not (lo_ok and hi_ok):
        lo = "(" if open_left else "["
        hi = ")" if open_right else "]"
        raise DomainError(f"t={t!r} outside {lo}0, 1{hi}")
    return t


def check_x(x: float) -> float:
    x = float(x)
    if not 0.0 < x < HALF_PI:
        raise DomainError(f"x={x!r} outside (0, pi/2)")
    return x


def _safe_acos(arg: float) -> float:
    if abs(arg) > 1.0:
        if abs(arg) - 1.0 > CLAMP_SLOP:
            raise ArithmeticError(f"arccos argument {arg!r} exceeds [-1, 1] beyond rounding slop")
        arg = math.copysign(1.0, arg)
    return math.acos(arg)


def eval_f(x: float, t: float) -> float:
    """f(x, t) in [0, pi], via (t cos^2 x - sin^2 x) / (t cos^2 x + sin^2 x).

    arccos is ill-conditioned at +-1, so within ~1e-8 of x = 0 or x = pi/2 the
    pointwise absolute error grows to O(sqrt(eps)); integrals are unaffected.
    """
    x = check_x(x)
    t = check_t(t)
    if t == 0.0:
        # argument is -1 for every x; also avoids 0/0 once sin^2 x underflows
        return math.pi
    c2 = math.cos(x) ** 2
    s2 = math.sin(x) ** 2
    return _safe_acos((t * c2 - s2) / (t * c2 + s2))


def eval_dfdt(x: float, t: float) -> float:
    """Partial derivative of f in t, -(sin x cos x) / (sqrt(t) (t cos^2 x + sin^2 x)).

    Accepts ``0 < t <= 1``; the formula stays finite at t = 1.
    """
    x = check_x(x)
    t = check_t(t, open_left=True)
    c = math.cos(x)
    s = math.sin(x)
    return -(s * c) / (math.sqrt(t) * (t * c * c + s * s))


def naive_f(x: float, t: float) -> float:
    tan2 = math.tan(x) ** 2
    return _safe_acos((t - tan2) / (t + tan2))


def naive_dfdt(x: float, t: float) -> float:
    tx = math.tan(x)
    return -tx / (math.sqrt(t) * (t + tx * tx))


def g_numeric(t: float, cfg: QuadConfig | None = None) -> QuadResult:
    """g(t) by quadrature of :func:`eval_f` over (0, pi/2)."""
    t = check_t(t)
    return integrate(lambda x: eval_f(x, t), 0.0, HALF_PI, cfg)


def gprime_closed(t: float) -> float:
    """g'(t) = log t / (2 sqrt(t) (1 - t)) on (0, 1], with the limit -1/2 at t = 1.

    Near t = 1 the ratio log t / (1 - t) is replaced by
    ``-(1 + s/2 + s^2/3 + s^3/4)`` with ``s = 1 - t``.
    """
    t = check_t(t, open_left=True)
    s = 1.0 - t
    if abs(s) < EPS_SWITCH:
        ratio = -(1.0 + s * (1.0 / 2 + s * (1.0 / 3 + s / 4)))
    else:
        ratio = math.log(t) / s
    return ratio / (2.0 * math.sqrt(t))


def inner_antiderivative(x: float, t: float) -> float:
    """Antiderivative in x of ``eval_dfdt(x, t)``: log((t-1) cos 2x + t + 1) / (2 sqrt(t) (t-1)).

    Defined on the closed range ``0 <= x <= pi/2`` for ``0 < t < 1``.
    """
    t = check_t(t, open_left=True, open_right=True)
    x = float(x)
    if not 0.0 <= x <= HALF_PI:
        raise DomainError(f"x={x!r} outside [0, pi/2]")
    return math.log((t - 1.0) * math.cos(2.0 * x) + t + 1.0) / (2.0 * math.sqrt(t) * (t - 1.0))


def log_moment_integral(n: int, cfg: QuadConfig | None = None) -> QuadResult:
    """Quadrature of u^(2n) log u over (0, 1); the exact value is -1/(2n+1)^2."""
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    k = 2 * int(n)
    return integrate(lambda u: u**k * math.log(u), 0.0, 1.0, cfg)
