"""Adaptive Gauss-Kronrod quadrature on open intervals.

The integrand is only ever sampled at interior Kronrod nodes, so integrable
endpoint singularities (``log u`` at 0, ``1/sqrt(t)`` at 0, ``tan x`` at pi/2)
are handled by bisection alone.  The error estimate is the difference between
the embedded 7-point Gauss and 15-point Kronrod rules; it is a heuristic, not a
rigorous bound.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "QuadConfig",
    "QuadResult",
    "QuadratureError",
    "BudgetExhaustedError",
    "NonFiniteSampleError",
    "Transform",
    "identity_transform",
    "power_transform",
    "integrate",
    "integrate_with_transform",
]

# QUADPACK qk15 abscissae (positive half, descending) and weights.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_EVALS_PER_PANEL = 15


@dataclass(frozen=True)
class QuadConfig:
    """Tolerance and budget for one call to :func:`integrate`."""

    abs_tol: float = 1e-8
    max_subdivisions: int = 10_000
    max_evals: int = 1_000_000

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be a positive finite number, got {self.abs_tol!r}")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be >= 1, got {self.max_subdivisions!r}")
        if self.max_evals < 1:
            raise ValueError(f"max_evals must be >= 1, got {self.max_evals!r}")

    def with_tol(self, abs_tol: float) -> "QuadConfig":
        return QuadConfig(abs_tol, self.max_subdivisions, self.max_evals)


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_est: float
    n_evals: int
    converged: bool


class QuadratureError(ArithmeticError):
    """Base class for quadrature failures."""


class BudgetExhaustedError(QuadratureError):
    """Raised when max_evals or max_subdivisions is hit before convergence.

    ``result`` holds the best value and error estimate reached so far, with
    ``converged=False``.
    """

    def __init__(self, message: str, result: QuadResult):
        super().__init__(message)
        self.result = result


class NonFiniteSampleError(QuadratureError):
    """Raised when the integrand returns NaN or inf at an interior point."""

    def __init__(self, x: float, fx: float):
        super().__init__(f"integrand is not finite at interior point x={x!r}: f(x)={fx!r}")
        self.x = x
        self.fx = fx


@dataclass(frozen=True)
class _Panel:
    a: float
    b: float
    value: float
    error: float


def _splittable(a: float, b: float) -> bool:
    # All 15 nodes of both halves must land strictly inside (a, b).
    scale = max(abs(a), abs(b), 1e-300)
    return (b - a) > 256 * math.ulp(scale)


def _gk15(f: Callable[[float], float], a: float, b: float) -> _Panel:
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)

    def sample(x: float) -> float:
        fx = float(f(x))
        if not math.isfinite(fx):
            raise NonFiniteSampleError(x, fx)
        return fx

    fc = sample(centre)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        pair = sample(centre - dx) + sample(centre + dx)
        kronrod += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    value = kronrod * half
    return _Panel(a, b, value, abs((kronrod - gauss) * half))


def _totals(panels) -> tuple[float, float]:
    ordered = sorted(panels, key=lambda p: p.a)
    return math.fsum(p.value for p in ordered), math.fsum(p.error for p in ordered)


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadConfig | None = None,
) -> QuadResult:
    """Integrate ``f`` over the open interval ``(a, b)``.

    The panel with the largest error estimate is bisected until the summed
    panel errors fall below ``cfg.abs_tol``.

    Parameters
    ----------
    f : callable
        Scalar integrand; it is never called at ``a`` or ``b``.
    a, b : float
        Finite limits with ``a < b``.
    cfg : QuadConfig, optional
        Tolerance and budgets; defaults to ``QuadConfig()``.

    Returns
    -------
    QuadResult
        Always with ``converged=True``; failures raise instead.

    Raises
    ------
    BudgetExhaustedError
        If the budget runs out (or panels hit the floating-point resolution
        floor) first; the exception carries the best partial result.
    NonFiniteSampleError
        If ``f`` returns NaN or inf at a sample point.
    """
    cfg = cfg or QuadConfig()
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")

    first = _gk15(f, a, b)
    n_evals = _EVALS_PER_PANEL
    # Max-heap on error; ties broken by position so the refinement order is reproducible.
    heap = [(-first.error, first.a, first)]
    subdivisions = 0
    running_error = first.error

    if n_evals > cfg.max_evals:
        raise BudgetExhaustedError(
            f"max_evals={cfg.max_evals} is below the {_EVALS_PER_PANEL} evaluations of a single panel",
            QuadResult(first.value, first.error, n_evals, False),
        )

    while True:
        # The running sum only decides when to take the exact (fsum) total.
        if running_error <= cfg.abs_tol or subdivisions % 256 == 0:
            value, error = _totals(item[2] for item in heap)
            running_error = error
            if error <= cfg.abs_tol:
                return QuadResult(value, error, n_evals, True)

        budget_msg = None
        if subdivisions >= cfg.max_subdivisions:
            budget_msg = f"max_subdivisions={cfg.max_subdivisions} reached"
        elif n_evals + 2 * _EVALS_PER_PANEL > cfg.max_evals:
            budget_msg = f"max_evals={cfg.max_evals} reached"
        elif not _splittable(heap[0][2].a, heap[0][2].b):
            worst = heap[0][2]
            budget_msg = f"panel [{worst.a!r}, {worst.b!r}] is at floating-point resolution"
        if budget_msg is not None:
            value, error = _totals(item[2] for item in heap)
            raise BudgetExhaustedError(
                f"{budget_msg} (error estimate {error:.3g} > {cfg.abs_tol:.3g})",
                QuadResult(value, error, n_evals, False),
            )

        _, _, worst = heapq.heappop(heap)
        mid = 0.5 * (worst.a + worst.b)
        left = _gk15(f, worst.a, mid)
        right = _gk15(f, mid, worst.b)
        heapq.heappush(heap, (-left.error, left.a, left))
        heapq.heappush(heap, (-right.error, right.a, right))
        running_error += left.error + right.error - worst.error
        n_evals += 2 * _EVALS_PER_PANEL
        subdivisions += 1


@dataclass(frozen=True)
class Transform:
    """Strictly increasing change of variables s = phi(v) of the unit interval onto itself.

    ``dphi`` is its derivative.  Mapped to ``(a, b)`` affinely by
    :func:`integrate_with_transform`.
    """

    phi: Callable[[float], float]
    dphi: Callable[[float], float]
    name: str = "custom"


def identity_transform() -> Transform:
    return Transform(lambda v: v, lambda v: 1.0, "identity")


def power_transform(p: float, at: str = "left") -> Transform:
    """Power map clustering nodes at one end: s = v**p (``at="left"``) or s = 1 - (1-v)**p.

    With ``p = 2`` on ``(0, 1)`` this is the substitution t = u**2, which turns
    ``1/sqrt(t)`` singularities into bounded integrands.
    """
    if not p >= 1:
        raise ValueError(f"power must be >= 1, got {p!r}")
    if at == "left":
        return Transform(lambda v: v**p, lambda v: p * v ** (p - 1), f"power{p:g}-left")
    if at == "right":
        return Transform(
            lambda v: 1.0 - (1.0 - v) ** p, lambda v: p * (1.0 - v) ** (p - 1), f"power{p:g}-right"
        )
    raise ValueError(f"at must be 'left' or 'right', got {at!r}")


def integrate_with_transform(
    f: Callable[[float], float],
    a: float,
    b: float,
    transform: Transform,
    cfg: QuadConfig | None = None,
) -> QuadResult:
    """Integrate ``f`` over ``(a, b)`` after pulling it back through ``transform``.

    Computes ``integrate(lambda v: f(x(v)) * x'(v), 0, 1)`` with
    ``x(v) = a + (b - a) * phi(v)``.
    """
    a = float(a)
    b = float(b)
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    width = b - a
    toward_b = math.nextafter(a, b)
    toward_a = math.nextafter(b, a)

    def pulled_back(v: float) -> float:
        x = a + width * transform.phi(v)
        # phi(v) can round onto an endpoint when v is tiny; keep samples interior.
        if x <= a:
            x = toward_b
        elif x >= b:
            x = toward_a
        return f(x) * width * transform.dphi(v)

    return integrate(pulled_back, 0.0, 1.0, cfg)
