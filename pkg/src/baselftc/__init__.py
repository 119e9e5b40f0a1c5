"""Step-by-step numerical verification that sum 1/n^2 = pi^2/6.

The argument goes through the parametric integral
``g(t) = int_0^{pi/2} arccos((t - tan^2 x)/(t + tan^2 x)) dx``: differentiate
under the integral sign, integrate g' back over (0, 1), and recognise the
result as -2 sum 1/(2n+1)^2.
"""

__version__ = "0.1.0"

from .quadrature import (  # noqa: E402
    BudgetExhaustedError,
    NonFiniteSampleError,
    QuadConfig,
    QuadratureError,
    QuadResult,
    integrate,
    integrate_with_transform,
    power_transform,
)
from .series import Enclosure, sum_odd_reciprocal_squares, sum_reciprocal_squares  # noqa: E402
