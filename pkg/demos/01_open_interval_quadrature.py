"""
Quadrature that never touches the endpoints
===========================================

Every integral in the argument has an integrand that blows up, or is undefined,
at one end of its interval.  The adaptive Gauss-Kronrod engine only samples
interior nodes and keeps bisecting the worst panel.
"""

# %%
import math

from baselftc import QuadConfig, integrate, integrate_with_transform, power_transform

# %%
# log u is singular at 0 but integrable; its integral over (0, 1) is -1.
r = integrate(math.log, 0.0, 1.0, QuadConfig(1e-10))
print(r)

# %%
# The kernel that closes the argument: int_0^1 log u / (1 - u^2) du = -pi^2/8.
r = integrate(lambda u: math.log(u) / (1 - u * u), 0.0, 1.0, QuadConfig(1e-8))
print(r.value, -math.pi**2 / 8, r.n_evals)

# %%
# g'(t) has a 1/sqrt(t) log t singularity.  Direct integration works, but the
# substitution t = u^2 removes the square root and needs far fewer samples.
gp = lambda t: math.log(t) / (2 * math.sqrt(t) * (1 - t))
direct = integrate(gp, 0.0, 1.0, QuadConfig(1e-8))
mapped = integrate_with_transform(gp, 0.0, 1.0, power_transform(2), QuadConfig(1e-8))
print(f"direct: {direct.value:.12f} in {direct.n_evals} evals")
print(f"t=u^2 : {mapped.value:.12f} in {mapped.n_evals} evals")
print(f"exact : {-math.pi**2 / 4:.12f}")

# %%
# Budgets are hard limits: running out raises, carrying the best partial answer.
from baselftc import BudgetExhaustedError

try:
    integrate(lambda x: 1 / math.sqrt(x), 0.0, 1.0, QuadConfig(1e-14, max_evals=300))
except BudgetExhaustedError as exc:
    print(exc)
    print(exc.result)
