"""
Differentiating g(t) under the integral sign
============================================

g(t) = int_0^{pi/2} arccos((t - tan^2 x)/(t + tan^2 x)) dx falls from pi^2/2 at
t = 0 to pi^2/4 at t = 1.  Its derivative can be computed three ways, and they
should agree.
"""

# %%
import numpy as np

from baselftc.core import g_numeric, gprime_closed
from baselftc.leibniz import check_domination, check_leibniz, endpoint_gaps
from baselftc.quadrature import QuadConfig

cfg = QuadConfig(1e-10)

# %%
for t in np.linspace(0, 1, 6):
    print(f"g({t:.1f}) = {g_numeric(t, cfg).value:.12f}")

# %%
# Central difference of g, quadrature of df/dt and the closed form, side by side.
for t in (0.1, 0.5, 0.9):
    c = check_leibniz(t, 1e-5, cfg, 1e-6)
    print(f"t={t}: FD {c.fd_value:.10f}  quad {c.quad_of_dfdt:.10f}  closed {c.closed_form:.10f}  pass={c.passed}")

# %%
# The domination bound |df/dt| <= 1/(2t) holds on the whole grid and is tight
# where t = tan^2 x.
rep = check_domination(0.01, 200, 200)
print(rep)

# %%
# Continuity at t = 0 is slow: the gap shrinks like sqrt(t) |log t|.
ts = [10.0**-k for k in range(1, 9)]
for t, gap in zip(ts, endpoint_gaps(0, ts, cfg)):
    print(f"t={t:.0e}: |g(t) - g(0)| = {gap:.3e}")

# %%
# g' has a removable singularity at t = 1 (limit -1/2).
for t in (0.99, 0.9999, 0.999999, 1.0):
    print(t, gprime_closed(t))
