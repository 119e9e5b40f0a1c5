"""
Certified enclosures for the two series
=======================================

A partial sum plus two-sided tail bounds gives an interval that must contain
the limit; pi^2/6 and pi^2/8 should land inside.
"""

# %%
import math

from baselftc.series import odd_to_full_relation, sum_odd_reciprocal_squares, sum_reciprocal_squares

# %%
for N in (1, 10, 1000, 10**6):
    full = sum_reciprocal_squares(N)
    odd = sum_odd_reciprocal_squares(N)
    print(f"N={N:>7}: full width {full.width:.2e} contains pi^2/6: {math.pi**2 / 6 in full}; "
          f"odd width {odd.width:.2e} contains pi^2/8: {math.pi**2 / 8 in odd}")

# %%
# The odd series is 3/4 of the full one, so their enclosures overlap.
for N in (10, 100, 1000):
    odd, full34 = odd_to_full_relation(N)
    print(N, odd.intersect(full34))
