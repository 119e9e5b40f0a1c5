"""
The whole argument as a report
==============================

Each step runs on its own; ``run_all`` strings them together in the order of
the argument.  The same report is what the ``baselftc`` command prints.
"""

# %%
from baselftc.pipeline import run_all, run_step, serialize_report
from baselftc.quadrature import QuadConfig

report = run_all(QuadConfig(1e-8))
print(serialize_report(report, "markdown").decode())
print("all pass:", report.all_pass)

# %%
# A single step, and what a starved quadrature budget looks like.
print(run_step("ftc"))
print(run_step("ftc", QuadConfig(max_evals=10)))
