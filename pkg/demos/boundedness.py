"""Data-bounded methods against Lagrange interpolation on a step and the Runge function.

    python demos/boundedness.py
"""

from dbweno.bench.experiments import ExperimentSpec, run_boundedness

for fn in ("step", "runge"):
    table, _ = run_boundedness(ExperimentSpec("boundedness", fn, grid_sizes=(20,)))
    counts = table.counts()
    print(f"{fn:>6}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    if fn == "step":
        print(f"        largest fourth-order Lagrange value {table.lag4.max():.4f} on data in [0, 1]")
