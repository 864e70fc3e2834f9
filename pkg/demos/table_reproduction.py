"""Interface errors and rates for sin(pi x), third and fourth order.

    python demos/table_reproduction.py
"""

from dbweno.bench.experiments import ExperimentSpec, run_converge

for mode in ("interp", "recon"):
    for order in (3, 4):
        _, rows = run_converge(ExperimentSpec(f"converge-{mode}", order=order))
        print(f"\n{mode} order {order}")
        print(f"{'n':>6} {'L-inf':>12} {'rate':>5} {'L1':>12} {'rate':>5}")
        for n, einf, rinf, e1, r1, *_ in rows[1:]:
            print(f"{n:>6} {einf:>12} {rinf:>5} {e1:>12} {r1:>5}")

# on the periodic layout every interface is distinct and rates are clean
_, rows = run_converge(ExperimentSpec("converge-interp", order=3, layout="periodic"))
print("\nperiodic layout, interp order 3 rates:", [r[2] for r in rows[2:]])
