"""WENO3 advection of a step and a sine wave over one period.

    python demos/solver.py
"""

import numpy as np

from dbweno import SolveConfig, UniformGrid, WeightFamily, solve

step = lambda x: np.where(np.abs(x) <= 0.3, 1.0, 0.0)  # noqa: E731
sine = lambda x: np.sin(np.pi * x)  # noqa: E731

for name, k in (("scheme-omega1", None), ("scheme-omega2", None), ("scheme-omega-k", 1.5)):
    fam = WeightFamily(name, k=k)
    res = solve(SolveConfig(UniformGrid(-1, 1, 200), step, weight_variant=fam))
    print(f"{name:>15}: step range [{res.min_uT:.3e}, {res.max_uT:.6f}], overshoot {res.overshoot:.1e}")

print("\nsine, L1 error after one period")
for fixed in (None, 1 / 3):
    errs = []
    for n in (40, 80, 160, 320):
        res = solve(SolveConfig(UniformGrid(-1, 1, n), sine, fixed_omega0=fixed))
        errs.append(np.abs(res.u_final - res.u0).sum() * 2 / n)
    label = "nonlinear omega1" if fixed is None else "fixed 1/3"
    print(f"{label:>17}: rates {np.round(np.log2(np.array(errs[:-1]) / errs[1:]), 2).tolist()}")
