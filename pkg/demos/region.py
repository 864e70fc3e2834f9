"""The admissible weight interval along r, with the weight families inside it.

    python demos/region.py
"""

import numpy as np

from dbweno import RegionSide, WeightFamily, in_weno_region, sample_region

r = np.array([-10.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 4.0, 10.0])
families = [WeightFamily("interp-beta"), WeightFamily("recon-beta"), WeightFamily("scheme-omega1")]

print(f"{'r':>6} {'lo':>8} {'hi':>8}  " + "  ".join(f"{f.name:>13}" for f in families))
for rv, lo, hi, _ in sample_region(r, RegionSide.PLUS):
    ws = [float(f(np.array(rv)).w0) for f in families]
    print(f"{rv:>6.1f} {lo:>8.4f} {hi:>8.4f}  " + "  ".join(f"{w:>13.4f}" for w in ws))

dense = np.linspace(-100, 100, 20001)
for f in families:
    print(f"{f.name}: inside region everywhere -> {bool(np.all(in_weno_region(f(dense).w0, dense, f.side)))}")
