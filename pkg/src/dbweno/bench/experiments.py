"""The benchmark experiments behind the ``dbweno-bench`` subcommands.

Each ``run_*`` function takes an :class:`ExperimentSpec`, returns its
in-memory result and a list of CSV rows (header first).  Writing files is
left to the CLI so the functions stay easy to test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import approximator as ap
from ..oracles import convergence_rates, error_norms, rate_report
from ..region import RegionSide, sample_region
from ..solver import ADVECTION, BURGERS, SolveConfig, burgers_exact, solve
from ..stencil import Mode, UniformGrid
from ..weights import INTERP_BETA, INTERP_MU, RECON_BETA, RECON_MU, WeightFamily

__all__ = [
    "KINDS",
    "TABLE_SIZES",
    "TEST_FUNCTIONS",
    "ExperimentSpec",
    "run_converge",
    "run_boundedness",
    "run_region_table",
    "run_solve",
    "fmt_error",
    "fmt_raw",
]

KINDS = ("converge-interp", "converge-recon", "boundedness", "region-table", "solve")
TABLE_SIZES = (40, 80, 160, 320, 640, 1280)
LAYOUTS = ("ghost", "periodic")

TEST_FUNCTIONS = {
    "sine": lambda x: np.sin(np.pi * x),
    "runge": lambda x: 1.0 / (1.0 + 25.0 * x * x),
    "step": lambda x: np.where(np.abs(x) <= 0.3, 1.0, 0.0),
    "constant": lambda x: np.full_like(np.asarray(x, dtype=float), 0.7),
}

FLUXES = {"advection": ADVECTION, "burgers": BURGERS}


def fmt_error(x: float) -> str:
    """Table style, e.g. ``2.82050e-04``."""
    return f"{x:.5e}"


def fmt_raw(x: float) -> str:
    return repr(float(x))


def fmt_rate(x: float) -> str:
    return f"{x:.2f}"


@dataclass(frozen=True)
class ExperimentSpec:
    kind: str
    test_function: str = "sine"
    grid_sizes: tuple = TABLE_SIZES
    order: int = 3
    family: str | None = None
    eta: float | None = None
    k: float | None = None
    flux: str = "advection"
    final_time: float = 2.0
    cfl: float = 0.4
    layout: str = "ghost"
    mode: str = "interp"
    r_range: tuple = (-10.0, 10.0, 0.01)
    out: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.test_function not in TEST_FUNCTIONS:
            raise ValueError(f"unknown test function {self.test_function!r}")
        if self.order not in (3, 4):
            raise ValueError(f"order must be 3 or 4, got {self.order}")
        if self.flux not in FLUXES:
            raise ValueError(f"unknown flux {self.flux!r}")
        if self.mode not in ("interp", "recon"):
            raise ValueError(f"mode must be interp or recon, got {self.mode!r}")
        if self.kind.startswith("converge-"):
            object.__setattr__(self, "mode", self.kind.split("-", 1)[1])
        if self.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {LAYOUTS}")
        sizes = tuple(int(n) for n in self.grid_sizes)
        object.__setattr__(self, "grid_sizes", sizes)
        if not sizes:
            raise ValueError("need at least one grid size")
        if any(n < 4 for n in sizes):
            raise ValueError("grid sizes must be at least 4")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("grid sizes must be strictly increasing")
        if self.kind.startswith("converge") and any(b != 2 * a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("each convergence grid size must double the previous one")
        if self.family is not None:
            self.weight_family()

    @property
    def data_mode(self) -> Mode:
        return Mode.CELL if self.mode == "recon" else Mode.POINT

    def weight_family(self) -> WeightFamily | None:
        if self.family is None:
            return None
        return WeightFamily(self.family, eta=self.eta, k=self.k)


# -- convergence -------------------------------------------------------------


def _table_grid(n: int, layout: str):
    """Grid, data positions and interface sample count for one table row.

    ``ghost``: ``n`` counts two ghost cells, so ``n - 2`` cells of width
    ``2/(n - 2)`` with data at the cell centres, and ``n - 1`` interface
    samples (the first interface is sampled again after one period).
    ``periodic``: ``n`` points ``-1 + j dx`` with ``dx = 2/n`` (cells centred
    on them for averages) and ``n`` interfaces.
    """
    if layout == "ghost":
        grid = UniformGrid(-1.0, 1.0, n - 2)
        return grid, 0.0, n - 1
    return UniformGrid(-1.0, 1.0, n), -0.5, n


def _families(spec: ExperimentSpec):
    beta, mu = (RECON_BETA, RECON_MU) if spec.data_mode is Mode.CELL else (INTERP_BETA, INTERP_MU)
    fam = spec.weight_family()
    if fam is not None:
        if fam.side is RegionSide.PLUS:
            beta = fam
        elif spec.order == 4:
            mu = fam
        else:
            raise ValueError(f"third-order interface values need a plus-side family, not {fam.name}")
    return beta, mu


def interface_values(data, spec: ExperimentSpec):
    beta, mu = _families(spec)
    if spec.order == 3:
        return ap.three_point_plus(*ap.neighbours(data, (-1, 0, 1)), beta)
    return ap.four_point_plus(*ap.neighbours(data, (-1, 0, 1, 2)), beta, mu)


def convergence_errors(spec: ExperimentSpec, n: int):
    f = TEST_FUNCTIONS[spec.test_function]
    grid, offset, samples = _table_grid(n, spec.layout)
    x = grid.centers() + offset * grid.dx
    data = ap.cell_averages(f, grid, offset) if spec.data_mode is Mode.CELL else f(x)
    approx = interface_values(data, spec)
    exact = f(x + 0.5 * grid.dx)
    take = np.arange(samples) % grid.n
    return error_norms(approx[take], exact[take], grid.dx)


def run_converge(spec: ExperimentSpec):
    """Interface errors and rates for every grid size."""
    if not spec.kind.startswith("converge"):
        raise ValueError("run_converge needs a converge-* spec")
    l1, linf = zip(*(convergence_errors(spec, n) for n in spec.grid_sizes))
    # rates come from the printed errors so the CSV is self-consistent
    shown_inf = [float(fmt_error(e)) for e in linf]
    shown_l1 = [float(fmt_error(e)) for e in l1]
    r_inf = convergence_rates(shown_inf) if len(linf) > 1 else []
    r_l1 = convergence_rates(shown_l1) if len(l1) > 1 else []
    report = rate_report(spec.grid_sizes, list(l1), list(linf))
    report.rates_l1, report.rates_linf = r_l1, r_inf
    rows = [["n", "e_linf", "rate_linf", "e_l1", "rate_l1", "e_linf_raw", "e_l1_raw"]]
    for j, n in enumerate(spec.grid_sizes):
        rows.append(
            [
                str(n),
                fmt_error(linf[j]),
                fmt_rate(r_inf[j - 1]) if j else "",
                fmt_error(l1[j]),
                fmt_rate(r_l1[j - 1]) if j else "",
                fmt_raw(linf[j]),
                fmt_raw(l1[j]),
            ]
        )
    return report, rows


# -- boundedness -------------------------------------------------------------


def _ulp_tol(*arrays):
    scale = np.max(np.abs(np.stack(arrays)), axis=0)
    return 4.0 * np.finfo(float).eps * scale


def _outside(value, lo, hi, tol):
    return (value < lo - tol) | (value > hi + tol)


@dataclass
class BoundednessTable:
    x: np.ndarray
    db3: np.ndarray
    db4: np.ndarray
    lag3: np.ndarray
    lag4: np.ndarray
    m: np.ndarray
    M: np.ndarray
    viol3: np.ndarray
    viol4: np.ndarray
    viol_lag3: np.ndarray
    viol_lag4: np.ndarray

    def counts(self) -> dict:
        return {k: int(getattr(self, k).sum()) for k in ("viol3", "viol4", "viol_lag3", "viol_lag4")}


def boundedness_table(f, n: int, mode: Mode) -> BoundednessTable:
    grid = UniformGrid(-1.0, 1.0, n)
    points = f(grid.centers())
    data = ap.cell_averages(f, grid) if mode is Mode.CELL else points
    if mode is Mode.CELL:
        db3, db4 = ap.recon3_periodic(data), ap.recon4_periodic(data)
    else:
        db3, db4 = ap.interp3_periodic(data), ap.interp4_periodic(data)
    lag3, lag4 = ap.lagrange3_periodic(points), ap.lagrange4_periodic(points)

    def bounds(v, width):
        nb = ap.neighbours(v, range(-1, width - 1))
        return np.min(nb, axis=0), np.max(nb, axis=0), _ulp_tol(*nb)

    m3, M3, t3 = bounds(data, 3)
    m4, M4, t4 = bounds(data, 4)
    pm3, pM3, pt3 = bounds(points, 3)
    pm4, pM4, pt4 = bounds(points, 4)
    return BoundednessTable(
        x=grid.edges()[1:],
        db3=db3,
        db4=db4,
        lag3=lag3,
        lag4=lag4,
        m=m3,
        M=M3,
        viol3=_outside(db3, m3, M3, t3),
        viol4=_outside(db4, m4, M4, t4),
        viol_lag3=_outside(lag3, pm3, pM3, pt3),
        viol_lag4=_outside(lag4, pm4, pM4, pt4),
    )


def run_boundedness(spec: ExperimentSpec):
    f = TEST_FUNCTIONS[spec.test_function]
    n = spec.grid_sizes[0]
    table = boundedness_table(f, n, spec.data_mode)
    cols = ["x", "db3", "db4", "lag3", "lag4", "m", "M", "viol3", "viol4", "viol_lag3", "viol_lag4"]
    rows = [cols]
    for j in range(n):
        row = []
        for c in cols:
            v = getattr(table, c)[j]
            row.append(str(int(v)) if c.startswith("viol") else fmt_raw(v))
        rows.append(row)
    c = table.counts()
    rows.append(["#violations", "", "", "", "", "", "", *(str(c[k]) for k in cols[7:])])
    return table, rows


# -- region table ------------------------------------------------------------


def run_region_table(spec: ExperimentSpec):
    fam = spec.weight_family() or INTERP_BETA
    lo, hi, step = spec.r_range
    if not step > 0 or not hi >= lo:
        raise ValueError("r range needs lo <= hi and a positive step")
    count = int(round((hi - lo) / step)) + 1
    r = np.round(lo + step * np.arange(count), 12)
    region = sample_region(r, fam.side)
    weights = np.broadcast_to(fam(r).w0, r.shape)
    rows = [["r", "lo", "hi", "weight"]]
    for (rv, a, b, _), w in zip(region, weights):
        rows.append([fmt_raw(rv), fmt_raw(a), fmt_raw(b), fmt_raw(w)])
    return (r, region, weights), rows


# -- solver runs -------------------------------------------------------------


@dataclass
class SolveRun:
    n: int
    result: object
    l1_error: float | None


def _reference(spec: ExperimentSpec, x, u0):
    T = spec.final_time
    f = TEST_FUNCTIONS[spec.test_function]
    if spec.flux == "advection":
        return f(((x - T) + 1.0) % 2.0 - 1.0)
    if spec.test_function == "sine" and T < 1.0 / np.pi:
        return burgers_exact(x, T)
    if spec.test_function == "constant":
        return u0
    return None


def run_solve(spec: ExperimentSpec):
    fam = spec.weight_family() or WeightFamily("scheme-omega1")
    runs = []
    for n in spec.grid_sizes:
        cfg = SolveConfig(
            grid=UniformGrid(-1.0, 1.0, n),
            initial_condition=TEST_FUNCTIONS[spec.test_function],
            flux=FLUXES[spec.flux],
            final_time=spec.final_time,
            cfl=spec.cfl,
            weight_variant=fam,
        )
        res = solve(cfg)
        ref = _reference(spec, res.x, res.u0)
        err = None if ref is None else error_norms(res.u_final, ref, cfg.grid.dx)[0]
        runs.append(SolveRun(n, res, err))
    last = runs[-1].result
    rows = [["x", "u0", "uT"]]
    rows += [[fmt_raw(a), fmt_raw(b), fmt_raw(c)] for a, b, c in zip(last.x, last.u0, last.u_final)]
    errs = [r.l1_error for r in runs]
    rates = convergence_rates(errs) if len(runs) > 1 and all(e is not None and e > 0 for e in errs) else []
    for j, run in enumerate(runs):
        res = run.result
        rows.append(
            [
                "#summary",
                f"n={run.n}",
                f"steps={res.time_steps}",
                f"overshoot={fmt_raw(res.overshoot)}",
                f"min_uT={fmt_raw(res.min_uT)}",
                f"max_uT={fmt_raw(res.max_uT)}",
                "l1_error=" + ("" if run.l1_error is None else fmt_error(run.l1_error)),
                "rate_l1=" + (fmt_rate(rates[j - 1]) if j and rates else ""),
            ]
        )
    return runs, rows
