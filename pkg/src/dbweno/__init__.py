"""Data-bounded WENO interpolation, reconstruction and a WENO3 scheme."""

from .approximator import (
    InterfaceValue,
    cell_averages,
    interp3_minus,
    interp3_periodic,
    interp3_plus,
    interp4_periodic,
    interp4_plus,
    lagrange3_periodic,
    lagrange3_plus,
    lagrange4_periodic,
    lagrange4_plus,
    recon3_periodic,
    recon3_plus,
    recon4_periodic,
    recon4_plus,
    sub_values_minus,
    sub_values_plus,
)
from .oracles import (
    BoundednessReport,
    RateReport,
    brute_force_bounded,
    convergence_rates,
    error_norms,
    find_violation,
)
from .region import (
    RegionSide,
    WeightInterval,
    corollary_J,
    corollary_K,
    in_weno_region,
    lemma1_interval,
    lemma2_interval,
    sample_region,
    theorem1_alpha_interval,
)
from .solver import (
    ADVECTION,
    BURGERS,
    FluxFunction,
    SolveConfig,
    SolveResult,
    SolverError,
    global_lf_split,
    semi_discrete_rhs,
    solve,
    ssp_rk3_step,
    weno3_flux,
)
from .stencil import (
    DataBounds,
    Mode,
    SmoothnessPair,
    Stencil3,
    Stencil4,
    UniformGrid,
    data_bounds,
    differences,
    smoothness,
)
from .weights import FAMILY_NAMES, WeightFamily, WeightPair, omega0_scheme

__version__ = "0.1.0"
