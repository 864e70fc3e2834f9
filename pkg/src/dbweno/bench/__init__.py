"""Benchmark experiments and the ``dbweno-bench`` command line."""

from .experiments import (
    ExperimentSpec,
    run_boundedness,
    run_converge,
    run_region_table,
    run_solve,
)
