"""``dbweno-bench``: run the benchmark experiments and write CSV files.

Subcommands: ``converge``, ``boundedness``, ``region``, ``solve``.  A
``--config FILE`` in TOML ``key = value`` form may set any option (keys
are the long flag names with ``-`` replaced by ``_``); flags given on the
command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .experiments import (
    TABLE_SIZES,
    TEST_FUNCTIONS,
    ExperimentSpec,
    run_boundedness,
    run_converge,
    run_region_table,
    run_solve,
)
from ..weights import FAMILY_NAMES

COMMANDS = ("converge", "boundedness", "region", "solve")

DEFAULTS = {
    "order": 3,
    "mode": "interp",
    "family": None,
    "eta": None,
    "k": None,
    "function": None,
    "flux": "advection",
    "tfinal": 2.0,
    "cfl": 0.4,
    "out": "-",
    "layout": "ghost",
    "r_min": -10.0,
    "r_max": 10.0,
    "r_step": 0.01,
    "plot_script": None,
}

DEFAULT_N = {
    "converge": TABLE_SIZES,
    "boundedness": (20,),
    "region": (20,),
    "solve": (200,),
}

DEFAULT_FUNCTION = {"converge": "sine", "boundedness": "step", "region": "sine", "solve": "step"}


class UsageError(Exception):
    pass


def _sizes(value):
    if isinstance(value, (list, tuple)):
        return tuple(int(v) for v in value)
    try:
        return tuple(int(v) for v in str(value).replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--n expects a list of integers, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # every default is None so a config file can fill in what the user left out
    common.add_argument("--config", help="TOML file of key = value option defaults")
    common.add_argument("--order", type=int, choices=(3, 4))
    common.add_argument("--mode", choices=("interp", "recon"))
    common.add_argument("--family", choices=FAMILY_NAMES)
    common.add_argument("--eta", type=float)
    common.add_argument("--k", type=float)
    common.add_argument("--n", help="grid sizes, e.g. '40,80,160'")
    common.add_argument("--function", choices=tuple(TEST_FUNCTIONS))
    common.add_argument("--flux", choices=("advection", "burgers"))
    common.add_argument("--tfinal", type=float)
    common.add_argument("--cfl", type=float)
    common.add_argument("--out", help="output CSV path, '-' for stdout")
    common.add_argument(
        "--layout",
        choices=("ghost", "periodic"),
        help="convergence grid: 'ghost' (n includes two ghost cells, the table layout) or 'periodic' (n cells)",
    )
    common.add_argument("--r-min", dest="r_min", type=float)
    common.add_argument("--r-max", dest="r_max", type=float)
    common.add_argument("--r-step", dest="r_step", type=float)
    common.add_argument("--plot-script", dest="plot_script", help="also write a gnuplot script for the CSV")

    parser = argparse.ArgumentParser(prog="dbweno-bench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("converge", parents=[common], help="interface error and rate table on sin(pi x)")
    sub.add_parser("boundedness", parents=[common], help="DB-WENO vs Lagrange bound violations")
    sub.add_parser("region", parents=[common], help="data-bounded region and weight values along r")
    sub.add_parser("solve", parents=[common], help="run the WENO3 conservation-law solver")
    return parser


def load_config(path: str) -> dict:
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)
    out = {}
    for key, value in raw.items():
        key = key.replace("-", "_")
        if key not in DEFAULTS and key != "n":
            raise UsageError(f"unknown config key {key!r} in {path}")
        out[key] = value
    return out


def resolve_options(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    opts["n"] = DEFAULT_N[args.command]
    opts["function"] = DEFAULT_FUNCTION[args.command]
    if args.config:
        opts.update(load_config(args.config))
    for key in list(DEFAULTS) + ["n"]:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    opts["n"] = _sizes(opts["n"])
    return opts


def make_spec(command: str, opts: dict) -> ExperimentSpec:
    kind = {
        "converge": f"converge-{opts['mode']}",
        "boundedness": "boundedness",
        "region": "region-table",
        "solve": "solve",
    }[command]
    if command == "solve" and opts["family"] is None:
        opts["family"] = "scheme-omega1"
    return ExperimentSpec(
        kind=kind,
        test_function=opts["function"],
        grid_sizes=opts["n"],
        order=int(opts["order"]),
        family=opts["family"],
        eta=opts["eta"],
        k=opts["k"],
        flux=opts["flux"],
        final_time=float(opts["tfinal"]),
        cfl=float(opts["cfl"]),
        layout=opts["layout"],
        mode=opts["mode"],
        r_range=(float(opts["r_min"]), float(opts["r_max"]), float(opts["r_step"])),
        out=opts["out"],
    )


def run(spec: ExperimentSpec):
    if spec.kind.startswith("converge"):
        return run_converge(spec)
    if spec.kind == "boundedness":
        return run_boundedness(spec)
    if spec.kind == "region-table":
        return run_region_table(spec)
    return run_solve(spec)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


_PLOT_COLUMNS = {
    "converge": ("1", ["2", "4"], "set logscale xy"),
    "boundedness": ("1", ["2", "3", "4", "5", "6", "7"], ""),
    "region": ("1", ["2", "3", "4"], ""),
    "solve": ("1", ["2", "3"], ""),
}


def plot_script(command: str, csv_path: str, header) -> str:
    """A small gnuplot script drawing every data column against the first."""
    x, ys, extra = _PLOT_COLUMNS[command]
    lines = [
        f"# plots {csv_path}; run with: gnuplot -p <this file>",
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set datafile commentschars '#'",
    ]
    if extra:
        lines.append(extra)
    plots = [f"'{csv_path}' using {x}:{y} with linespoints title '{header[int(y) - 1]}'" for y in ys]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve_options(args)
        spec = make_spec(args.command, opts)
        _, rows = run(spec)
    except (UsageError, ValueError, OSError, tomllib.TOMLDecodeError) as exc:
        print(f"dbweno-bench {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"dbweno-bench {args.command}: failed: {exc}", file=sys.stderr)
        return 1
    text = rows_to_csv(rows)
    out = opts["out"]
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    if opts["plot_script"]:
        target = "/dev/stdin" if out == "-" else out
        with open(opts["plot_script"], "w") as fh:
            fh.write(plot_script(args.command, target, rows[0]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
