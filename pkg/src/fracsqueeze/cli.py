"""Command line interface.

Subcommands: sweep (run the grid), analyze (fit the ladders), plot
(emit figure data), toy (hierarchical-chain verification), dynamics
(vacuum trajectory of one chain).  Exit codes: 0 on success, 1 for
configuration errors, 2 when outputs contain partial failures.
"""

import argparse
import os
import sys

import numpy as np

from ._version import __version__
from .analysis import DEFAULT_ALPHA_WINDOWS, analyze_run, parse_analysis_csv
from .chains import build_squeeze_chain
from .dynamics import default_r_samples, evolve_vacuum, save_trajectory
from .figures import emit_plot_data
from .sweep import SweepConfig, parse_sweep_csv, run_sweep
from .toy import all_passed, format_report, verify_hierarchical


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract reserves
    # 2 for partial failures, so remap usage errors to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    p = _Parser(
        prog="fracsqueeze",
        description="Spectra, finite-size scaling and vacuum dynamics of "
        "generalized-squeezing chains.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="run the (n, N) grid and persist results")
    sp.add_argument("--n-min", type=float, default=0.0)
    sp.add_argument("--n-max", type=float, default=6.0)
    sp.add_argument("--n-step", type=float, default=0.1)
    sp.add_argument("--ladder-base", type=int, default=250)
    sp.add_argument("--doublings", type=int, default=7)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--out", required=True, help="run directory to create/use")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--resume", action="store_true",
                    help="keep existing cells, compute only missing ones")
    sp.add_argument("--desk", action="store_true",
                    help="cap the ladder at 5 doublings (N <= 8000) for quick runs")

    ap = sub.add_parser("analyze", help="fit the ladders of a finished sweep")
    ap.add_argument("--run", required=True)
    ap.add_argument("--alpha-windows", action="append", metavar="SERIES:LO:HI",
                    help="line-fit window like e:0.5:1.5 or m:2.5:3.5; "
                    "repeatable; given windows replace the defaults for "
                    "that series")

    pp = sub.add_parser("plot", help="emit per-panel plot data and a gnuplot script")
    pp.add_argument("--run", required=True)

    tp = sub.add_parser("toy", help="verify the hierarchical toy chains")
    tp.add_argument("--max-size", type=int, default=8)
    tp.add_argument("--ratios", default="10,100",
                    help="comma-separated coupling ratios")

    dp = sub.add_parser("dynamics", help="vacuum trajectory of one squeeze chain")
    dp.add_argument("--n", type=float, required=True, help="squeezing order")
    dp.add_argument("--N", type=int, default=250, help="truncation size (even)")
    dp.add_argument("--r-max", type=float, default=None,
                    help="window end; default 3*pi/E_min")
    dp.add_argument("--samples", type=int, default=2048)
    dp.add_argument("--out", required=True, help="trajectory CSV path")
    return p


def _parse_alpha_windows(specs):
    if not specs:
        return None
    windows = {"e": [], "m": []}
    for spec in specs:
        parts = spec.split(":")
        if len(parts) != 3 or parts[0] not in ("e", "m"):
            raise ValueError("bad alpha window %r, expected SERIES:LO:HI" % spec)
        lo, hi = float(parts[1]), float(parts[2])
        if not lo < hi:
            raise ValueError("bad alpha window %r, needs LO < HI" % spec)
        windows[parts[0]].append((lo, hi))
    for key in ("e", "m"):
        if not windows[key]:
            windows[key] = list(DEFAULT_ALPHA_WINDOWS[key])
    return windows


def _cmd_sweep(args):
    doublings = min(args.doublings, 5) if args.desk else args.doublings
    config = SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        n_step=args.n_step,
        ladder_base=args.ladder_base,
        ladder_doublings=doublings,
        tol=args.tol,
        output_dir=args.out,
        workers=args.workers,
        resume=args.resume,
    )
    run_dir = run_sweep(config)
    records = parse_sweep_csv(os.path.join(run_dir, "sweep.csv"))
    failed = sum(1 for r in records if r.status != "ok")
    print("run directory: %s" % run_dir)
    print("cells: %d total, %d failed" % (len(records), failed))
    return 2 if failed else 0


def _cmd_analyze(args):
    windows = _parse_alpha_windows(args.alpha_windows)
    out_dir = analyze_run(args.run, alpha_windows=windows)
    rows = parse_analysis_csv(os.path.join(out_dir, "analysis.csv"))
    failed = sum(1 for r in rows if r.status != "ok")
    print("analysis directory: %s" % out_dir)
    print("orders: %d total, %d failed" % (len(rows), failed))
    return 2 if failed else 0


def _cmd_plot(args):
    plots = emit_plot_data(args.run)
    print("plot data in: %s" % plots)
    return 0


def _cmd_toy(args):
    ratios = [float(tok) for tok in args.ratios.split(",") if tok.strip()]
    if not ratios:
        raise ValueError("need at least one ratio")
    report = verify_hierarchical(max_size=args.max_size, ratios=ratios)
    print(format_report(report))
    return 0 if all_passed(report) else 2


def _cmd_dynamics(args):
    chain = build_squeeze_chain(args.N, args.n)
    if args.r_max is not None:
        if args.r_max <= 0.0:
            raise ValueError("--r-max must be positive")
        r = np.linspace(0.0, args.r_max, args.samples)
    else:
        if args.N % 2:
            raise ValueError("default window needs even N; give --r-max for odd N")
        r = default_r_samples(chain, samples=args.samples)
    traj = evolve_vacuum(chain, r)
    save_trajectory(traj, args.out)
    print("trajectory: %s" % args.out)
    print("samples: %d, window end: %.6g, amplitude of <m>: %.6g"
          % (len(r), float(r[-1]), traj.amplitude))
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "analyze": _cmd_analyze,
    "plot": _cmd_plot,
    "toy": _cmd_toy,
    "dynamics": _cmd_dynamics,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OverflowError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
