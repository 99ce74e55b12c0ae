"""Grid sweeps over (n, N) cells with persisted, reproducible output.

A sweep walks the squeezing-order grid against a doubling ladder of
truncation sizes, solves each cell for E_min and ⟨m⟩, and persists one
CSV row per cell plus a JSON manifest of the exact configuration.  The
cells are independent, so they can be farmed out to a process pool;
results are collected keyed by cell and written in sorted order, which
makes the persisted bytes independent of scheduling (the wall_time_ms
column and the manifest timestamps are the only varying fields).
"""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from ._kernels import BACKEND
from ._version import __version__
from .chains import build_squeeze_chain
from .eigen import INVERSE_ITERATION_SEED, RESIDUAL_TOL, central_eigenpair

SWEEP_HEADER = "n,N,e_min,m_expect,residual,bisection_steps,wall_time_ms,status"


@dataclass(frozen=True)
class SweepConfig:
    """Grid definition and solver settings for one sweep run."""

    n_min: float = 0.0
    n_max: float = 6.0
    n_step: float = 0.1
    ladder_base: int = 250
    ladder_doublings: int = 7
    tol: float = 1e-12
    output_dir: str = "run"
    workers: int = 1
    resume: bool = False

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.n_step <= 0.0:
            raise ValueError("n_step must be positive")
        if self.n_min < 0.0:
            raise ValueError("squeezing orders are nonnegative")
        if self.ladder_base < 2 or self.ladder_base % 2:
            raise ValueError("ladder_base must be an even integer >= 2")
        if self.ladder_doublings < 0:
            raise ValueError("ladder_doublings must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class SweepRecord:
    """Result of one (n, N) cell."""

    n: float
    N: int
    e_min: float
    m_expect: float
    residual: float
    bisection_steps: int
    wall_time_ms: float
    status: str


def grid_values(config):
    """The n grid: n_min + i*step, rounded to 10 decimals, inclusive.

    The rounding keeps decimal steps like 0.1 from drifting, so the
    grid values are the exact decimals a reader expects.
    """
    values = []
    i = 0
    while True:
        v = round(config.n_min + i * config.n_step, 10)
        if v > config.n_max + 1e-12:
            break
        values.append(v)
        i += 1
    return values


def ladder_values(config):
    """Truncation sizes base * 2^k for k = 0 .. doublings."""
    return [config.ladder_base * 2 ** k for k in range(config.ladder_doublings + 1)]


def format_order(n):
    """Canonical text form of a grid value, also used as a cell key."""
    return "%.10g" % n


def _compute_cell(args):
    n, size, tol = args
    t0 = time.perf_counter()
    try:
        chain = build_squeeze_chain(size, n)
        pair = central_eigenpair(chain, tol=tol)
    except Exception as exc:  # isolate the cell, never kill the sweep
        wall = (time.perf_counter() - t0) * 1e3
        return SweepRecord(
            n=n,
            N=size,
            e_min=float("nan"),
            m_expect=float("nan"),
            residual=float("nan"),
            bisection_steps=0,
            wall_time_ms=wall,
            status="fail:%s" % type(exc).__name__,
        )
    wall = (time.perf_counter() - t0) * 1e3
    status = "ok" if pair.residual <= RESIDUAL_TOL else "fail:residual"
    return SweepRecord(
        n=n,
        N=size,
        e_min=pair.value,
        m_expect=pair.m_expect,
        residual=pair.residual,
        bisection_steps=pair.bisection_steps,
        wall_time_ms=wall,
        status=status,
    )


def format_record(rec):
    return "%s,%d,%.16e,%.16e,%.16e,%d,%.3f,%s" % (
        format_order(rec.n),
        rec.N,
        rec.e_min,
        rec.m_expect,
        rec.residual,
        rec.bisection_steps,
        rec.wall_time_ms,
        rec.status,
    )


def parse_sweep_csv(path):
    """Read sweep.csv back into SweepRecord objects."""
    records = []
    with open(path) as fh:
        header = fh.readline().strip()
        if header != SWEEP_HEADER:
            raise ValueError("unexpected sweep.csv header %r" % header)
        for line in fh:
            line = line.strip()
            if not line:
                continue
            tok = line.split(",")
            records.append(
                SweepRecord(
                    n=float(tok[0]),
                    N=int(tok[1]),
                    e_min=float(tok[2]),
                    m_expect=float(tok[3]),
                    residual=float(tok[4]),
                    bisection_steps=int(tok[5]),
                    wall_time_ms=float(tok[6]),
                    status=tok[7],
                )
            )
    return records


def run_sweep(config):
    """Execute every grid cell and persist sweep.csv plus manifest.json.

    Returns the run directory.  With resume=True, cells already present
    in an existing sweep.csv are kept as-is and only missing ones are
    computed.  Failures are recorded per cell in the status column.
    """
    run_dir = config.output_dir
    os.makedirs(run_dir, exist_ok=True)
    started = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())

    orders = grid_values(config)
    sizes = ladder_values(config)
    wanted = [(n, size) for n in orders for size in sizes]

    kept = {}
    csv_path = os.path.join(run_dir, "sweep.csv")
    if config.resume and os.path.exists(csv_path):
        for rec in parse_sweep_csv(csv_path):
            kept[(format_order(rec.n), rec.N)] = rec

    todo = [
        (n, size, config.tol)
        for (n, size) in wanted
        if (format_order(n), size) not in kept
    ]

    if config.workers > 1 and len(todo) > 1:
        chunk = max(1, len(todo) // (config.workers * 4))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            fresh = list(pool.map(_compute_cell, todo, chunksize=chunk))
    else:
        fresh = [_compute_cell(cell) for cell in todo]

    for rec in fresh:
        kept[(format_order(rec.n), rec.N)] = rec

    records = [
        kept[(format_order(n), size)]
        for (n, size) in wanted
        if (format_order(n), size) in kept
    ]
    records.sort(key=lambda r: (r.n, r.N))

    with open(csv_path, "w") as fh:
        fh.write(SWEEP_HEADER + "\n")
        for rec in records:
            fh.write(format_record(rec) + "\n")

    finished = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    manifest = {
        "artifact_version": __version__,
        "kernel_backend": BACKEND,
        "config": asdict(config),
        "grid": {"n": [format_order(n) for n in orders], "N": sizes},
        "seed": INVERSE_ITERATION_SEED,
        "started": started,
        "finished": finished,
        "cells_total": len(wanted),
        "cells_failed": sum(1 for r in records if r.status != "ok"),
    }
    with open(os.path.join(run_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")

    return run_dir
