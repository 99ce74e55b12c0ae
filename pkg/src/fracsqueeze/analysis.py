"""Scaling analysis over a persisted sweep.

For every squeezing order n in a run, the truncation ladder is fitted
twice: E_min against the offset power law, and ⟨m⟩ against whichever of
the power-law and logarithmic models scores better.  The per-n fit
results land in analysis.csv together with the gamma-function and
Stirling reference values the asymptotics are compared against.  The
exponent-versus-n samples are then reduced to least-squares lines on
configurable n windows, whose zero crossings are the headline numbers
of the analysis; those go to alpha_lines.json.
"""

import json
import math
import os
from dataclasses import dataclass

from .scaling import fit_line_with_root, fit_power_offset, select_model
from .sweep import format_order, parse_sweep_csv

ANALYSIS_HEADER = (
    "n,e_inf,de,alpha_e,sse_e,model_m,a_m,alpha_m,b_m,sse_m,"
    "gamma_ref,stirling_ref,status"
)

# n windows for the alpha(n) line fits, away from the special points
# n=2 and n=4 where the curves bend
DEFAULT_ALPHA_WINDOWS = {
    "e": ((0.5, 1.5), (2.5, 3.5)),
    "m": ((2.5, 3.5), (4.5, 5.5)),
}


@dataclass(frozen=True)
class AnalysisRow:
    """Fit results and reference values for one squeezing order."""

    n: float
    e_inf: float
    de: float
    alpha_e: float
    sse_e: float
    model_m: str
    a_m: float
    alpha_m: float
    b_m: float
    sse_m: float
    gamma_ref: float
    stirling_ref: float
    status: str


def gamma_reference(n):
    """sqrt(Gamma(n+1)), the coupling scale E_min approaches at large n."""
    return math.exp(0.5 * math.lgamma(n + 1.0))


def stirling_reference(n):
    """Stirling approximation sqrt(2 pi n) (n/e)^n of Gamma(n+1), n > 0."""
    if n <= 0.0:
        return math.nan
    return math.sqrt(2.0 * math.pi * n) * (n / math.e) ** n


def _nan_row(n, status):
    return AnalysisRow(
        n=n,
        e_inf=math.nan,
        de=math.nan,
        alpha_e=math.nan,
        sse_e=math.nan,
        model_m="none",
        a_m=math.nan,
        alpha_m=math.nan,
        b_m=math.nan,
        sse_m=math.nan,
        gamma_ref=gamma_reference(n),
        stirling_ref=stirling_reference(n),
        status=status,
    )


def format_analysis_row(row):
    return "%s,%.16e,%.16e,%.16e,%.16e,%s,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%s" % (
        format_order(row.n),
        row.e_inf,
        row.de,
        row.alpha_e,
        row.sse_e,
        row.model_m,
        row.a_m,
        row.alpha_m,
        row.b_m,
        row.sse_m,
        row.gamma_ref,
        row.stirling_ref,
        row.status,
    )


def parse_analysis_csv(path):
    rows = []
    with open(path) as fh:
        header = fh.readline().strip()
        if header != ANALYSIS_HEADER:
            raise ValueError("unexpected analysis.csv header %r" % header)
        for line in fh:
            line = line.strip()
            if not line:
                continue
            t = line.split(",")
            rows.append(
                AnalysisRow(
                    n=float(t[0]),
                    e_inf=float(t[1]),
                    de=float(t[2]),
                    alpha_e=float(t[3]),
                    sse_e=float(t[4]),
                    model_m=t[5],
                    a_m=float(t[6]),
                    alpha_m=float(t[7]),
                    b_m=float(t[8]),
                    sse_m=float(t[9]),
                    gamma_ref=float(t[10]),
                    stirling_ref=float(t[11]),
                    status=t[12],
                )
            )
    return rows


def _line_entry(window, samples):
    lo, hi = window
    pts = [
        (x, a)
        for (x, a) in samples
        if lo - 1e-9 <= x <= hi + 1e-9 and math.isfinite(a)
    ]
    entry = {"window": [lo, hi], "points": len(pts)}
    if len(pts) < 2:
        entry["error"] = "too few finite samples in window"
        return entry
    fit = fit_line_with_root(pts)
    entry["slope"] = fit.slope
    entry["intercept"] = fit.intercept
    entry["root"] = fit.root
    entry["sse"] = fit.sse
    return entry


def analyze_run(run_dir, alpha_windows=None):
    """Fit every n ladder of a run; write analysis.csv and alpha_lines.json.

    The line fits always consume the power-law exponents (for ⟨m⟩ the
    power fit is computed even where model selection prefers the
    logarithmic form, since the exponent trend is only defined for the
    power model).  Returns the run directory, which doubles as the
    analysis directory.
    """
    if alpha_windows is None:
        alpha_windows = DEFAULT_ALPHA_WINDOWS
    csv_path = os.path.join(run_dir, "sweep.csv")
    if not os.path.exists(csv_path):
        raise FileNotFoundError("no sweep.csv under %s" % run_dir)
    records = parse_sweep_csv(csv_path)

    groups = {}
    for rec in records:
        groups.setdefault(format_order(rec.n), []).append(rec)

    rows = []
    samples_e = []
    samples_m = []
    for key in sorted(groups, key=float):
        n = float(key)
        usable = [
            r
            for r in groups[key]
            if r.status == "ok"
            and math.isfinite(r.e_min)
            and math.isfinite(r.m_expect)
        ]
        if len(usable) < 4:
            rows.append(_nan_row(n, "fail:too_few_points"))
            continue
        try:
            e_fit = fit_power_offset([(r.N, r.e_min) for r in usable])
            m_fit, diag = select_model([(r.N, r.m_expect) for r in usable])
        except ValueError as exc:
            rows.append(_nan_row(n, "fail:%s" % type(exc).__name__))
            continue
        rows.append(
            AnalysisRow(
                n=n,
                e_inf=e_fit.offset,
                de=e_fit.prefactor,
                alpha_e=e_fit.exponent,
                sse_e=e_fit.sse,
                model_m=m_fit.model,
                a_m=m_fit.prefactor,
                alpha_m=m_fit.exponent,
                b_m=m_fit.offset,
                sse_m=m_fit.sse,
                gamma_ref=gamma_reference(n),
                stirling_ref=stirling_reference(n),
                status="ok",
            )
        )
        samples_e.append((n, e_fit.exponent))
        samples_m.append((n, diag["power"].exponent))

    with open(os.path.join(run_dir, "analysis.csv"), "w") as fh:
        fh.write(ANALYSIS_HEADER + "\n")
        for row in rows:
            fh.write(format_analysis_row(row) + "\n")

    lines = {
        "alpha_e": [_line_entry(w, samples_e) for w in alpha_windows.get("e", ())],
        "alpha_m": [_line_entry(w, samples_m) for w in alpha_windows.get("m", ())],
    }
    with open(os.path.join(run_dir, "alpha_lines.json"), "w") as fh:
        json.dump(lines, fh, indent=2, sort_keys=True)
        fh.write("\n")

    return run_dir
