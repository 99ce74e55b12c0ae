"""Plot-data emission for the standard figure set.

Each figure panel gets one plain-text data file under <run>/plots with
a commented header naming the columns and the log-scale axes; multiple
series inside a file are separated by double blank lines so gnuplot
can address them with `index`.  A generated plot_all.gp renders every
panel from the data files alone.

Panels:
  fig1a  E_min vs n, one series per N           fig1b  E_min vs N for n in [2,3]
  fig2a  fitted E_min,inf vs n + sqrt(Gamma)    fig2b  alpha_E vs n + line fits
  fig3a  <m> vs n, one series per N             fig3b  photon number vs n per N
  fig4a  <m> vs N per integer n (log-log)       fig4b  same, semilog x
  fig5a  power-fit A (n<4) and B (n>4)          fig5b  alpha_m vs n + line fits
"""

import json
import math
import os

from .analysis import parse_analysis_csv
from .sweep import format_order, parse_sweep_csv

_PANEL_ORDER = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3a",
    "fig3b", "fig4a", "fig4b", "fig5a", "fig5b",
]


def _write_panel(path, description, log_axes, columns, blocks):
    """blocks: list of (label, rows); rows are lists of strings."""
    with open(path, "w") as fh:
        fh.write("# %s\n" % description)
        fh.write("# log-scale: %s\n" % (log_axes if log_axes else "none"))
        fh.write("# columns: %s\n" % columns)
        for i, (label, rows) in enumerate(blocks):
            if i:
                fh.write("\n\n")
            fh.write("# series: %s\n" % label)
            for row in rows:
                fh.write(" ".join(row) + "\n")


def _f(x):
    return "%.16e" % x


def _line_blocks(entries):
    """Sampled line segments for the alpha(n) fits, one block each."""
    blocks = []
    for entry in entries:
        if "slope" not in entry:
            continue
        lo, hi = entry["window"]
        stop = hi
        if "root" in entry and math.isfinite(entry["root"]):
            stop = max(hi, entry["root"]) + 0.1
        rows = []
        for i in range(51):
            x = lo + (stop - lo) * i / 50.0
            y = entry["slope"] * x + entry["intercept"]
            rows.append([_f(x), _f(y)])
        blocks.append(("line fit on window [%g, %g]" % (lo, hi), rows))
    return blocks


def emit_plot_data(run_dir):
    """Write fig*.dat and plot_all.gp under <run_dir>/plots."""
    sweep_path = os.path.join(run_dir, "sweep.csv")
    analysis_path = os.path.join(run_dir, "analysis.csv")
    lines_path = os.path.join(run_dir, "alpha_lines.json")
    for p in (sweep_path, analysis_path, lines_path):
        if not os.path.exists(p):
            raise FileNotFoundError("missing analysis input %s" % p)

    records = [r for r in parse_sweep_csv(sweep_path) if r.status == "ok"]
    rows = parse_analysis_csv(analysis_path)
    with open(lines_path) as fh:
        alpha_lines = json.load(fh)

    plots = os.path.join(run_dir, "plots")
    os.makedirs(plots, exist_ok=True)

    sizes = sorted({r.N for r in records})
    orders = sorted({r.n for r in records})
    by_size = {s: sorted((r for r in records if r.N == s), key=lambda r: r.n)
               for s in sizes}
    by_order = {n: sorted((r for r in records if r.n == n), key=lambda r: r.N)
                for n in orders}
    counts = {}

    def emit(name, description, log_axes, columns, blocks):
        _write_panel(os.path.join(plots, name + ".dat"),
                     description, log_axes, columns, blocks)
        counts[name] = len(blocks)

    emit(
        "fig1a",
        "smallest positive eigenvalue vs squeezing order, one series per size",
        "y",
        "n e_min",
        [("N=%d" % s, [[format_order(r.n), _f(r.e_min)] for r in by_size[s]])
         for s in sizes],
    )

    fig1b_orders = [n for n in orders if 2.0 - 1e-9 <= n <= 3.0 + 1e-9]
    emit(
        "fig1b",
        "smallest positive eigenvalue vs truncation size for orders in [2, 3]",
        "x y",
        "N e_min",
        [("n=%s" % format_order(n),
          [["%d" % r.N, _f(r.e_min)] for r in by_order[n]])
         for n in fig1b_orders],
    )

    fig2a_rows = []
    for row in rows:
        if row.status != "ok":
            continue
        clamped = row.e_inf < 0.0
        e_inf = 0.0 if clamped else row.e_inf
        fig2a_rows.append(
            [format_order(row.n), _f(e_inf), _f(row.gamma_ref),
             "1" if clamped else "0"]
        )
    emit(
        "fig2a",
        "fitted asymptotic E_min vs order with sqrt(Gamma(n+1)) reference; "
        "negative fits clamped to 0 and flagged",
        "none",
        "n e_inf gamma_ref clamped",
        [("asymptotic values", fig2a_rows)],
    )

    alpha_e_rows = [[format_order(r.n), _f(r.alpha_e)]
                    for r in rows if r.status == "ok" and math.isfinite(r.alpha_e)]
    emit(
        "fig2b",
        "power-law exponent of the E_min ladder vs order, with window line fits",
        "none",
        "n alpha_e",
        [("alpha_E samples", alpha_e_rows)]
        + _line_blocks(alpha_lines.get("alpha_e", [])),
    )

    emit(
        "fig3a",
        "renormalized number expectation vs order, one series per size",
        "y",
        "n m_expect",
        [("N=%d" % s, [[format_order(r.n), _f(r.m_expect)] for r in by_size[s]])
         for s in sizes],
    )

    emit(
        "fig3b",
        "photon number n*<m> vs order, one series per size",
        "y",
        "n photon_number",
        [("N=%d" % s,
          [[format_order(r.n), _f(r.n * r.m_expect)] for r in by_size[s]])
         for s in sizes],
    )

    fig4_orders = [n for n in orders
                   if any(abs(n - k) < 1e-9 for k in range(0, 7))]
    fig4_blocks = [("n=%s" % format_order(n),
                    [["%d" % r.N, _f(r.m_expect)] for r in by_order[n]])
                   for n in fig4_orders]
    emit(
        "fig4a",
        "renormalized number expectation vs size for integer orders",
        "x y",
        "N m_expect",
        fig4_blocks,
    )
    emit(
        "fig4b",
        "renormalized number expectation vs size for integer orders, "
        "logarithmic size axis only",
        "x",
        "N m_expect",
        fig4_blocks,
    )

    fig5a_rows = []
    for row in rows:
        if row.status != "ok" or row.model_m != "power_offset":
            continue
        a = row.a_m if row.n < 4.0 else math.nan
        b = row.b_m if row.n > 4.0 else math.nan
        fig5a_rows.append([format_order(row.n), _f(a), _f(b)])
    emit(
        "fig5a",
        "power-fit amplitude A below order 4 and offset B above order 4",
        "none",
        "n a_m b_m",
        [("fit parameters", fig5a_rows)],
    )

    alpha_m_rows = [[format_order(r.n), _f(r.alpha_m)]
                    for r in rows if r.status == "ok" and math.isfinite(r.alpha_m)]
    emit(
        "fig5b",
        "power-law exponent of the <m> ladder vs order, with window line fits; "
        "orders where model selection preferred the logarithmic form are absent",
        "none",
        "n alpha_m",
        [("alpha_m samples", alpha_m_rows)]
        + _line_blocks(alpha_lines.get("alpha_m", [])),
    )

    _write_gnuplot_script(plots, counts)
    return plots


_AXIS_LABELS = {
    "fig1a": ("n", "E_min"),
    "fig1b": ("N", "E_min"),
    "fig2a": ("n", "E_min,inf"),
    "fig2b": ("n", "alpha_E"),
    "fig3a": ("n", "<m>"),
    "fig3b": ("n", "n<m>"),
    "fig4a": ("N", "<m>"),
    "fig4b": ("N", "<m>"),
    "fig5a": ("n", "A, B"),
    "fig5b": ("n", "alpha_m"),
}

_LOG_AXES = {
    "fig1a": "y", "fig1b": "xy", "fig2a": "", "fig2b": "", "fig3a": "y",
    "fig3b": "y", "fig4a": "xy", "fig4b": "x", "fig5a": "", "fig5b": "",
}


def _write_gnuplot_script(plots, counts):
    lines = [
        "# Renders every panel from the fig*.dat files in this directory.",
        "# Usage: gnuplot plot_all.gp",
        "set terminal pngcairo size 900,650",
        "set datafile missing 'nan'",
        "set key outside",
        "",
    ]
    for name in _PANEL_ORDER:
        if name not in counts:
            continue
        xlabel, ylabel = _AXIS_LABELS[name]
        lines.append("set output '%s.png'" % name)
        lines.append("unset logscale")
        log = _LOG_AXES[name]
        if log:
            lines.append("set logscale %s" % log)
        lines.append("set xlabel '%s'" % xlabel)
        lines.append("set ylabel '%s'" % ylabel)
        nblocks = counts[name]
        if name == "fig5a":
            lines.append(
                "plot 'fig5a.dat' index 0 using 1:2 with points title 'A (n<4)', "
                "'fig5a.dat' index 0 using 1:3 with points title 'B (n>4)'"
            )
        elif nblocks == 1:
            lines.append(
                "plot '%s.dat' index 0 using 1:2 with linespoints title '%s'"
                % (name, ylabel)
            )
        else:
            lines.append(
                "plot for [i=0:%d] '%s.dat' index i using 1:2 "
                "with linespoints pointsize 0.4 title sprintf('series %%d', i)"
                % (nblocks - 1, name)
            )
        lines.append("")
    with open(os.path.join(plots, "plot_all.gp"), "w") as fh:
        fh.write("\n".join(lines) + "\n")
