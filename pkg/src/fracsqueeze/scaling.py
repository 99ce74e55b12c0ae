"""Finite-size scaling fits over truncation ladders.

Two models cover everything the analysis needs:

    power_offset:  y = offset + prefactor * N^(-alpha)
    logarithmic:   y = offset + prefactor * ln N

The power fit is solved by variable projection: for fixed alpha the
(offset, prefactor) pair is an exact linear least-squares solution, so
only alpha needs a one-dimensional search (coarse grid, then golden
section, then one parabolic polish).  Model choice between the two is
made with a small-sample corrected information score rather than by
eyeballing residuals.  A least-squares line with its zero crossing
handles the alpha(n) segments.
"""

import math
from dataclasses import dataclass

import numpy as np

ALPHA_BRACKET = (-3.0, 3.0)
ALPHA_SEED_POINTS = 121
# Exponents closer to zero than half a seed cell are not identifiable:
# N^(-a) is affine in ln N to better than a^2 across any practical
# ladder, so offset and prefactor diverge against each other and the
# model degenerates into the logarithmic one.  The search stays out of
# (-0.025, 0.025); a fit pinned to that boundary is reported as not
# converged, which is how a ladder with genuinely logarithmic scaling
# shows up (the classic "power-law fit fails" situation).
DEGENERATE_ALPHA = 0.025
GOLDEN_TOL = 1e-9
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ScalingFit:
    """One fitted ladder: model tag, parameters, and fit quality."""

    model: str
    offset: float
    prefactor: float
    exponent: float  # NaN for the logarithmic model
    sse: float
    n_points: int
    converged: bool


@dataclass(frozen=True)
class LineFit:
    """Least-squares line with its zero crossing."""

    slope: float
    intercept: float
    root: float  # NaN when the slope is too small to define one
    sse: float


def _as_ladder(points, min_points):
    pts = [(float(a), float(b)) for a, b in points]
    if len(pts) < min_points:
        raise ValueError("need at least %d points, got %d" % (min_points, len(pts)))
    nn = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    if np.any(nn <= 0.0):
        raise ValueError("ladder sizes must be positive")
    if np.unique(nn).shape[0] < 2:
        raise ValueError("ladder sizes are all equal; fit is rank deficient")
    # sorted by N so the result cannot depend on input ordering
    order = np.argsort(nn, kind="stable")
    return nn[order], y[order]


def _linear_solve(design, rhs):
    coef, _, _, _ = np.linalg.lstsq(design, rhs, rcond=None)
    r = rhs - design @ coef
    return coef, float(r @ r)


def _power_sse(alpha, nn, y, w):
    g = nn ** (-alpha)
    a = np.column_stack([np.ones_like(nn), g])
    if w is not None:
        a = a * w[:, None]
        coef, sse = _linear_solve(a, y * w)
    else:
        coef, sse = _linear_solve(a, y)
    return sse, coef


def fit_power_offset(points, relative_weights=False):
    """Fit y = offset + prefactor * N^(-alpha) to a ladder.

    alpha is located by a 121-point seed grid on [-3, 3], golden-section
    refinement inside the best grid cell, and a final parabolic step;
    offset and prefactor come from the exact linear subproblem at the
    winning alpha.  The band |alpha| < DEGENERATE_ALPHA is excluded from
    the search (see the constant's comment for why).  converged goes
    false when the optimum sits on the edge of the alpha bracket or is
    pinned to the exclusion boundary.  relative_weights=True weights
    each row by 1/|y| (rows with y = 0 are left unweighted), for callers
    who prefer relative rather than absolute residuals; the default is
    the plain unweighted fit.
    """
    nn, y = _as_ladder(points, 4)
    w = None
    if relative_weights:
        w = np.where(y != 0.0, 1.0 / np.abs(y), 1.0)

    lo_edge, hi_edge = ALPHA_BRACKET
    grid = np.linspace(lo_edge, hi_edge, ALPHA_SEED_POINTS)
    sses = np.array(
        [
            _power_sse(a, nn, y, w)[0] if abs(a) >= DEGENERATE_ALPHA else math.inf
            for a in grid
        ]
    )
    best = int(np.argmin(sses))
    converged = 0 < best < ALPHA_SEED_POINTS - 1

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, ALPHA_SEED_POINTS - 1)]
    # keep the refinement cell clear of the degenerate neighbourhood of
    # alpha = 0 (the excluded seed sits between the two cells around it)
    if grid[best] < 0.0 and hi > -DEGENERATE_ALPHA:
        hi = -DEGENERATE_ALPHA
    elif grid[best] > 0.0 and lo < DEGENERATE_ALPHA:
        lo = DEGENERATE_ALPHA

    # golden section down to an alpha bracket of width GOLDEN_TOL
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = _power_sse(x1, nn, y, w)[0]
    f2 = _power_sse(x2, nn, y, w)[0]
    while hi - lo > GOLDEN_TOL:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = _power_sse(x1, nn, y, w)[0]
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = _power_sse(x2, nn, y, w)[0]

    candidates = [x1, x2, 0.5 * (lo + hi), lo, hi]
    # one parabolic interpolation through the bracket, helps the exact
    # recovery cases where the sse minimum is extremely sharp
    a, b, c = lo, 0.5 * (lo + hi), hi
    fa = _power_sse(a, nn, y, w)[0]
    fb = _power_sse(b, nn, y, w)[0]
    fc = _power_sse(c, nn, y, w)[0]
    den = (b - a) * (fb - fc) - (b - c) * (fb - fa)
    if den != 0.0:
        vertex = b - 0.5 * ((b - a) ** 2 * (fb - fc) - (b - c) ** 2 * (fb - fa)) / den
        if lo_edge <= vertex <= hi_edge and abs(vertex) >= DEGENERATE_ALPHA:
            candidates.append(vertex)

    alpha = min(candidates, key=lambda t: _power_sse(t, nn, y, w)[0])
    if abs(alpha) <= DEGENERATE_ALPHA * (1.0 + 1e-9):
        converged = False
    sse, coef = _power_sse(alpha, nn, y, w)
    return ScalingFit(
        model="power_offset",
        offset=float(coef[0]),
        prefactor=float(coef[1]),
        exponent=float(alpha),
        sse=sse,
        n_points=int(nn.shape[0]),
        converged=bool(converged),
    )


def fit_log(points):
    """Exact least squares for y = offset + prefactor * ln N."""
    nn, y = _as_ladder(points, 2)
    a = np.column_stack([np.ones_like(nn), np.log(nn)])
    coef, sse = _linear_solve(a, y)
    return ScalingFit(
        model="logarithmic",
        offset=float(coef[0]),
        prefactor=float(coef[1]),
        exponent=math.nan,
        sse=sse,
        n_points=int(nn.shape[0]),
        converged=True,
    )


def _information_score(sse, m, k):
    """Small-sample corrected information score; lower is better."""
    if m - k - 1 <= 0:
        return math.inf
    sse = max(sse, 1e-300)
    return m * math.log(sse / m) + 2.0 * k + 2.0 * k * (k + 1.0) / (m - k - 1.0)


def select_model(points):
    """Fit both ladder models and keep the better-scoring one.

    Returns (winner, diagnostics); diagnostics carry both fits and the
    score gap so callers can report how close the call was.
    """
    power = fit_power_offset(points)
    log = fit_log(points)
    m = power.n_points
    score_power = _information_score(power.sse, m, 3)
    score_log = _information_score(log.sse, m, 2)
    winner = power if score_power <= score_log else log
    diagnostics = {
        "power": power,
        "log": log,
        "score_power": score_power,
        "score_log": score_log,
        "score_gap": score_log - score_power,
    }
    return winner, diagnostics


def fit_line_with_root(points):
    """Ordinary least-squares line y = slope*x + intercept and its root.

    The root is where the line crosses zero; it is NaN when the slope
    magnitude falls below 1e-12, which keeps near-horizontal segments
    from reporting a wild crossing.
    """
    pts = [(float(a), float(b)) for a, b in points]
    if len(pts) < 2:
        raise ValueError("need at least 2 points for a line")
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    if np.unique(x).shape[0] < 2:
        raise ValueError("line fit needs at least two distinct x values")
    order = np.argsort(x, kind="stable")
    x, y = x[order], y[order]
    a = np.column_stack([x, np.ones_like(x)])
    coef, sse = _linear_solve(a, y)
    slope, intercept = float(coef[0]), float(coef[1])
    root = -intercept / slope if abs(slope) >= 1e-12 else math.nan
    return LineFit(slope=slope, intercept=intercept, root=root, sse=sse)
