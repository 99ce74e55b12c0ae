"""Verification of the hierarchical toy chains.

For couplings growing geometrically by a factor r, perturbation theory
predicts a fully decoupled level structure: the eigenvalues pair up as
plus/minus the couplings beta_{N-2}, beta_{N-4}, ... taken in steps of
two from the top, each correct to O(1/r^2); for even N the last pair
sits at the smallest coupling with its eigenvectors living on the two
lowest sites; for odd N an exact zero eigenvalue appears instead, with
its eigenvector concentrated on site 0.  verify_hierarchical measures
all of this on actual spectra and returns a pass/fail table.

The eigenvalues are taken from the bisection solver on purpose: dense
solvers only deliver absolute accuracy at the scale of the largest
coupling, which would eat the whole pairing tolerance at the lowest
level when the couplings span many decades.
"""

from dataclasses import dataclass

from .chains import build_hierarchical_chain
from .eigen import (
    eigenvalue_by_index,
    eigenvector_inverse_iteration,
    gershgorin_bound,
)

_TOL = 1e-13
PAIR_WEIGHT_MIN = 0.99
ZERO_WEIGHT_MIN = 0.98


@dataclass(frozen=True)
class ToyCheck:
    """One verified property of one (size, ratio) toy chain."""

    size: int
    ratio: float
    name: str
    passed: bool
    detail: str


def _check_pairing(chain, ratio):
    """Eigenvalues match +-beta_{N-2}, +-beta_{N-4}, ... level by level."""
    n = chain.size
    beta = chain.couplings
    tol = 2.0 / ratio ** 2
    worst = 0.0
    for level in range(n // 2):
        expected = beta[n - 2 - 2 * level]
        top = eigenvalue_by_index(chain, n - 1 - level, tol=_TOL)
        bot = eigenvalue_by_index(chain, level, tol=_TOL)
        worst = max(
            worst,
            abs(top - expected) / expected,
            abs(bot + expected) / expected,
        )
    return worst <= tol, "max level error %.3e (allowed %.3e)" % (worst, tol)


def _check_central_pair(chain):
    """Even N: both central eigenvectors sit on the two lowest sites."""
    n = chain.size
    least = 1.0
    for k in (n // 2 - 1, n // 2):
        lam = eigenvalue_by_index(chain, k, tol=_TOL)
        vec, _, _ = eigenvector_inverse_iteration(chain, lam)
        least = min(least, float(vec[0] ** 2 + vec[1] ** 2))
    ok = least >= PAIR_WEIGHT_MIN
    return ok, "min weight on sites {0,1}: %.6f (needs %.2f)" % (
        least,
        PAIR_WEIGHT_MIN,
    )


def _check_zero_mode(chain):
    """Odd N: a numerically exact zero eigenvalue, localized on site 0."""
    n = chain.size
    g = gershgorin_bound(chain)
    lam = eigenvalue_by_index(chain, (n - 1) // 2, tol=_TOL)
    if abs(lam) > 1e-9 * g:
        return False, "central eigenvalue %.3e exceeds 1e-9 * G = %.3e" % (
            abs(lam),
            1e-9 * g,
        )
    vec, _, _ = eigenvector_inverse_iteration(chain, lam)
    w0 = float(vec[0] ** 2)
    ok = w0 >= ZERO_WEIGHT_MIN
    return ok, "zero at %.3e; weight on site 0: %.6f (needs %.2f)" % (
        abs(lam),
        w0,
        ZERO_WEIGHT_MIN,
    )


def verify_hierarchical(max_size=8, ratios=(10.0, 100.0)):
    """Run all toy checks for sizes 2..max_size at each coupling ratio.

    Returns a list of ToyCheck rows; failures are reported, never
    raised, so a single broken case leaves the rest of the table
    intact.
    """
    if max_size > 64:
        raise ValueError("toy verification is limited to sizes up to 64")
    if max_size < 2:
        raise ValueError("need max_size of at least 2")
    report = []
    for ratio in ratios:
        for size in range(2, max_size + 1):
            chain = build_hierarchical_chain(size, ratio)
            try:
                ok, detail = _check_pairing(chain, ratio)
            except Exception as exc:
                ok, detail = False, "error: %r" % (exc,)
            report.append(ToyCheck(size, ratio, "pairing", ok, detail))
            if size % 2 == 0:
                try:
                    ok, detail = _check_central_pair(chain)
                except Exception as exc:
                    ok, detail = False, "error: %r" % (exc,)
                report.append(ToyCheck(size, ratio, "central_pair", ok, detail))
            else:
                try:
                    ok, detail = _check_zero_mode(chain)
                except Exception as exc:
                    ok, detail = False, "error: %r" % (exc,)
                report.append(ToyCheck(size, ratio, "zero_mode", ok, detail))
    return report


def all_passed(report):
    return all(check.passed for check in report)


def format_report(report):
    """Fixed-width pass/fail table, one line per check."""
    lines = ["size  ratio    check         result  detail"]
    for c in report:
        lines.append(
            "%4d  %-7g  %-12s  %-6s  %s"
            % (c.size, c.ratio, c.name, "PASS" if c.passed else "FAIL", c.detail)
        )
    return "\n".join(lines)
