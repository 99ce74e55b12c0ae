"""Eigenvalues and eigenvectors of coupling chains.

The chains are real symmetric tridiagonal with zero diagonal, so the
spectrum is symmetric about zero (flipping the sign of every other
basis vector maps T to -T).  For even size N the two eigenvalues
closest to zero form the pair -E_min, +E_min; for odd N there is an
exact zero eigenvalue instead.  Everything here targets E_min and its
eigenvector:

* sturm_count / eigenvalue_by_index: bisection on the Sturm negative
  pivot count, which resolves E_min to full relative precision even
  when the couplings span many orders of magnitude.  Dense solvers only
  reach absolute accuracy at the scale of the largest coupling, which
  is nowhere near enough for the small central eigenvalues.
* eigenvector_inverse_iteration: shifted tridiagonal solves with a
  fixed seed start vector.
* full_spectrum: dense LAPACK path for small chains, used by the time
  evolution and by cross checks.
* smallest_positive_via_svd: an independent route through the singular
  values of the even/odd bidiagonal block, kept separate on purpose so
  the two routes can be compared in tests.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import _kernels
from .observables import renormalized_number

DEFAULT_TOL = 1e-12
MAX_BISECTION_STEPS = 200
RESIDUAL_TOL = 1e-8
# fixed seed for the inverse iteration start vector; part of the
# determinism contract, do not change casually
INVERSE_ITERATION_SEED = 20240811


class ConvergenceError(RuntimeError):
    """Bisection or inverse iteration failed to reach its tolerance."""


@dataclass(frozen=True)
class CentralEigenpair:
    """Smallest positive eigenvalue of an even chain and its vector."""

    value: float
    vector: np.ndarray = field(repr=False)
    m_expect: float
    residual: float
    bisection_steps: int
    iterations: int


def gershgorin_bound(chain):
    """Upper bound G on |eigenvalue|: the largest absolute row sum."""
    b = chain.couplings
    if b.shape[0] == 1:
        return float(b[0])
    return float(np.max(b[:-1] + b[1:]))


def sturm_count(chain, lam):
    """Number of eigenvalues strictly below lam."""
    return _kernels.sturm_count(chain.couplings, lam)


def _bisect(chain, k, tol):
    """Bisect to the eigenvalue with ascending index k (0 based).

    Returns (value, steps).  The initial bracket is the Gershgorin
    interval widened by a relative pad, because for N = 2 the extreme
    eigenvalues sit exactly on the Gershgorin bound and the bracket
    must contain them strictly.
    """
    n = chain.size
    if not 0 <= k < n:
        raise ValueError("eigenvalue index %d out of range for size %d" % (k, n))
    g = gershgorin_bound(chain)
    pad = g * 1e-13
    lam, steps, lo, hi = _kernels.bisect_index(
        chain.couplings, k, -(g + pad), g + pad, tol, MAX_BISECTION_STEPS
    )
    scale = max(abs(lo), abs(hi), 1.0)
    if hi - lo > 1e3 * tol * scale:
        raise ConvergenceError(
            "bisection stalled at width %.3e for index %d of size %d"
            % (hi - lo, k, n)
        )
    return lam, steps


def eigenvalue_by_index(chain, k, tol=DEFAULT_TOL):
    """Eigenvalue number k in ascending order, by Sturm bisection."""
    lam, _ = _bisect(chain, k, tol)
    return lam


def smallest_positive_eigenvalue(chain, tol=DEFAULT_TOL, allow_odd=False):
    """E_min, the eigenvalue closest to zero from above.

    For even N this is the ascending eigenvalue number N/2.  Odd chains
    carry an exact zero eigenvalue; asking for their smallest positive
    one (index (N+1)/2) is usually a sign of a sizing mistake, so it
    must be enabled explicitly.
    """
    n = chain.size
    if n % 2:
        if not allow_odd:
            raise ValueError(
                "size %d is odd so the central eigenvalue is exactly zero; "
                "pass allow_odd=True to get the first positive one" % n
            )
        k = (n + 1) // 2
    else:
        k = n // 2
    lam, _ = _bisect(chain, k, tol)
    return lam


def _scaled_residual(beta, lam, x):
    """max_j |(T x - lam x)_j| / (|lam| + row-sum_j), a relative measure."""
    n = x.shape[0]
    t = np.empty(n)
    t[0] = beta[0] * x[1]
    t[n - 1] = beta[n - 2] * x[n - 2]
    if n > 2:
        t[1:-1] = beta[:-1] * x[:-2] + beta[1:] * x[2:]
    scale = np.empty(n)
    scale[0] = beta[0]
    scale[n - 1] = beta[n - 2]
    if n > 2:
        scale[1:-1] = beta[:-1] + beta[1:]
    return float(np.max(np.abs(t - lam * x) / (abs(lam) + scale)))


def eigenvector_inverse_iteration(chain, lam, tol=RESIDUAL_TOL, max_iterations=5):
    """Unit eigenvector for the eigenvalue estimate lam.

    Starts from a fixed-seed random vector and applies shifted solves
    until the scaled residual drops below tol, with at least two passes
    so that a lucky first iterate cannot hide contamination from the
    mirror eigenvalue.  The sign is fixed by making the largest entry
    positive.  Returns (vector, residual, iterations); the caller
    decides what to do with a residual above tol.
    """
    beta = chain.couplings
    n = chain.size
    rng = np.random.default_rng(INVERSE_ITERATION_SEED)
    x = rng.standard_normal(n)
    x /= np.linalg.norm(x)
    out = np.empty(n)
    res = np.inf
    done = 0
    for it in range(1, max_iterations + 1):
        _kernels.solve_shifted(beta, lam, x, out)
        nrm = np.linalg.norm(out)
        if nrm == 0.0 or not np.isfinite(nrm):
            raise ConvergenceError(
                "inverse iteration produced a non-finite vector at shift %.6e" % lam
            )
        x = out / nrm
        done = it
        res = _scaled_residual(beta, lam, x)
        if it >= 2 and res <= tol:
            break
    i = int(np.argmax(np.abs(x)))
    if x[i] < 0.0:
        x = -x
    return x, res, done


def central_eigenpair(chain, tol=DEFAULT_TOL, allow_odd=False):
    """E_min together with its eigenvector and quality diagnostics."""
    n = chain.size
    if n % 2:
        if not allow_odd:
            raise ValueError(
                "size %d is odd so the central eigenvalue is exactly zero; "
                "pass allow_odd=True to get the first positive one" % n
            )
        k = (n + 1) // 2
    else:
        k = n // 2
    lam, steps = _bisect(chain, k, tol)
    vec, res, iters = eigenvector_inverse_iteration(chain, lam)
    m = renormalized_number(vec)
    return CentralEigenpair(
        value=lam,
        vector=vec,
        m_expect=m,
        residual=res,
        bisection_steps=steps,
        iterations=iters,
    )


def full_spectrum(chain, with_vectors=False):
    """All eigenvalues (ascending) via LAPACK, small chains only.

    This dense path is accurate to machine epsilon times the largest
    coupling, which is fine for time evolution but not for resolving
    tiny central eigenvalues of strongly graded chains; use the Sturm
    routines for those.
    """
    if chain.size > 4096:
        raise ValueError("full_spectrum is limited to sizes up to 4096")
    d = np.zeros(chain.size)
    if with_vectors:
        w, v = scipy.linalg.eigh_tridiagonal(d, np.asarray(chain.couplings))
        return w, v
    w = scipy.linalg.eigh_tridiagonal(
        d, np.asarray(chain.couplings), eigvals_only=True
    )
    return w


def smallest_positive_via_svd(chain):
    """E_min through the singular values of the even/odd block.

    Reordering the basis into (even sites, odd sites) turns the chain
    into an off-diagonal block form [[0, B], [B^T, 0]] with a lower
    bidiagonal B, whose singular values are the absolute eigenvalues.
    Independent of the Sturm path; used for cross checks.
    """
    if chain.size % 2:
        raise ValueError("the even/odd split needs an even chain size")
    if chain.size > 4096:
        raise ValueError("smallest_positive_via_svd is limited to sizes up to 4096")
    half = chain.size // 2
    beta = chain.couplings
    b = np.zeros((half, half))
    for r in range(half):
        b[r, r] = beta[2 * r]
        if r:
            b[r, r - 1] = beta[2 * r - 1]
    s = scipy.linalg.svd(b, compute_uv=False)
    return float(s[-1])
