"""Number expectations and vacuum-overlap diagnostics on eigenvectors.

The chain index j labels the retained basis states, so the diagonal
operator with entries 0, 1, 2, ... counts how many n-photon multiples a
state carries.  Its expectation value ⟨m⟩ in an eigenvector, and the
derived photon number n·⟨m⟩, are the observables the scaling analysis
runs on.
"""

from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-9


@dataclass(frozen=True)
class NumberExpectation:
    """⟨m⟩ of a state together with its photon-number rescaling n·⟨m⟩."""

    m_expect: float
    photon_number: float


def renormalized_number(vector):
    """⟨m⟩ = sum_j j |x_j|^2 for a unit vector x.

    Summed from j = N-1 downward with plain accumulation: for the
    localized vectors of interest the large-j entries are tiny, so the
    dominant low-j terms are added last.  The fixed order is part of
    the determinism contract.
    """
    x = np.asarray(vector, dtype=np.float64)
    nsq = float(np.dot(x, x))
    if abs(nsq - 1.0) > 2.0 * NORM_TOL:
        # norm^2 within ~2e-9 of 1 corresponds to norm within 1e-9 of 1
        raise ValueError("renormalized_number needs a unit vector, |x|^2 = %.12g" % nsq)
    total = 0.0
    for j in range(x.shape[0] - 1, 0, -1):
        xj = float(x[j])
        total += j * (xj * xj)
    return total


def photon_number(order, m_expect):
    """Photon number n * ⟨m⟩ for squeezing order n."""
    if m_expect < 0.0:
        raise ValueError("m_expect must be nonnegative")
    return order * m_expect


def number_expectation(vector, order):
    """Bundle ⟨m⟩ and n·⟨m⟩ for one eigenvector."""
    m = renormalized_number(vector)
    return NumberExpectation(m_expect=m, photon_number=photon_number(order, m))


def central_pair_overlap(eigenvalues, eigenvectors):
    """Squared vacuum weight carried by the central +-E_min pair.

    Takes a full ascending eigendecomposition of an even chain and
    returns |<v_+|e_0>|^2 + |<v_-|e_0>|^2, the fraction of the vacuum
    basis vector living in the two eigenstates closest to zero.
    """
    w = np.asarray(eigenvalues)
    n = w.shape[0]
    if n % 2:
        raise ValueError("central pair overlap needs an even chain size")
    v = np.asarray(eigenvectors)
    if v.shape != (n, n):
        raise ValueError("eigenvector matrix must be %d x %d" % (n, n))
    lo = n // 2 - 1
    hi = n // 2
    return float(v[0, lo] ** 2 + v[0, hi] ** 2)
