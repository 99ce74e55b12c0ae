"""Vacuum evolution under a chain Hamiltonian.

The state starts in the first basis vector (the vacuum) and evolves
with exp(-i r T).  Propagation goes through the full spectral
decomposition: with eigenpairs (E_k, v_k) the amplitudes are

    c_j(r) = sum_k exp(-i E_k r) <v_k|e_0> (v_k)_j ,

exact up to solver accuracy for any r, which matters because the
eigenvalue spread of strongly graded chains makes step integrators
stiff.  The observable of interest is ⟨m⟩(r); its oscillation is
dominated by the +-E_min pair, and passing a mode subset reconstructs
the trajectory from just those eigenstates for comparison.
"""

from dataclasses import dataclass, field

import numpy as np

from .eigen import full_spectrum, smallest_positive_eigenvalue

DEFAULT_SAMPLES = 2048


@dataclass(frozen=True)
class Trajectory:
    """Sampled ⟨m⟩(r) and norm from vacuum evolution of one chain."""

    n: float  # squeezing order; NaN for chains without one
    N: int
    r_samples: np.ndarray = field(repr=False)
    m_of_r: np.ndarray = field(repr=False)
    norm_of_r: np.ndarray = field(repr=False)
    amplitude: float


def evolve_vacuum(chain, r_samples, modes=None):
    """Trajectory of ⟨m⟩ and norm over the given r samples.

    modes, when given, restricts the spectral sum to those eigenvalue
    indices (ascending order); the norm then falls short of one by the
    weight of the dropped eigenstates, which is the point of the
    comparison.  Dense-solver path, so the chain size is capped.
    """
    if chain.size > 4096:
        raise ValueError("evolve_vacuum is limited to sizes up to 4096")
    r = np.asarray(r_samples, dtype=np.float64)
    if r.ndim != 1 or r.shape[0] < 1:
        raise ValueError("need a one-dimensional, nonempty r sample array")
    w, v = full_spectrum(chain, with_vectors=True)
    if modes is not None:
        idx = np.asarray(modes, dtype=np.intp)
        w = w[idx]
        v = v[:, idx]
    vac = v[0, :]
    phases = np.exp(-1j * np.outer(w, r))
    c = v @ (vac[:, None] * phases)
    p = np.abs(c) ** 2
    j = np.arange(chain.size, dtype=np.float64)
    m = j @ p
    norm = p.sum(axis=0)
    return Trajectory(
        n=chain.order,
        N=chain.size,
        r_samples=r,
        m_of_r=m,
        norm_of_r=norm,
        amplitude=float(np.max(m) - np.min(m)),
    )


def oscillation_amplitude(trajectory):
    """max - min of ⟨m⟩ over the sampled window."""
    m = trajectory.m_of_r
    if m.shape[0] < 2:
        raise ValueError("amplitude needs at least two samples")
    return float(np.max(m) - np.min(m))


def default_r_samples(chain, samples=DEFAULT_SAMPLES, tol=1e-12):
    """Uniform r grid [0, 3 pi / E_min], covering the slow oscillation.

    The central pair beats at angular frequency 2 E_min (period
    pi / E_min), so three half-periods show more than one full swing
    of ⟨m⟩ whatever the phase.  Fast components alias at this density;
    raise samples when they matter.
    """
    e_min = smallest_positive_eigenvalue(chain, tol=tol)
    return np.linspace(0.0, 3.0 * np.pi / e_min, samples)


def save_trajectory(trajectory, path):
    """CSV export: columns r, m_expect, photon_number, norm."""
    with open(path, "w") as fh:
        fh.write("r,m_expect,photon_number,norm\n")
        for i in range(trajectory.r_samples.shape[0]):
            m = trajectory.m_of_r[i]
            fh.write(
                "%.16e,%.16e,%.16e,%.16e\n"
                % (
                    trajectory.r_samples[i],
                    m,
                    trajectory.n * m,
                    trajectory.norm_of_r[i],
                )
            )
