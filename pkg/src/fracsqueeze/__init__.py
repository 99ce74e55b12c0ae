"""Spectral and dynamical analysis of generalized-squeezing chains.

The package studies zero-diagonal symmetric tridiagonal "chains" whose
couplings are square roots of gamma-function ratios, indexed by a real
squeezing order n.  It provides chain construction, high relative
accuracy extraction of the smallest positive eigenvalue and its
eigenvector, number-operator observables, finite-size scaling fits
over truncation ladders, vacuum time evolution, a hierarchical toy
model verification, and a sweep/analyze/plot pipeline exposed through
the `fracsqueeze` command.
"""

from . import _kernels
from ._version import __version__
from .analysis import AnalysisRow, analyze_run
from .chains import (
    TridiagonalChain,
    build_hierarchical_chain,
    build_squeeze_chain,
    coupling,
    custom_chain,
    format_chain,
    load_chain,
    log_gamma,
    save_chain,
)
from .dynamics import (
    Trajectory,
    default_r_samples,
    evolve_vacuum,
    oscillation_amplitude,
    save_trajectory,
)
from .eigen import (
    CentralEigenpair,
    ConvergenceError,
    central_eigenpair,
    eigenvalue_by_index,
    eigenvector_inverse_iteration,
    full_spectrum,
    gershgorin_bound,
    smallest_positive_eigenvalue,
    smallest_positive_via_svd,
    sturm_count,
)
from .figures import emit_plot_data
from .observables import (
    NumberExpectation,
    central_pair_overlap,
    number_expectation,
    photon_number,
    renormalized_number,
)
from .scaling import (
    LineFit,
    ScalingFit,
    fit_line_with_root,
    fit_log,
    fit_power_offset,
    select_model,
)
from .sweep import SweepConfig, SweepRecord, grid_values, ladder_values, run_sweep
from .toy import ToyCheck, verify_hierarchical


def kernel_backend():
    """Name of the active kernel backend: "compiled" or "python"."""
    return _kernels.BACKEND
