"""Sturm counting, bisection to indexed eigenvalues, inverse-iteration
eigenvectors, small dense spectra, and the singular-value cross-check."""

import math

import numpy as np
import pytest

from fracsqueeze.chains import build_hierarchical_chain, build_squeeze_chain, custom_chain
from fracsqueeze.eigen import (
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

# quartic closed form for the hierarchical chain with couplings
# [1, 10, 100]: lambda^2 = (10101 +- sqrt(10101^2 - 4*10^4)) / 2
QUARTIC_OUTER = 100.49880547529300540
QUARTIC_INNER = 0.99503670244701929745


def uniform_eigenvalue(size, k):
    """Ascending eigenvalue k of the all-ones chain: 2cos((size-k)pi/(size+1))."""
    return 2.0 * math.cos((size - k) * math.pi / (size + 1.0))


def test_gershgorin_bound_cases():
    assert gershgorin_bound(custom_chain([1.0, 1.0, 1.0])) == 2.0
    assert gershgorin_bound(custom_chain([1.0, 10.0, 100.0])) == 110.0
    assert gershgorin_bound(custom_chain([0.7])) == 0.7
    ch = build_squeeze_chain(3, 2.0)
    assert gershgorin_bound(ch) == pytest.approx(
        math.sqrt(2.0) + math.sqrt(12.0), rel=1e-14
    )


def test_sturm_count_uniform_chain():
    ch = custom_chain([1.0, 1.0, 1.0])
    g = gershgorin_bound(ch)
    assert sturm_count(ch, 0.0) == 2
    assert sturm_count(ch, -g - 1.0) == 0
    assert sturm_count(ch, g + 1.0) == 4
    # count is the rank of the shift against the closed-form spectrum
    for lam in (-1.7, -0.7, 0.2, 0.9, 1.7):
        expect = sum(1 for k in range(4) if uniform_eigenvalue(4, k) < lam)
        assert sturm_count(ch, lam) == expect


def test_sturm_count_monotone_in_shift():
    rng = np.random.default_rng(3)
    ch = custom_chain(rng.uniform(0.5, 2.0, 30))
    g = gershgorin_bound(ch)
    shifts = np.linspace(-g - 0.5, g + 0.5, 101)
    counts = [sturm_count(ch, s) for s in shifts]
    assert counts == sorted(counts)
    assert counts[0] == 0 and counts[-1] == ch.size


def test_eigenvalue_by_index_uniform():
    ch = custom_chain([1.0, 1.0, 1.0])
    for k in range(4):
        assert eigenvalue_by_index(ch, k) == pytest.approx(
            uniform_eigenvalue(4, k), rel=1e-11
        )


def test_eigenvalue_by_index_two_sites():
    ch = custom_chain([0.83])
    assert eigenvalue_by_index(ch, 1) == pytest.approx(0.83, rel=1e-12)
    assert eigenvalue_by_index(ch, 0) == pytest.approx(-0.83, rel=1e-12)


def test_eigenvalue_by_index_quartic():
    ch = custom_chain([1.0, 10.0, 100.0])
    assert eigenvalue_by_index(ch, 2) == pytest.approx(QUARTIC_INNER, rel=1e-11)
    assert eigenvalue_by_index(ch, 3) == pytest.approx(QUARTIC_OUTER, rel=1e-11)


def test_eigenvalue_index_validation():
    ch = custom_chain([1.0, 1.0])
    with pytest.raises(ValueError):
        eigenvalue_by_index(ch, 3)
    with pytest.raises(ValueError):
        eigenvalue_by_index(ch, -1)


def test_mirror_eigenvalues_are_exact_negatives():
    """The Sturm recurrence is exactly antisymmetric under lam -> -lam
    and the starting bracket is symmetric, so paired bisections land on
    bit-exact negatives of each other."""
    rng = np.random.default_rng(5)
    for size in (6, 13, 40):
        ch = custom_chain(rng.uniform(0.5, 2.0, size - 1))
        for k in range(size // 2):
            lo = eigenvalue_by_index(ch, k)
            hi = eigenvalue_by_index(ch, size - 1 - k)
            assert lo == -hi


def test_smallest_positive_uniform_closed_form():
    for size in (4, 250, 500, 1000, 2000):
        ch = build_squeeze_chain(size, 0.0)
        ref = 2.0 * math.sin(math.pi / (2.0 * (size + 1.0)))
        assert smallest_positive_eigenvalue(ch, tol=1e-14) == pytest.approx(
            ref, rel=1e-9
        )


def test_smallest_positive_two_by_two():
    # sqrt(Gamma(n+1)) for the single coupling of the 2x2 block
    cases = {
        0.5: 0.9413962637767148126,
        1.0: 1.0,
        2.0: math.sqrt(2.0),
        3.7: 3.928283543743683443,
        6.0: math.sqrt(720.0),
    }
    for n, ref in cases.items():
        ch = build_squeeze_chain(2, n)
        assert smallest_positive_eigenvalue(ch) == pytest.approx(ref, rel=1e-12)


def test_smallest_positive_hierarchical():
    ch = build_hierarchical_chain(4, 10.0)
    assert smallest_positive_eigenvalue(ch) == pytest.approx(QUARTIC_INNER, rel=1e-11)


def test_smallest_positive_odd_needs_flag():
    ch = custom_chain([1.0, 1.0])
    with pytest.raises(ValueError):
        smallest_positive_eigenvalue(ch)
    lam = smallest_positive_eigenvalue(ch, allow_odd=True)
    assert lam == pytest.approx(math.sqrt(2.0), rel=1e-11)


def test_ladder_monotone_nonincreasing():
    for n in (0.5, 2.5, 4.0):
        values = [
            smallest_positive_eigenvalue(build_squeeze_chain(250 * 2 ** k, n))
            for k in range(4)
        ]
        for a, b in zip(values, values[1:]):
            assert b <= a * (1.0 + 1e-8)


def test_eigenvector_two_sites():
    ch = custom_chain([0.83])
    x, res, its = eigenvector_inverse_iteration(ch, 0.83)
    assert res <= 1e-8
    r = 1.0 / math.sqrt(2.0)
    assert x[0] == pytest.approx(r, abs=1e-10)
    assert x[1] == pytest.approx(r, abs=1e-10)


def test_eigenvector_uniform_closed_form():
    # components of the uniform-chain eigenvector are sin(j k pi / (N+1))
    ch = custom_chain([1.0, 1.0, 1.0])
    lam = eigenvalue_by_index(ch, 2)  # 2cos(2pi/5)
    x, res, its = eigenvector_inverse_iteration(ch, lam)
    assert res <= 1e-8
    ref = np.array([math.sin(2.0 * j * math.pi / 5.0) for j in range(1, 5)])
    ref /= np.linalg.norm(ref)
    assert np.max(np.abs(np.abs(x) - np.abs(ref))) < 1e-9


def test_eigenvector_hierarchical_localization():
    ch = build_hierarchical_chain(4, 100.0)
    lam = eigenvalue_by_index(ch, 2)
    x, res, its = eigenvector_inverse_iteration(ch, lam)
    assert res <= 1e-8
    assert x[0] ** 2 + x[1] ** 2 >= 0.9999


def test_eigenvector_unit_norm_and_sign():
    ch = build_squeeze_chain(300, 1.7)
    lam = smallest_positive_eigenvalue(ch)
    x, res, its = eigenvector_inverse_iteration(ch, lam)
    assert abs(np.linalg.norm(x) - 1.0) <= 1e-12
    assert x[np.argmax(np.abs(x))] > 0.0
    assert its >= 2


def test_central_eigenpair_fields():
    ch = build_squeeze_chain(500, 2.5)
    pair = central_eigenpair(ch)
    assert pair.value > 0.0
    assert 0.0 <= pair.m_expect <= ch.size - 1
    assert pair.residual <= 1e-8
    assert pair.bisection_steps > 0
    assert pair.iterations >= 2
    assert abs(np.linalg.norm(pair.vector) - 1.0) <= 1e-12


def test_central_m_stable_under_tighter_tol():
    ch = build_squeeze_chain(1000, 1.7)
    a = central_eigenpair(ch, tol=1e-10).m_expect
    b = central_eigenpair(ch, tol=1e-11).m_expect
    assert abs(a - b) / a < 1e-6


def test_full_spectrum_small_cases():
    w = full_spectrum(custom_chain([0.6]))
    assert w[0] == pytest.approx(-0.6, rel=1e-12)
    assert w[1] == pytest.approx(0.6, rel=1e-12)

    w = full_spectrum(custom_chain([1.0, 1.0, 1.0]))
    for k in range(4):
        assert w[k] == pytest.approx(uniform_eigenvalue(4, k), rel=1e-12)

    w = full_spectrum(build_hierarchical_chain(4, 10.0))
    assert w[0] == pytest.approx(-QUARTIC_OUTER, rel=1e-10)
    assert w[1] == pytest.approx(-QUARTIC_INNER, rel=1e-10)
    assert w[2] == pytest.approx(QUARTIC_INNER, rel=1e-10)
    assert w[3] == pytest.approx(QUARTIC_OUTER, rel=1e-10)


def test_full_spectrum_vectors_orthonormal():
    ch = build_squeeze_chain(60, 1.2)
    w, v = full_spectrum(ch, with_vectors=True)
    assert np.allclose(v.T @ v, np.eye(60), atol=1e-10)
    t = ch.to_dense()
    assert np.max(np.abs(t @ v - v * w)) < 1e-10 * gershgorin_bound(ch)


def test_full_spectrum_size_cap():
    with pytest.raises(ValueError):
        full_spectrum(build_squeeze_chain(4100, 0.0))


def test_svd_route_matches_bisection():
    # independent path through the bidiagonal half of the chain; the
    # large-order chains are where high relative accuracy matters
    for n in (5.0, 6.0):
        ch = build_squeeze_chain(250, n)
        a = smallest_positive_eigenvalue(ch)
        b = smallest_positive_via_svd(ch)
        assert abs(a - b) / a <= 1e-8


def test_svd_route_needs_even_size():
    with pytest.raises(ValueError):
        smallest_positive_via_svd(custom_chain([1.0, 2.0]))


def test_convergence_error_is_distinct():
    assert issubclass(ConvergenceError, Exception)
    assert not issubclass(ConvergenceError, ValueError)
