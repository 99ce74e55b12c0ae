# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for zero-diagonal symmetric tridiagonal matrices.

Twin of ``_py``: the arithmetic is transcribed statement for statement
from the pure Python module, in the same order, so both backends emit
bit-identical doubles.  Keep the two files in sync.
"""

from libc.math cimport fabs
from libc.stdlib cimport free, malloc

EPS = 2.220446049250313e-16

cdef double _EPS = 2.220446049250313e-16


cdef inline long _count(const double* b, Py_ssize_t m, double lam) noexcept nogil:
    # Sturm pivot recurrence; see _py.sturm_count for the conventions.
    cdef Py_ssize_t n = m + 1
    cdef long count = 0
    cdef double d = -lam
    cdef double bj, right
    cdef Py_ssize_t j
    if d == 0.0:
        d = _EPS * (fabs(lam) + b[0])
    if d < 0.0:
        count += 1
    for j in range(1, n):
        bj = b[j - 1]
        d = -lam - (bj * bj) / d
        if d == 0.0:
            right = b[j] if j < m else 0.0
            d = _EPS * (fabs(lam) + bj + right)
        if d < 0.0:
            count += 1
    return count


def sturm_count(const double[::1] beta, double lam):
    """Number of eigenvalues strictly below ``lam``."""
    cdef long c
    with nogil:
        c = _count(&beta[0], beta.shape[0], lam)
    return c


def bisect_index(const double[::1] beta, long k, double lo, double hi,
                 double rel_tol, long max_steps):
    """Shrink [lo, hi] around the eigenvalue with ascending index ``k``.

    Same contract as _py.bisect_index.
    """
    cdef Py_ssize_t m = beta.shape[0]
    cdef const double* b = &beta[0]
    cdef long steps = 0
    cdef double width, scale, ahi, mid
    cdef long count
    with nogil:
        while True:
            width = hi - lo
            scale = fabs(lo)
            ahi = fabs(hi)
            if ahi > scale:
                scale = ahi
            if scale < 1.0:
                scale = 1.0
            if width <= rel_tol * scale:
                break
            if steps >= max_steps:
                break
            mid = 0.5 * (lo + hi)
            if not (lo < mid < hi):
                break
            count = _count(b, m, mid)
            if count > k:
                hi = mid
            else:
                lo = mid
            steps += 1
    return 0.5 * (lo + hi), steps, lo, hi


def solve_shifted(const double[::1] beta, double lam, const double[::1] rhs,
                  double[::1] out):
    """Solve (T - lam I) x = rhs, LU with partial pivoting as in _py."""
    cdef Py_ssize_t m = beta.shape[0]
    cdef Py_ssize_t n = m + 1
    cdef const double* b = &beta[0]
    cdef double* d = <double*> malloc(n * sizeof(double))
    cdef double* dl = <double*> malloc((n - 1) * sizeof(double))
    cdef double* du = <double*> malloc((n - 1) * sizeof(double))
    cdef double* du2 = <double*> malloc((n - 2) * sizeof(double)) if n > 2 else NULL
    cdef char* swap = <char*> malloc((n - 1) * sizeof(char))
    cdef double* x = <double*> malloc(n * sizeof(double))
    if d == NULL or dl == NULL or du == NULL or swap == NULL or x == NULL or \
            (n > 2 and du2 == NULL):
        free(d); free(dl); free(du); free(du2); free(swap); free(x)
        raise MemoryError()

    cdef Py_ssize_t i
    cdef double fact, tmp, p, left
    with nogil:
        for i in range(n):
            d[i] = -lam
            x[i] = rhs[i]
        for i in range(n - 1):
            dl[i] = b[i]
            du[i] = b[i]
            swap[i] = 0
        for i in range(n - 2):
            du2[i] = 0.0

        for i in range(n - 1):
            if fabs(d[i]) >= fabs(dl[i]):
                fact = dl[i] / d[i]
                dl[i] = fact
                d[i + 1] = d[i + 1] - fact * du[i]
            else:
                swap[i] = 1
                fact = d[i] / dl[i]
                d[i] = dl[i]
                dl[i] = fact
                tmp = du[i]
                du[i] = d[i + 1]
                d[i + 1] = tmp - fact * d[i + 1]
                if i < n - 2:
                    du2[i] = du[i + 1]
                    du[i + 1] = -fact * du[i + 1]

        for i in range(n - 1):
            if swap[i]:
                tmp = x[i]
                x[i] = x[i + 1]
                x[i + 1] = tmp - dl[i] * x[i]
            else:
                x[i + 1] = x[i + 1] - dl[i] * x[i]

        p = d[n - 1]
        if p == 0.0:
            p = _EPS * (fabs(lam) + b[n - 2])
        x[n - 1] = x[n - 1] / p
        if n > 1:
            p = d[n - 2]
            if p == 0.0:
                left = b[n - 3] if n > 2 else 0.0
                p = _EPS * (fabs(lam) + left + b[n - 2])
            x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / p
        for i in range(n - 3, -1, -1):
            p = d[i]
            if p == 0.0:
                left = b[i - 1] if i > 0 else 0.0
                p = _EPS * (fabs(lam) + left + b[i])
            x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / p

        for i in range(n):
            out[i] = x[i]

    free(d); free(dl); free(du); free(du2); free(swap); free(x)
    return None
