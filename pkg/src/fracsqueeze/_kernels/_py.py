"""Pure Python kernels for zero-diagonal symmetric tridiagonal matrices.

These are the fallback twins of the compiled routines in ``_core``.  The
arithmetic is written statement for statement in the same order as the
Cython source so that both backends produce bit-identical doubles.  Any
change here must be mirrored there.

A chain of size N is described only by its N-1 positive couplings
``beta``; the diagonal is identically zero.
"""

# IEEE-754 double machine epsilon, used to nudge exactly-zero pivots.
EPS = 2.220446049250313e-16


def sturm_count(beta, lam):
    """Number of eigenvalues strictly below ``lam``.

    Runs the Sturm pivot recurrence d_0 = -lam,
    d_j = -lam - beta_{j-1}^2 / d_{j-1} and counts negative pivots.
    An exactly zero pivot is replaced by +EPS times a local scale,
    which resolves ties as "lam minus zero-plus": eigenvalues equal to
    lam are not counted.  Infinities produced by tiny pivots propagate
    harmlessly through the recurrence.
    """
    b = beta.tolist() if hasattr(beta, "tolist") else list(beta)
    m = len(b)
    n = m + 1
    count = 0
    d = -lam
    if d == 0.0:
        d = EPS * (abs(lam) + b[0])
    if d < 0.0:
        count += 1
    for j in range(1, n):
        bj = b[j - 1]
        d = -lam - (bj * bj) / d
        if d == 0.0:
            right = b[j] if j < m else 0.0
            d = EPS * (abs(lam) + bj + right)
        if d < 0.0:
            count += 1
    return count


def bisect_index(beta, k, lo, hi, rel_tol, max_steps):
    """Shrink [lo, hi] around the eigenvalue with ascending index ``k``.

    The caller guarantees count(lo) <= k < count(hi).  Halving stops when
    the bracket width falls below rel_tol * max(|lo|, |hi|, 1), when
    max_steps halvings have been spent, or when the midpoint is no longer
    strictly inside the bracket.  Returns (midpoint, steps, lo, hi).
    """
    b = beta.tolist() if hasattr(beta, "tolist") else list(beta)
    m = len(b)
    n = m + 1
    steps = 0
    while True:
        width = hi - lo
        scale = abs(lo)
        ahi = abs(hi)
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
        # inline Sturm count at mid
        count = 0
        d = -mid
        if d == 0.0:
            d = EPS * (abs(mid) + b[0])
        if d < 0.0:
            count += 1
        for j in range(1, n):
            bj = b[j - 1]
            d = -mid - (bj * bj) / d
            if d == 0.0:
                right = b[j] if j < m else 0.0
                d = EPS * (abs(mid) + bj + right)
            if d < 0.0:
                count += 1
        if count > k:
            hi = mid
        else:
            lo = mid
        steps += 1
    return 0.5 * (lo + hi), steps, lo, hi


def solve_shifted(beta, lam, rhs, out):
    """Solve (T - lam I) x = rhs for the zero-diagonal tridiagonal T.

    LU factorization with partial pivoting in the style of LAPACK
    dgttrf/dgttrs, so row swaps keep the elimination stable even when
    lam sits inside the spectrum.  Exactly zero back-substitution pivots
    are replaced by EPS times a local scale, the standard inverse
    iteration safeguard.  The solution is written into ``out``.
    """
    b = beta.tolist() if hasattr(beta, "tolist") else list(beta)
    n = len(b) + 1
    d = [-lam] * n
    dl = list(b)
    du = list(b)
    du2 = [0.0] * (n - 2) if n > 2 else []
    swap = [False] * (n - 1)
    x = rhs.tolist() if hasattr(rhs, "tolist") else list(rhs)

    for i in range(n - 1):
        if abs(d[i]) >= abs(dl[i]):
            fact = dl[i] / d[i]
            dl[i] = fact
            d[i + 1] = d[i + 1] - fact * du[i]
        else:
            swap[i] = True
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
        p = EPS * (abs(lam) + b[n - 2])
    x[n - 1] = x[n - 1] / p
    if n > 1:
        p = d[n - 2]
        if p == 0.0:
            left = b[n - 3] if n > 2 else 0.0
            p = EPS * (abs(lam) + left + b[n - 2])
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / p
    for i in range(n - 3, -1, -1):
        p = d[i]
        if p == 0.0:
            left = b[i - 1] if i > 0 else 0.0
            p = EPS * (abs(lam) + left + b[i])
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / p

    for i in range(n):
        out[i] = x[i]
