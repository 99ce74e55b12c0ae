"""Construction of zero-diagonal symmetric tridiagonal chains.

The central object is a chain whose only data are its positive nearest
neighbour couplings; the diagonal vanishes identically.  The physically
interesting family has couplings

    beta_j = sqrt( Gamma((j+1) n + 1) / Gamma(j n + 1) ),    j = 0 .. N-2,

with a real squeezing order n >= 0.  Each coupling is evaluated from two
log-gamma calls, never from a running product, so beta_j carries no
accumulated rounding from its predecessors and stays finite long after
Gamma itself has overflowed.  Order n = 0 gives the uniform chain with
all couplings equal to one, n = 1 the ordinary harmonic-oscillator
ladder sqrt(j + 1), n = 2 the two-photon ladder, and fractional n
interpolates between them.

A geometric "hierarchical" family with couplings 1, r, r^2, ... is also
provided; it reproduces the level pairing of the gamma chains in an
analytically transparent setting.
"""

import math
from dataclasses import dataclass, field

import numpy as np

# exp() overflows IEEE doubles just above this point
_LN_DBL_MAX = 709.782712893384


@dataclass(frozen=True)
class TridiagonalChain:
    """A zero-diagonal symmetric tridiagonal matrix of size N.

    couplings holds the N-1 off-diagonal entries and is read only.
    origin records how the chain was built ("squeeze", "hierarchical",
    "custom", ...); order is the squeezing order n for squeeze chains
    and NaN otherwise.
    """

    size: int
    couplings: np.ndarray = field(repr=False)
    origin: str = "custom"
    order: float = math.nan

    def __post_init__(self):
        c = np.ascontiguousarray(self.couplings, dtype=np.float64)
        if c.ndim != 1 or c.shape[0] != self.size - 1:
            raise ValueError(
                "chain of size %d needs %d couplings, got shape %s"
                % (self.size, self.size - 1, c.shape)
            )
        if self.size < 2:
            raise ValueError("chain size must be at least 2")
        if not np.all(np.isfinite(c)):
            raise ValueError("couplings must be finite")
        if np.any(c <= 0.0):
            raise ValueError("couplings must be positive")
        c.flags.writeable = False
        object.__setattr__(self, "couplings", c)

    def to_dense(self):
        """Dense ndarray of the matrix, for small sizes only."""
        if self.size > 4096:
            raise ValueError("refusing to densify a chain larger than 4096")
        t = np.zeros((self.size, self.size))
        idx = np.arange(self.size - 1)
        t[idx, idx + 1] = self.couplings
        t[idx + 1, idx] = self.couplings
        return t


def log_gamma(z):
    """ln Gamma(z) for positive real z."""
    if not (z > 0.0):
        raise ValueError("log_gamma needs a positive argument, got %r" % (z,))
    return math.lgamma(z)


def coupling(j, order):
    """Single coupling beta_j of the squeeze chain with the given order.

    Evaluated as exp(0.5 * (ln Gamma((j+1) n + 1) - ln Gamma(j n + 1)))
    so that each entry is an independent two-call computation.
    """
    if j < 0:
        raise ValueError("coupling index must be nonnegative")
    if order < 0.0:
        raise ValueError("squeezing order must be nonnegative")
    half = 0.5 * (log_gamma((j + 1) * order + 1.0) - log_gamma(j * order + 1.0))
    if half > _LN_DBL_MAX:
        raise OverflowError(
            "coupling beta_%d at order %g exceeds double precision range" % (j, order)
        )
    return math.exp(half)


def build_squeeze_chain(size, order):
    """Chain of the given size with gamma-ratio couplings of order n."""
    if size < 2:
        raise ValueError("chain size must be at least 2")
    order = float(order)
    beta = np.empty(size - 1)
    for j in range(size - 1):
        beta[j] = coupling(j, order)
    return TridiagonalChain(size=size, couplings=beta, origin="squeeze", order=order)


def build_hierarchical_chain(size, ratio, h2=1.0):
    """Chain with geometric couplings h2, h2*ratio, h2*ratio^2, ...

    Consecutive couplings grow by the fixed factor ratio > 1, giving a
    strict separation of scales along the chain; h2 sets the overall
    scale (the weakest coupling).
    """
    if size < 2:
        raise ValueError("chain size must be at least 2")
    ratio = float(ratio)
    h2 = float(h2)
    if not ratio > 1.0:
        raise ValueError("hierarchy ratio must exceed 1")
    if not h2 > 0.0:
        raise ValueError("base coupling h2 must be positive")
    beta = np.empty(size - 1)
    for j in range(size - 1):
        beta[j] = h2 * ratio ** j
    if not np.all(np.isfinite(beta)):
        raise OverflowError("hierarchical couplings exceed double precision range")
    return TridiagonalChain(size=size, couplings=beta, origin="hierarchical")


def custom_chain(couplings, origin="custom"):
    """Chain from an explicit coupling sequence."""
    beta = np.asarray(couplings, dtype=np.float64)
    return TridiagonalChain(size=beta.shape[0] + 1, couplings=beta, origin=origin)


def format_chain(chain):
    """Text form of a chain: header "N n origin", one coupling per line.

    Couplings are written with 17 significant digits, enough to
    reproduce the doubles exactly on reload.
    """
    lines = ["%d %.16e %s" % (chain.size, chain.order, chain.origin)]
    for b in chain.couplings:
        lines.append("%.16e" % b)
    return "\n".join(lines) + "\n"


def save_chain(chain, path):
    """Write the text form of a chain to a file."""
    with open(path, "w") as fh:
        fh.write(format_chain(chain))


def load_chain(path):
    """Read a chain written by save_chain; exact round trip."""
    with open(path) as fh:
        raw = [ln.strip() for ln in fh if ln.strip()]
    if not raw:
        raise ValueError("empty chain file %s" % path)
    head = raw[0].split()
    if len(head) != 3:
        raise ValueError("malformed chain header %r" % raw[0])
    size = int(head[0])
    order = float(head[1])
    origin = head[2]
    beta = np.array([float(tok) for tok in raw[1:]])
    if beta.shape[0] != size - 1:
        raise ValueError(
            "chain file %s declares size %d but carries %d couplings"
            % (path, size, beta.shape[0])
        )
    return TridiagonalChain(size=size, couplings=beta, origin=origin, order=order)
