"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; otherwise
the pure Python twins take over with identical numerics.  Setting
FRACSQUEEZE_KERNELS=python (or =compiled) forces the choice, which the
parity tests and the benchmark use to pin one side.
"""

import os

_forced = os.environ.get("FRACSQUEEZE_KERNELS", "").strip().lower()

if _forced in ("python", "py", "pure"):
    from . import _py as _impl
    BACKEND = "python"
elif _forced in ("compiled", "c", "cython"):
    from . import _core as _impl  # raises if the extension is missing
    BACKEND = "compiled"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _py as _impl
        BACKEND = "python"

sturm_count = _impl.sturm_count
bisect_index = _impl.bisect_index
solve_shifted = _impl.solve_shifted
