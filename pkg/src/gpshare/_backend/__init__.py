"""Backend selection for the residue-arithmetic kernels.

The compiled extension is preferred when it imports cleanly; otherwise
the pure reference implementation is used.  Set ``GPSHARE_PURE=1`` to
force the pure backend (useful for benchmarking and debugging).  Both
backends implement the identical contract, and the test suite checks
them against each other.
"""

import os

from . import pyref

if os.environ.get("GPSHARE_PURE"):
    _impl = pyref
    BACKEND = "pure"
else:
    try:
        from . import _ringkernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = pyref
        BACKEND = "pure"

reduce_center = _impl.reduce_center
add_mod = _impl.add_mod
sub_mod = _impl.sub_mod
neg_mod = _impl.neg_mod
scale_mod = _impl.scale_mod
sum_rows_mod = _impl.sum_rows_mod
last_share = _impl.last_share
masked_residual = _impl.masked_residual
reduce_center_exact = pyref.reduce_center_exact  # big-int path is always pure


def backend_name() -> str:
    return BACKEND
