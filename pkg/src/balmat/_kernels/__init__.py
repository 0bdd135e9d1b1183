"""Kernel backend selection.

Imports the compiled extension when it is built, otherwise falls back to
the pure-Python implementation. Set BALMAT_PURE_PYTHON=1 to force the
fallback (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("BALMAT_PURE_PYTHON") == "1":
    from balmat._kernels import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from balmat._kernels import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from balmat._kernels import _pykernels as _impl

        BACKEND = "python"

OP_SWAP = 0
OP_SCALE = 1
OP_ADDMUL = 2

row_square_sums = _impl.row_square_sums
col_square_sums = _impl.col_square_sums
sums_all_close = _impl.sums_all_close
spread_defect = _impl.spread_defect
spectrum2 = _impl.spectrum2
rref = _impl.rref
line_stats = _impl.line_stats
