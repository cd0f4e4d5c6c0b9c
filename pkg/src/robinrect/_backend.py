"""Backend selection: compiled extension if available, numpy otherwise.

Set ``ROBINRECT_PURE=1`` in the environment to force the numpy backend.
``window_pair_diffs`` is always served by the numpy implementation; it is
needed for custom (python-callable) pair-correlation kernels on either
backend.
"""

import os

from . import _purecore

window_pair_diffs = _purecore.window_pair_diffs

if os.environ.get("ROBINRECT_PURE"):
    _core = _purecore
    BACKEND = "python"
else:
    try:
        from . import _fastcore as _core

        BACKEND = "compiled"
    except ImportError:
        _core = _purecore
        BACKEND = "python"

solve_offset = _core.solve_offset
solve_offsets = _core.solve_offsets
hl_scan = _core.hl_scan
r2_builtin_sum = _core.r2_builtin_sum
