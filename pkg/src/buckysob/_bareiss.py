"""Kernel lane selection.

Imports the compiled elimination kernels when the extension built, falls
back to the pure-Python twins otherwise. ``BUCKYSOB_PURE=1`` forces the
pure lane (used by the benchmark and for debugging).
"""

import os

if os.environ.get("BUCKYSOB_PURE") == "1":
    from buckysob._bareiss_py import det_int, jordan_int

    KERNEL_LANE = "python"
else:
    try:
        from buckysob._bareiss_cy import det_int, jordan_int

        KERNEL_LANE = "cython"
    except ImportError:
        from buckysob._bareiss_py import det_int, jordan_int

        KERNEL_LANE = "python"

__all__ = ["det_int", "jordan_int", "KERNEL_LANE"]
