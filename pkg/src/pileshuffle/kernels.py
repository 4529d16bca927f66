"""Kernel backend selection.

The hot inner loops (sort-condition scans, greedy dealer scan, batched
run statistics) exist twice: compiled Cython kernels in ``_kernels_c``
and a NumPy/pure-Python fallback in ``_kernels_py``.  The compiled module
is preferred when importable; set ``PILESHUFFLE_PURE=1`` to force the
fallback.  ``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("PILESHUFFLE_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

check_scan = _impl.check_scan
minimal_scan = _impl.minimal_scan
dealer_scan = _impl.dealer_scan
readings_scan = _impl.readings_scan
batch_descents = _impl.batch_descents
batch_ascents = _impl.batch_ascents
batch_dealer_piles = _impl.batch_dealer_piles


def as_int64(values) -> np.ndarray:
    return np.asarray(values, dtype=np.int64)
