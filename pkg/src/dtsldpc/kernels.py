"""Kernel dispatch: the compiled extension when it is importable and the
field has log tables, the pure-Python kernels otherwise.

Set ``DTSLDPC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .field import FieldMatrix

try:
    if os.environ.get("DTSLDPC_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _ckernels
except ImportError:
    _ckernels = None

HAVE_EXTENSION = _ckernels is not None
IMPLEMENTATION = "cython" if HAVE_EXTENSION else "python"


def _sparse(pattern: np.ndarray) -> tuple[list[list[int]], list[list[int]]]:
    col_rows = [np.flatnonzero(pattern[:, c]).tolist() for c in range(pattern.shape[1])]
    row_cols = [np.flatnonzero(pattern[r]).tolist() for r in range(pattern.shape[0])]
    return col_rows, row_cols


def circuit_search(
    H: FieldMatrix, n_first: int, dmax: int, budget: int, use_extension: bool | None = None
) -> tuple[list[int] | None, int, bool]:
    """Smallest-first search for a dependent column set through a leading column.

    See :func:`dtsldpc._pykernels.circuit_search` for the contract.
    """
    F = H.field
    if use_extension is None:
        use_extension = HAVE_EXTENSION
    if use_extension and not HAVE_EXTENSION:
        raise RuntimeError("compiled kernels are not available")
    pattern = H.pattern()
    maxw = int(pattern.sum(axis=0).max()) if H.cols else 0
    if use_extension and F.tabled and dmax * maxw <= 1024:
        neg_shift = 0 if F.p == 2 else F.order // 2
        zech = F.zech_table if F.order > 1 else np.array([-1], dtype=np.int64)
        return _ckernels.circuit_search(H.logs(), zech, max(F.order, 1), neg_shift, n_first, dmax, budget)
    col_rows, row_cols = _sparse(pattern)
    return _pykernels.circuit_search(F, H.vals.tolist(), col_rows, row_cols, n_first, dmax, budget)


def cycle_search(
    pattern: np.ndarray, lmax: int, budget: int, use_extension: bool | None = None
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], bool]:
    if use_extension is None:
        use_extension = HAVE_EXTENSION
    if use_extension and not HAVE_EXTENSION:
        raise RuntimeError("compiled kernels are not available")
    pattern = np.asarray(pattern) != 0
    if use_extension:
        return _ckernels.cycle_search(pattern.astype(np.int8), lmax, budget)
    col_rows, row_cols = _sparse(pattern)
    return _pykernels.cycle_search(col_rows, row_cols, lmax, budget)
