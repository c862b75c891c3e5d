"""Hot loops for the exhaustive semigraphoid scan.

Each kernel exists twice: a numba ``@njit`` version and a vectorised numpy
version.  ``SEMIGRAPHOID_NO_NUMBA=1`` (or a missing numba install) selects
the numpy path.  Both take the axioms as pairs of bitmasks over statement
ordinals and test the biconditional ``lhs <= S  <=>  rhs <= S``.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SEMIGRAPHOID_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _count_numpy(lhs: np.ndarray, rhs: np.ndarray, start: int, stop: int, chunk: int = 1 << 20) -> int:
    total = 0
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        masks = np.arange(lo, hi, dtype=np.uint64)
        ok = np.ones(hi - lo, dtype=bool)
        for L, R in zip(lhs, rhs):
            ok &= ((masks & L) == L) == ((masks & R) == R)
        total += int(ok.sum())
    return total


def _select_numpy(lhs: np.ndarray, rhs: np.ndarray, start: int, stop: int, chunk: int = 1 << 20) -> np.ndarray:
    found = []
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        masks = np.arange(lo, hi, dtype=np.uint64)
        ok = np.ones(hi - lo, dtype=bool)
        for L, R in zip(lhs, rhs):
            ok &= ((masks & L) == L) == ((masks & R) == R)
        found.append(masks[ok])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _passes(m, lhs, rhs):
        for k in range(lhs.shape[0]):
            L = lhs[k]
            R = rhs[k]
            if ((m & L) == L) != ((m & R) == R):
                return False
        return True

    @njit(cache=True)
    def _count_numba(lhs, rhs, start, stop):
        total = 0
        for m in range(start, stop):
            if _passes(np.uint64(m), lhs, rhs):
                total += 1
        return total

    @njit(cache=True)
    def _select_numba(lhs, rhs, start, stop):
        out = np.empty(stop - start, dtype=np.uint64)
        k = 0
        for m in range(start, stop):
            mm = np.uint64(m)
            if _passes(mm, lhs, rhs):
                out[k] = mm
                k += 1
        return out[:k].copy()


def count_passing(lhs: np.ndarray, rhs: np.ndarray, start: int, stop: int, use_numba: bool | None = None) -> int:
    """Number of masks in ``[start, stop)`` satisfying every axiom biconditional."""
    lhs = np.ascontiguousarray(lhs, dtype=np.uint64)
    rhs = np.ascontiguousarray(rhs, dtype=np.uint64)
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return int(_count_numba(lhs, rhs, start, stop))
    return _count_numpy(lhs, rhs, start, stop)


def select_passing(lhs: np.ndarray, rhs: np.ndarray, start: int, stop: int, use_numba: bool | None = None) -> np.ndarray:
    """Sorted masks in ``[start, stop)`` satisfying every axiom biconditional."""
    lhs = np.ascontiguousarray(lhs, dtype=np.uint64)
    rhs = np.ascontiguousarray(rhs, dtype=np.uint64)
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _select_numba(lhs, rhs, start, stop)
    return _select_numpy(lhs, rhs, start, stop)
