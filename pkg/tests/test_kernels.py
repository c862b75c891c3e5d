from __future__ import annotations

import numpy as np
import pytest

from semigraphoids import _kernels
from semigraphoids.semigraphoid import axiom_masks


def _arrays(n):
    pairs = axiom_masks(n)
    return (np.array([a for a, _ in pairs], dtype=np.uint64), np.array([b for _, b in pairs], dtype=np.uint64))


def test_numpy_path_n3():
    lhs, rhs = _arrays(3)
    assert _kernels.count_passing(lhs, rhs, 0, 64, use_numba=False) == 22


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable or disabled")
def test_backends_agree_on_a_slice():
    lhs, rhs = _arrays(4)
    lo, hi = 3 << 18, (3 << 18) + (1 << 17)
    a = _kernels.select_passing(lhs, rhs, lo, hi, use_numba=True)
    b = _kernels.select_passing(lhs, rhs, lo, hi, use_numba=False)
    assert a.tolist() == b.tolist()
    assert _kernels.count_passing(lhs, rhs, lo, hi, use_numba=True) == len(b)


def test_select_empty_range():
    lhs, rhs = _arrays(3)
    assert _kernels.select_passing(lhs, rhs, 5, 5, use_numba=False).size == 0
