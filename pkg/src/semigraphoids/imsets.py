"""Membership in the semigraphoid semigroup and fibers of the map ``A``.

The lattice-point search is graded by conditioning-set size.  Once levels
``0..k-1`` are fixed, the residual at a subset ``T`` with ``|T| = k`` can only
still receive ``-1`` from statements ``[i.j|T]``, so the number of level-``k``
statements with conditioning set ``T`` is forced to be ``-residual[T]``.  The
search therefore only chooses which pairs accompany each forced ``K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .ci import (
    build_matrix,
    check_n,
    elements_of,
    enumerate_statements,
    gamma,
    imset_degree,
    level_counts,
    popcount,
    statement_index,
)
from .rational import FeasibilityProblem, single_ray_generator, solve_feasibility

DEFAULT_MAX_DEGREE = 12


class DegreeCapExceeded(ValueError):
    pass


def _as_imset(b: Sequence[int]) -> tuple[np.ndarray, int]:
    b = np.asarray(b, dtype=np.int64)
    n = int(b.size).bit_length() - 1
    if b.size != 1 << n:
        raise ValueError(f"imset length {b.size} is not a power of two")
    return b, check_n(n)


def image(x: Sequence[int], n: int) -> np.ndarray:
    """``A x`` for a multiplicity vector ``x``."""
    return build_matrix(n) @ np.asarray(x, dtype=np.int64)


def is_structural(b: Sequence[int]) -> bool:
    """Whether ``A x = b`` has a real solution ``x >= 0`` (exact LP)."""
    b, n = _as_imset(b)
    A = build_matrix(n).tolist()
    return solve_feasibility(FeasibilityProblem(A, b.tolist(), [0] * gamma(n))).feasible


@lru_cache(maxsize=None)
def _pairs_by_condition(n: int) -> dict[int, tuple[tuple[int, int, int, int], ...]]:
    """For each ``K``: statements ``(ordinal, K+i, K+j, K+ij)`` in ordinal order."""
    idx = statement_index(n)
    out: dict[int, list] = {}
    for s in enumerate_statements(n):
        bi, bj = 1 << (s.i - 1), 1 << (s.j - 1)
        out.setdefault(s.K, []).append((idx[s], s.K | bi, s.K | bj, s.K | bi | bj))
    return {K: tuple(v) for K, v in out.items()}


def _search(b: np.ndarray, n: int) -> Iterator[dict[int, int]]:
    """Yield every ``x in N^gamma`` with ``A x = b`` as ``{ordinal: multiplicity}``.

    ``R`` is the residual ``b - A x``.  Adding ``[i.j|K]`` lowers ``R`` at
    ``iK`` and ``jK`` and raises it at ``K`` and ``ijK``.  While level ``k`` is
    filled, residuals at size ``k+1`` only decrease and must end ``<= 0``
    (``== 0`` when no statement has a conditioning set that large).
    """
    if level_counts(b, n) is None:
        return
    R = [int(v) for v in b]
    pairs = _pairs_by_condition(n)
    by_level: list[list[int]] = [[] for _ in range(n + 1)]
    for K in range(1 << n):
        by_level[popcount(K)].append(K)
    full = (1 << n) - 1
    x: dict[int, int] = {}

    def level(k: int) -> Iterator[None]:
        if k > n - 2:
            if not any(R):
                yield None
            return
        slots = [(K, -R[K]) for K in by_level[k] if R[K]]
        if any(m < 0 for _, m in slots):
            return
        for K, _ in slots:
            R[K] = 0
        yield from fill(k, slots, 0)
        for K, m in slots:
            R[K] = -m

    def fill(k: int, slots, s: int) -> Iterator[None]:
        if s == len(slots):
            if k == n - 2 and R[full] > 0:
                return
            yield from level(k + 1)
            return
        K, m = slots[s]
        yield from choose(k, slots, s, pairs[K], 0, m)

    def choose(k: int, slots, s: int, options, first: int, left: int) -> Iterator[None]:
        if left == 0:
            if ok_after_slot(k, slots, s):
                yield from fill(k, slots, s + 1)
            return
        for p in range(first, len(options)):
            o, Ti, Tj, U = options[p]
            R[Ti] -= 1
            R[Tj] -= 1
            R[U] += 1
            x[o] = x.get(o, 0) + 1
            if not (k + 1 == n - 1 and (R[Ti] < 0 or R[Tj] < 0)):
                yield from choose(k, slots, s, options, p, left - 1)
            x[o] -= 1
            if not x[o]:
                del x[o]
            R[Ti] += 1
            R[Tj] += 1
            R[U] -= 1

    def ok_after_slot(k: int, slots, s: int) -> bool:
        exact = k + 1 == n - 1
        for T in by_level[k + 1]:
            r = R[T]
            if r < 0 and exact:
                return False
            if r > 0 and r > sum(m for K, m in slots[s + 1:] if K & T == K):
                return False
        return True

    for _ in level(0):
        yield dict(x)


def _vector(sol: dict[int, int], n: int) -> np.ndarray:
    v = np.zeros(gamma(n), dtype=np.int64)
    for k, m in sol.items():
        v[k] = m
    return v


def is_combinatorial(b: Sequence[int]) -> Optional[np.ndarray]:
    """A witness ``x in N^gamma`` with ``A x = b``, or ``None`` if there is none."""
    b, n = _as_imset(b)
    for sol in _search(b, n):
        x = _vector(sol, n)
        if not np.array_equal(image(x, n), b):
            raise RuntimeError("fiber search produced a non-solution")
        return x
    return None


@dataclass(frozen=True)
class Fiber:
    target: tuple[int, ...]
    elements: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(int(v) for v in x) in self.elements

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.elements, reverse=True)


def enumerate_fiber(b: Sequence[int], max_degree: int = DEFAULT_MAX_DEGREE) -> Fiber:
    """All ``x in N^gamma`` with ``A x = b``; refuses targets above ``max_degree``."""
    b, n = _as_imset(b)
    if level_counts(b, n) is None:
        return Fiber(tuple(int(v) for v in b))
    d = imset_degree(b, n)
    if d > max_degree:
        raise DegreeCapExceeded(f"target has degree {d} > cap {max_degree}")
    elems = set()
    for sol in _search(b, n):
        x = _vector(sol, n)
        if not np.array_equal(image(x, n), b):
            raise RuntimeError("fiber search produced a non-solution")
        elems.add(tuple(int(v) for v in x))
    return Fiber(tuple(int(v) for v in b), frozenset(elems))


def brute_force_fiber(b: Sequence[int], degree: int) -> set[tuple[int, ...]]:
    """Independent oracle: scan every multiset of ``degree`` statements."""
    from itertools import combinations_with_replacement

    b, n = _as_imset(b)
    A = build_matrix(n)
    out = set()
    for combo in combinations_with_replacement(range(gamma(n)), degree):
        x = np.bincount(np.array(combo, dtype=np.int64), minlength=gamma(n))
        if np.array_equal(A @ x, b):
            out.add(tuple(int(v) for v in x))
    return out


def format_combination(x: Sequence[int], n: int) -> str:
    """Multiset of statements, one ``i.j|K`` per line with ``^m`` for repeats."""
    st = enumerate_statements(n)
    lines = [f"{st[k]}" + (f"^{int(m)}" if m > 1 else "") for k, m in enumerate(x) if m]
    return "".join(f"{line}\n" for line in lines)


def cone_with_target(b: Sequence[int]) -> list[list[int]]:
    """Rows of ``[A | -b]``: the cone ``{(z, u) >= 0 : A z = b u}``."""
    b, n = _as_imset(b)
    A = build_matrix(n)
    return np.hstack([A, -b.reshape(-1, 1)]).tolist()


@dataclass
class NormalityReport:
    checks: list[tuple[str, object, object, bool]] = field(default_factory=list)

    def add(self, name: str, expected, actual) -> None:
        self.checks.append((name, expected, actual, expected == actual))

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)


def verify_nonnormality(
    b: Sequence[int],
    generator: Sequence[int] | None = None,
    expect_combinatorial: bool = False,
) -> NormalityReport:
    """Check that ``b`` is structural, (not) combinatorial, and ``2b`` is combinatorial.

    With ``generator`` given, also compare the single ray of
    ``{(z, u) >= 0 : A z = b u}`` against it.
    """
    b, n = _as_imset(b)
    rep = NormalityReport()
    rep.add("structural(b)", True, is_structural(b))
    rep.add("combinatorial(b)", expect_combinatorial, is_combinatorial(b) is not None)
    rep.add("combinatorial(2b)", True, is_combinatorial(2 * b) is not None)
    if generator is not None:
        ray = single_ray_generator(cone_with_target(b))
        rep.add("single ray of {A z = b u}", list(generator), None if ray is None else [int(v) for v in ray])
    return rep
