"""Statement sets, the semigraphoid predicate, closure and exhaustive enumeration."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .ci import (
    CIStatement,
    apply_permutation,
    check_n,
    enumerate_statements,
    gamma,
    generate_axioms,
    ordinal,
    parse_statement,
)


@dataclass(frozen=True)
class StatementSet:
    """A set of CI statements over ``[n]`` stored as a bitset over ordinals."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        check_n(self.n)
        if self.bits < 0 or self.bits >> gamma(self.n):
            raise ValueError(f"bitset wider than gamma_{self.n} = {gamma(self.n)}")

    @classmethod
    def of(cls, n: int, statements: Iterable[CIStatement | str | int]) -> "StatementSet":
        bits = 0
        for s in statements:
            if isinstance(s, str):
                s = parse_statement(s)
            k = s if isinstance(s, int) else ordinal(s, n)
            if not 0 <= k < gamma(n):
                raise ValueError(f"ordinal {k} out of range for n={n}")
            bits |= 1 << k
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "StatementSet":
        return cls(n, (1 << gamma(n)) - 1)

    @classmethod
    def empty(cls, n: int) -> "StatementSet":
        return cls(n, 0)

    def __contains__(self, s: CIStatement | str | int) -> bool:
        if isinstance(s, str):
            s = parse_statement(s)
        k = s if isinstance(s, int) else ordinal(s, self.n)
        return bool(self.bits >> k & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def ordinals(self) -> list[int]:
        b, out, k = self.bits, [], 0
        while b:
            if b & 1:
                out.append(k)
            b >>= 1
            k += 1
        return out

    def __iter__(self) -> Iterator[CIStatement]:
        st = enumerate_statements(self.n)
        return (st[k] for k in self.ordinals())

    def _same(self, other: "StatementSet") -> None:
        if other.n != self.n:
            raise ValueError("statement sets over different ground sets")

    def __or__(self, other: "StatementSet") -> "StatementSet":
        self._same(other)
        return StatementSet(self.n, self.bits | other.bits)

    def __and__(self, other: "StatementSet") -> "StatementSet":
        self._same(other)
        return StatementSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "StatementSet") -> "StatementSet":
        self._same(other)
        return StatementSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: "StatementSet") -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "StatementSet":
        return StatementSet(self.n, ((1 << gamma(self.n)) - 1) & ~self.bits)

    def add(self, s: CIStatement | str | int) -> "StatementSet":
        return self | StatementSet.of(self.n, [s])

    def is_full(self) -> bool:
        return self.bits == (1 << gamma(self.n)) - 1

    def permuted(self, sigma) -> "StatementSet":
        return StatementSet.of(self.n, [apply_permutation(sigma, s) for s in self])

    def to_text(self) -> str:
        return "".join(f"{s}\n" for s in self)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self) + "}"


def parse_statement_set(text: str, n: int) -> StatementSet:
    """One ``i.j|K`` statement per line; ``#`` starts a comment."""
    items = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            s = parse_statement(line)
        except ValueError as exc:
            col = len(line) - len(line.lstrip()) + 1
            raise ValueError(f"line {lineno}, column {col}: {exc}") from None
        if not s.valid_for(n):
            raise ValueError(f"line {lineno}: {s} is not a statement over [{n}]")
        items.append(s)
    return StatementSet.of(n, items)


def infer_n(text: str, default: int = 4) -> int:
    """Largest element mentioned in a statement-set file (``default`` if none)."""
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            try:
                s = parse_statement(line)
            except ValueError as exc:
                col = len(line) - len(line.lstrip()) + 1
                raise ValueError(f"line {lineno}, column {col}: {exc}") from None
            top = max(top, s.j, s.K.bit_length())
    return top or default


@lru_cache(maxsize=None)
def axiom_masks(n: int) -> tuple[tuple[int, int], ...]:
    """Each axiom as ``(lhs bitmask, rhs bitmask)`` over statement ordinals."""
    return tuple(((1 << x) | (1 << y), (1 << z) | (1 << w)) for (x, y), (z, w) in generate_axioms(n))


def is_semigraphoid(S: StatementSet) -> bool:
    b = S.bits
    for L, R in axiom_masks(S.n):
        if (b & L == L) != (b & R == R):
            return False
    return True


def closure(S: StatementSet) -> StatementSet:
    """Smallest semigraphoid containing ``S``."""
    b = S.bits
    masks = axiom_masks(S.n)
    changed = True
    while changed:
        changed = False
        for L, R in masks:
            has_l = b & L == L
            has_r = b & R == R
            if has_l and not has_r:
                b |= R
                changed = True
            elif has_r and not has_l:
                b |= L
                changed = True
    return StatementSet(S.n, b)


def is_coarsest(S: StatementSet) -> bool:
    if not is_semigraphoid(S):
        raise ValueError("is_coarsest expects a semigraphoid")
    if S.is_full():
        return False
    return all(closure(S.add(c)).is_full() for c in S.complement().ordinals())


def type_signature(S: StatementSet) -> tuple[int, ...]:
    counts = [0] * (S.n - 1)
    for s in S:
        counts[s.level] += 1
    return tuple(counts)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SEMIGRAPHOID_THREADS", "") or os.cpu_count() or 1))
    except ValueError:
        return 1


def _kernel_masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    masks = axiom_masks(n)
    if gamma(n) > 64:
        raise ValueError("scan kernels need gamma_n <= 64")
    lhs = np.array([L for L, _ in masks], dtype=np.uint64)
    rhs = np.array([R for _, R in masks], dtype=np.uint64)
    return lhs, rhs


def _scan_range(n: int, start: int, stop: int) -> np.ndarray:
    lhs, rhs = _kernel_masks(n)
    return _kernels.select_passing(lhs, rhs, start, stop)


def _partitions(n: int, parts: int) -> list[tuple[int, int]]:
    total = 1 << gamma(n)
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def semigraphoid_masks(n: int, workers: int | None = None) -> np.ndarray:
    """Bitmasks of all semigraphoids on ``[n]`` (``n <= 4``), ascending."""
    n = check_n(n)
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to n <= 4")
    workers = workers or _threads()
    if n < 4 or workers == 1:
        return _scan_range(n, 0, 1 << gamma(n))
    parts = _partitions(n, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_scan_range, [n] * len(parts), *zip(*parts)))
    return np.concatenate(chunks)


def enumerate_all(n: int, start: int = 0, stop: int | None = None) -> Iterator[StatementSet]:
    """Yield every semigraphoid whose bitmask lies in ``[start, stop)``."""
    n = check_n(n)
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to n <= 4")
    stop = (1 << gamma(n)) if stop is None else stop
    masks = semigraphoid_masks(n) if (start, stop) == (0, 1 << gamma(n)) else _scan_range(n, start, stop)
    for m in masks:
        yield StatementSet(n, int(m))


def count_semigraphoids(n: int) -> int:
    n = check_n(n)
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to n <= 4")
    lhs, rhs = _kernel_masks(n)
    return _kernels.count_passing(lhs, rhs, 0, 1 << gamma(n))


@dataclass(frozen=True)
class ClassificationRow:
    size: int
    type_triple: tuple[int, ...]
    non_simplicial: int
    simplicial: int

    @property
    def total(self) -> int:
        return self.non_simplicial + self.simplicial

    def to_line(self) -> str:
        t = "(" + ",".join(map(str, self.type_triple)) + ")"
        return f"{self.size}\t{t}\t{self.non_simplicial}\t{self.simplicial}\t{self.total}"


TABLE_HEADER = "size\ttype\tnon_simplicial\tsimplicial\ttotal"


def classification_table(non_submodular: Iterable[StatementSet], simplicial) -> list[ClassificationRow]:
    """Group non-submodular semigraphoids by ``(|M|, type)``.

    ``simplicial`` is a predicate on statement sets; the caller supplies the
    submodularity filter and the simpliciality test.
    """
    groups: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    for S in non_submodular:
        key = (len(S), type_signature(S))
        g = groups.setdefault(key, [0, 0])
        g[1 if simplicial(S) else 0] += 1
    return [ClassificationRow(size, t, ns, s) for (size, t), (ns, s) in sorted(groups.items())]


def format_table(rows: Iterable[ClassificationRow]) -> str:
    return "\n".join([TABLE_HEADER, *(r.to_line() for r in rows)]) + "\n"
