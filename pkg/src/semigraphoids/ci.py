"""CI statements, subsets, elementary imsets and the semigraphoid axioms.

Subsets of ``[n] = {1..n}`` are bitmasks with element ``e`` stored at bit
``e - 1``.  Statements are ordered by ``|K|``, then by ``K`` as an integer,
then by the pair ``(i, j)``; that order fixes the coordinates of
``Z^gamma_n`` everywhere in the package.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

MIN_N = 2
MAX_N = 8


def check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or not MIN_N <= n <= MAX_N:
        raise ValueError(f"ground set size must be in [{MIN_N}, {MAX_N}], got {n!r}")
    return int(n)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def subset_digits(mask: int) -> str:
    return "".join(str(e) for e in elements_of(mask))


class CIStatement(NamedTuple):
    """The symbol ``[i _||_ j | K]`` with ``i < j`` and ``K`` a bitmask."""

    i: int
    j: int
    K: int

    @classmethod
    def make(cls, i: int, j: int, K: int | Iterable[int] = 0) -> "CIStatement":
        if not isinstance(K, int):
            K = mask_of(K)
        if i == j:
            raise ValueError(f"statement needs two distinct elements, got {i}, {j}")
        if i > j:
            i, j = j, i
        if K >> (i - 1) & 1 or K >> (j - 1) & 1:
            raise ValueError(f"conditioning set {subset_digits(K)} meets the pair {i}{j}")
        return cls(i, j, K)

    @property
    def level(self) -> int:
        return popcount(self.K)

    def valid_for(self, n: int) -> bool:
        return (
            1 <= self.i < self.j <= n
            and self.K >> n == 0
            and not (self.K >> (self.i - 1)) & 1
            and not (self.K >> (self.j - 1)) & 1
        )

    def __str__(self) -> str:
        return f"{self.i}.{self.j}|{subset_digits(self.K)}"


_STATEMENT_RE = re.compile(r"^\s*(\d)\s*\.\s*(\d)\s*\|\s*(\d*)\s*$")


def parse_statement(text: str) -> CIStatement:
    """Parse ``i.j|K`` syntax, e.g. ``2.3|14`` or ``1.2|``."""
    m = _STATEMENT_RE.match(text)
    if not m:
        raise ValueError(f"malformed statement {text!r}; expected i.j|K")
    digits = m.group(3)
    K = [int(c) for c in digits]
    if len(set(K)) != len(K) or 0 in K:
        raise ValueError(f"malformed conditioning set in {text!r}")
    return CIStatement.make(int(m.group(1)), int(m.group(2)), K)


def gamma(n: int) -> int:
    n = check_n(n)
    return comb(n, 2) * 2 ** (n - 2)


@lru_cache(maxsize=None)
def enumerate_statements(n: int) -> tuple[CIStatement, ...]:
    n = check_n(n)
    full = (1 << n) - 1
    out = []
    masks = sorted(range(full + 1), key=lambda m: (popcount(m), m))
    for K in masks:
        rest = [e for e in range(1, n + 1) if not K >> (e - 1) & 1]
        for i, j in combinations(rest, 2):
            out.append(CIStatement(i, j, K))
    return tuple(out)


@lru_cache(maxsize=None)
def statement_index(n: int) -> dict[CIStatement, int]:
    return {s: k for k, s in enumerate(enumerate_statements(n))}


def ordinal(s: CIStatement, n: int) -> int:
    try:
        return statement_index(n)[s]
    except KeyError:
        raise ValueError(f"{s} is not a statement over [{n}]") from None


def elementary_imset(s: CIStatement, n: int) -> np.ndarray:
    """``e_iK + e_jK - e_K - e_ijK`` as a dense vector indexed by subset mask."""
    n = check_n(n)
    if not s.valid_for(n):
        raise ValueError(f"{s} is not a statement over [{n}]")
    v = np.zeros(1 << n, dtype=np.int64)
    bi, bj = 1 << (s.i - 1), 1 << (s.j - 1)
    v[s.K | bi] += 1
    v[s.K | bj] += 1
    v[s.K] -= 1
    v[s.K | bi | bj] -= 1
    return v


@lru_cache(maxsize=None)
def _matrix(n: int) -> np.ndarray:
    cols = [elementary_imset(s, n) for s in enumerate_statements(n)]
    A = np.stack(cols, axis=1)
    A.flags.writeable = False
    return A


def build_matrix(n: int) -> np.ndarray:
    """The ``2^n x gamma_n`` matrix whose columns are the elementary imsets."""
    return _matrix(check_n(n))


class AxiomEquation(NamedTuple):
    """``x + y = z + w`` over statement ordinals, canonically ordered."""

    lhs: tuple[int, int]
    rhs: tuple[int, int]

    @classmethod
    def canonical(cls, x: int, y: int, z: int, w: int) -> "AxiomEquation":
        a = tuple(sorted((x, y)))
        b = tuple(sorted((z, w)))
        return cls(*min((a, b), (b, a)))

    def vector(self, n: int) -> np.ndarray:
        v = np.zeros(gamma(n), dtype=np.int64)
        for k in self.lhs:
            v[k] += 1
        for k in self.rhs:
            v[k] -= 1
        return v

    def format(self, n: int) -> str:
        st = enumerate_statements(n)
        x, y = self.lhs
        z, w = self.rhs
        return f"{st[x]} + {st[y]} = {st[z]} + {st[w]}"


@lru_cache(maxsize=None)
def generate_axioms(n: int) -> tuple[AxiomEquation, ...]:
    """All equations ``[i|j|Kl] + [i|l|K] = [i|j|K] + [i|l|Kj]``, deduplicated."""
    n = check_n(n)
    idx = statement_index(n)
    out = set()
    for K in range(1 << n):
        rest = [e for e in range(1, n + 1) if not K >> (e - 1) & 1]
        for triple in combinations(rest, 3):
            for i in triple:
                j, l = (e for e in triple if e != i)
                bj, bl = 1 << (j - 1), 1 << (l - 1)
                x = idx[CIStatement.make(i, j, K | bl)]
                y = idx[CIStatement.make(i, l, K)]
                z = idx[CIStatement.make(i, j, K)]
                w = idx[CIStatement.make(i, l, K | bj)]
                out.add(AxiomEquation.canonical(x, y, z, w))
    return tuple(sorted(out))


def axiom_matrix(n: int) -> np.ndarray:
    """Rows are the signed vectors of :func:`generate_axioms`."""
    return np.stack([eq.vector(n) for eq in generate_axioms(n)])


def parse_equation(text: str, n: int) -> AxiomEquation:
    """Parse ``x + y = z + w`` written in statement syntax."""
    try:
        left, right = text.split("=")
        x, y = (parse_statement(t) for t in left.split("+"))
        z, w = (parse_statement(t) for t in right.split("+"))
    except ValueError as exc:
        raise ValueError(f"malformed equation {text!r}: {exc}") from None
    return AxiomEquation.canonical(*(ordinal(s, n) for s in (x, y, z, w)))


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(int(e) for e in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of [{n}]")
    return sigma


def permute_mask(sigma: Sequence[int], mask: int) -> int:
    return mask_of(sigma[e - 1] for e in elements_of(mask))


def apply_permutation(sigma: Sequence[int], s: CIStatement) -> CIStatement:
    """Relabel ``[i|j|K]`` to ``[sigma(i)|sigma(j)|sigma(K)]``; ``sigma`` is a word."""
    return CIStatement.make(sigma[s.i - 1], sigma[s.j - 1], permute_mask(sigma, s.K))


@lru_cache(maxsize=4096)
def statement_permutation(sigma: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Ordinal map ``k -> ordinal(sigma . statement_k)``."""
    idx = statement_index(n)
    return tuple(idx[apply_permutation(sigma, s)] for s in enumerate_statements(n))


def level_counts(b: Sequence[int], n: int | None = None) -> tuple[int, ...] | None:
    """Number of statements per conditioning-set size in any ``x >= 0`` with ``A x = b``.

    Returns ``None`` when no nonnegative integer count vector is consistent with
    the level sums of ``b``.
    """
    b = np.asarray(b, dtype=np.int64)
    if n is None:
        n = int(b.size).bit_length() - 1
    n = check_n(n)
    if b.size != 1 << n:
        raise ValueError(f"imset has length {b.size}, expected {1 << n}")
    L = [0] * (n + 1)
    for S in range(1 << n):
        L[popcount(S)] += int(b[S])
    counts = [0] * (n + 1)

    def c(t: int) -> int:
        return counts[t] if t >= 0 else 0

    for t in range(n - 1):
        counts[t] = 2 * c(t - 1) - c(t - 2) - L[t]
        if counts[t] < 0:
            return None
    for t in (n - 1, n):
        if 2 * c(t - 1) - c(t - 2) - L[t] != 0:
            return None
    return tuple(counts[: n - 1])


def imset_degree(b: Sequence[int], n: int) -> int:
    """``-<b, |S|^2> / 2``: the number of elementary imsets summing to ``b``."""
    b = np.asarray(b, dtype=np.int64)
    sq = np.array([popcount(S) ** 2 for S in range(1 << n)], dtype=np.int64)
    total = -int(b @ sq)
    if total % 2:
        raise ValueError("imset is not in the lattice spanned by elementary imsets")
    return total // 2


def parse_imset(text: str, n: int) -> np.ndarray:
    """Parse lines ``<coeff> <subset digits>`` (``0`` for the empty set)."""
    n = check_n(n)
    b = np.zeros(1 << n, dtype=np.int64)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<coeff> <subset>', got {raw!r}")
        try:
            coeff = int(parts[0])
        except ValueError:
            raise ValueError(f"line {lineno}, column 1: bad coefficient {parts[0]!r}") from None
        digits = parts[1]
        if digits == "0":
            S = 0
        else:
            if not digits.isdigit() or "0" in digits or len(set(digits)) != len(digits):
                raise ValueError(f"line {lineno}: bad subset {digits!r}")
            elems = [int(c) for c in digits]
            if max(elems) > n:
                raise ValueError(f"line {lineno}: subset {digits} not inside [{n}]")
            S = mask_of(elems)
        b[S] += coeff
    return b


def format_imset(b: Sequence[int]) -> str:
    b = np.asarray(b)
    n = int(b.size).bit_length() - 1
    order = sorted(range(1 << n), key=lambda m: (popcount(m), elements_of(m)))
    lines = [f"{int(b[S])} {subset_digits(S) or '0'}" for S in order if b[S]]
    return "\n".join(lines) + ("\n" if lines else "")


def imset_from_terms(terms: dict[str, int], n: int) -> np.ndarray:
    """Build an imset from ``{"25": 2, "0": -1}`` style terms."""
    b = np.zeros(1 << n, dtype=np.int64)
    for digits, c in terms.items():
        b[0 if digits == "0" else mask_of(int(ch) for ch in digits)] += c
    return b


def combination_vector(statements: Iterable[CIStatement | str], n: int) -> np.ndarray:
    """Multiplicity vector in ``N^gamma_n`` of a list of statements (repeats add up)."""
    x = np.zeros(gamma(n), dtype=np.int64)
    for s in statements:
        if isinstance(s, str):
            s = parse_statement(s)
        x[ordinal(s, n)] += 1
    return x
