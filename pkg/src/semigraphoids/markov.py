"""Markov moves of the matrix ``A``: kernel membership, indispensability, orbits,
fiber connectivity and monomial primes containing the axiom binomials."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .ci import (
    build_matrix,
    check_n,
    enumerate_statements,
    gamma,
    generate_axioms,
    ordinal,
    parse_statement,
    statement_permutation,
)
from .imsets import DEFAULT_MAX_DEGREE, enumerate_fiber


@dataclass(frozen=True)
class MarkovMove:
    """An integer vector ``g = g+ - g-`` over statement ordinals."""

    n: int
    vector: tuple[int, ...]

    def __post_init__(self) -> None:
        check_n(self.n)
        if len(self.vector) != gamma(self.n):
            raise ValueError(f"move has length {len(self.vector)}, expected {gamma(self.n)}")

    @classmethod
    def from_parts(cls, n: int, plus: Sequence[int], minus: Sequence[int]) -> "MarkovMove":
        return cls(n, tuple(int(p) - int(m) for p, m in zip(plus, minus)))

    @property
    def plus(self) -> np.ndarray:
        return np.maximum(np.array(self.vector, dtype=np.int64), 0)

    @property
    def minus(self) -> np.ndarray:
        return np.maximum(-np.array(self.vector, dtype=np.int64), 0)

    @property
    def degree(self) -> int:
        return int(self.plus.sum())

    def is_zero(self) -> bool:
        return not any(self.vector)

    def __neg__(self) -> "MarkovMove":
        return MarkovMove(self.n, tuple(-v for v in self.vector))

    def canonical(self) -> "MarkovMove":
        """Sign-normalised: the first nonzero entry is positive."""
        for v in self.vector:
            if v:
                return self if v > 0 else -self
        return self

    def permuted(self, sigma: Sequence[int]) -> "MarkovMove":
        perm = statement_permutation(tuple(sigma), self.n)
        out = [0] * len(self.vector)
        for k, v in enumerate(self.vector):
            out[perm[k]] = v
        return MarkovMove(self.n, tuple(out))

    def to_text(self) -> str:
        st = enumerate_statements(self.n)

        def mono(vec) -> str:
            return " ".join(f"{st[k]}" + (f"^{int(m)}" if m > 1 else "") for k, m in enumerate(vec) if m)

        return f"+ {mono(self.plus)}\n- {mono(self.minus)}\n"


_TOKEN = re.compile(r"^(?P<s>[^\^]+)(?:\^(?P<m>\d+))?$")


def _monomial(tokens: Iterable[str], n: int, lineno: int) -> np.ndarray:
    v = np.zeros(gamma(n), dtype=np.int64)
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"line {lineno}: bad token {tok!r}")
        try:
            s = parse_statement(m.group("s"))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not s.valid_for(n):
            raise ValueError(f"line {lineno}: {s} is not a statement over [{n}]")
        v[ordinal(s, n)] += int(m.group("m") or 1)
    return v


def _move_lines(text: str) -> list[tuple[int, str, list[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sign, rest = line[0], line[1:].split()
        if sign not in "+-−":
            raise ValueError(f"line {lineno}, column 1: expected '+' or '-'")
        lines.append((lineno, "+" if sign == "+" else "-", rest))
    return lines


def infer_move_n(text: str, default: int = 4) -> int:
    top = 0
    for _, _, toks in _move_lines(text):
        for tok in toks:
            s = parse_statement(tok.split("^")[0])
            top = max(top, s.j, s.K.bit_length())
    return top or default


def parse_moves(text: str, n: int) -> list[MarkovMove]:
    """Consecutive ``+`` / ``-`` line pairs, one move per pair."""
    lines = _move_lines(text)
    if len(lines) % 2:
        raise ValueError("move file needs '+' and '-' lines in pairs")
    moves = []
    for (l1, s1, t1), (l2, s2, t2) in zip(lines[::2], lines[1::2]):
        if (s1, s2) != ("+", "-"):
            raise ValueError(f"line {l1}: expected a '+' line followed by a '-' line")
        moves.append(MarkovMove.from_parts(n, _monomial(t1, n, l1), _monomial(t2, n, l2)))
    return moves


def parse_move(text: str, n: int) -> MarkovMove:
    moves = parse_moves(text, n)
    if len(moves) != 1:
        raise ValueError(f"expected one move, found {len(moves)}")
    return moves[0]


def axiom_moves(n: int) -> list[MarkovMove]:
    """The quadrics ``xy - zw`` of the axiom equations."""
    out = []
    for eq in generate_axioms(n):
        v = [0] * gamma(n)
        for k in eq.lhs:
            v[k] += 1
        for k in eq.rhs:
            v[k] -= 1
        out.append(MarkovMove(n, tuple(v)))
    return out


def in_kernel(m: MarkovMove) -> bool:
    return not np.any(build_matrix(m.n) @ np.array(m.vector, dtype=np.int64))


def is_indispensable(m: MarkovMove, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    """The fiber through ``g+`` is exactly ``{g+, g-}``."""
    if m.is_zero():
        raise ValueError("zero move")
    if not in_kernel(m):
        raise ValueError("move is not in the kernel of A")
    fiber = enumerate_fiber(build_matrix(m.n) @ m.plus, max_degree)
    return fiber.elements == {tuple(int(v) for v in m.plus), tuple(int(v) for v in m.minus)}


def orbit(m: MarkovMove) -> set[MarkovMove]:
    """``{+-sigma.m}`` over the symmetric group, sign-normalised."""
    return {m.permuted(sigma).canonical() for sigma in permutations(range(1, m.n + 1))}


@dataclass
class ConnectivityReport:
    fibers: list[tuple[tuple[int, ...], int, int]]  # (target, size, components)

    @property
    def connected(self) -> bool:
        return all(c <= 1 for _, _, c in self.fibers)


def fiber_components(elements: Iterable[tuple[int, ...]], basis: Sequence[MarkovMove]) -> int:
    """Connected components of the fiber graph with edges ``x <-> x +- v``."""
    nodes = set(elements)
    steps = [np.array(m.vector, dtype=np.int64) for m in basis]
    steps += [-s for s in steps]
    seen: set[tuple[int, ...]] = set()
    comps = 0
    for start in nodes:
        if start in seen:
            continue
        comps += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            x = np.array(queue.popleft(), dtype=np.int64)
            for s in steps:
                y = x + s
                if (y >= 0).all():
                    t = tuple(int(v) for v in y)
                    if t in nodes and t not in seen:
                        seen.add(t)
                        queue.append(t)
    return comps


def connectivity_check(
    basis: Sequence[MarkovMove],
    targets: Iterable[Sequence[int]],
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> ConnectivityReport:
    for m in basis:
        if not in_kernel(m):
            raise ValueError("basis move not in the kernel of A")
    rows = []
    seen = set()
    for b in targets:
        key = tuple(int(v) for v in b)
        if key in seen:
            continue
        seen.add(key)
        F = enumerate_fiber(b, max_degree)
        rows.append((key, len(F), fiber_components(F.elements, basis)))
    return ConnectivityReport(rows)


def degree_targets(n: int, degree: int) -> list[np.ndarray]:
    """Every distinct ``A x`` with ``x`` a multiset of exactly ``degree`` statements."""
    from itertools import combinations_with_replacement

    A = build_matrix(n)
    out = {}
    for combo in combinations_with_replacement(range(gamma(n)), degree):
        x = np.bincount(np.array(combo, dtype=np.int64), minlength=gamma(n))
        b = A @ x
        out.setdefault(tuple(int(v) for v in b), b)
    return list(out.values())


def parse_prime(text: str, n: int) -> frozenset[int]:
    """Whitespace-separated generators of a monomial prime."""
    return frozenset(ordinal(parse_statement(t), n) for t in text.split())


def prime_contains_axioms(p: Iterable[int], n: int) -> bool:
    """Every axiom binomial lies in the monomial prime generated by ``p``."""
    p = set(p)
    return all(set(eq.lhs) & p and set(eq.rhs) & p for eq in generate_axioms(n))


def prime_orbit(p: Iterable[int], n: int) -> set[frozenset[int]]:
    p = frozenset(p)
    return {frozenset(statement_permutation(sigma, n)[k] for k in p) for sigma in permutations(range(1, n + 1))}


def zero_one_vector(bits: int, n: int) -> np.ndarray:
    """1 on the statements of a semigraphoid, 0 elsewhere."""
    return np.array([(bits >> k) & 1 for k in range(gamma(n))], dtype=np.int64)


def annihilates_axioms(point: Sequence[int], n: int) -> bool:
    """``x^{lhs} - x^{rhs}`` vanishes at ``point`` for every axiom binomial."""
    return all(
        point[a] * point[b] == point[c] * point[d] for (a, b), (c, d) in generate_axioms(n)
    )


def count_01_points(n: int) -> tuple[int, int]:
    """``(#V01(I_SG), #V01(I_A))``: semigraphoids and submodular semigraphoids."""
    from .semigraphoid import semigraphoid_masks
    from .submodular import count_submodular

    masks = semigraphoid_masks(n)
    return len(masks), count_submodular(n, masks)
