"""Submodularity of semigraphoids via two exact LP formulations.

Primal: a point of ``{x >= 0 : every axiom equation holds}`` vanishing exactly
on ``S``.  Dual: a set function ``w`` with ``<A_c, w> = 0`` on ``S`` and
``>= 1`` off ``S``.  Since the axioms span ``ker A``, solutions of the axiom
equations are exactly the vectors ``A^T w``, so the two must agree.  Strict
positivity is encoded as ``>= 1`` (the systems are homogeneous).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .ci import build_matrix, enumerate_statements, gamma, generate_axioms, subset_digits
from .rational import FeasibilityProblem, FeasibilityResult, check_certificate, solve_feasibility
from .semigraphoid import StatementSet, is_semigraphoid


@dataclass(frozen=True)
class SubmodularWitness:
    form: Literal["primal", "dual"]
    vector: tuple[Fraction, ...]


@dataclass(frozen=True)
class SubmodularityResult:
    submodular: bool
    form: Literal["primal", "dual"]
    witness: Optional[SubmodularWitness] = None
    certificate: Optional[tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.submodular


def _require_semigraphoid(S: StatementSet) -> None:
    if not is_semigraphoid(S):
        raise ValueError("submodularity is only defined for semigraphoids")


def primal_problem(S: StatementSet, rows: Sequence[int] | None = None) -> tuple[FeasibilityProblem, list[int]]:
    """Axiom equations restricted to the statements off ``S``, each ``>= 1``.

    ``rows`` selects a subset of axioms (by position in ``generate_axioms``).
    Returns the problem and the off-``S`` ordinals labelling its columns.
    """
    n = S.n
    off = S.complement().ordinals()
    pos = {c: k for k, c in enumerate(off)}
    axioms = generate_axioms(n)
    rows = range(len(axioms)) if rows is None else rows
    E = []
    for r in rows:
        (x, y), (z, w) = axioms[r]
        row = [0] * len(off)
        for c in (x, y):
            if c in pos:
                row[pos[c]] += 1
        for c in (z, w):
            if c in pos:
                row[pos[c]] -= 1
        E.append(row)
    return FeasibilityProblem(E, [0] * len(E), [1] * len(off)), off


def is_submodular_primal(S: StatementSet) -> SubmodularityResult:
    _require_semigraphoid(S)
    p, off = primal_problem(S)
    if not off:
        return SubmodularityResult(True, "primal", SubmodularWitness("primal", (0,) * gamma(S.n)))
    res = solve_feasibility(p)
    if res.feasible:
        x: list = [0] * gamma(S.n)
        for c, v in zip(off, res.witness):
            x[c] = v
        return SubmodularityResult(True, "primal", SubmodularWitness("primal", tuple(x)))
    return SubmodularityResult(False, "primal", certificate=tuple(res.certificate))


@lru_cache(maxsize=None)
def _matrix_rows(n: int) -> list[list[int]]:
    return build_matrix(n).tolist()


def _dual_problem(S: StatementSet) -> tuple[FeasibilityProblem, list[int]]:
    n = S.n
    A = _matrix_rows(n)
    # modular functions form the lineality space; pin w on the empty set and singletons
    wvars = [T for T in range(1 << n) if bin(T).count("1") >= 2]
    off = S.complement().ordinals()
    slack = {c: k for k, c in enumerate(off)}
    nv = len(wvars) + len(off)
    E = []
    for c in range(gamma(n)):
        row = [A[T][c] for T in wvars] + [0] * len(off)
        if c in slack:
            row[len(wvars) + slack[c]] = -1
        E.append(row)
    lower = [None] * len(wvars) + [1] * len(off)
    assert len(lower) == nv
    return FeasibilityProblem(E, [0] * len(E), lower), wvars


def is_submodular_dual(S: StatementSet) -> SubmodularityResult:
    _require_semigraphoid(S)
    p, wvars = _dual_problem(S)
    res = solve_feasibility(p)
    if not res.feasible:
        return SubmodularityResult(False, "dual", certificate=tuple(res.certificate))
    w: list = [0] * (1 << S.n)
    for T, v in zip(wvars, res.witness):
        w[T] = v
    if not check_dual_witness(S, w):
        raise RuntimeError("dual witness failed exact re-check")
    return SubmodularityResult(True, "dual", SubmodularWitness("dual", tuple(w)))


@lru_cache(maxsize=None)
def _column_terms(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Per statement: subsets carrying +1, +1, -1, -1 in its elementary imset."""
    out = []
    for s in enumerate_statements(n):
        bi, bj = 1 << (s.i - 1), 1 << (s.j - 1)
        out.append((s.K | bi, s.K | bj, s.K, s.K | bi | bj))
    return tuple(out)


def check_dual_witness(S: StatementSet, w: Sequence[Fraction]) -> bool:
    for c, (p, q, r, t) in enumerate(_column_terms(S.n)):
        v = w[p] + w[q] - w[r] - w[t]
        if (S.bits >> c & 1 and v != 0) or (not S.bits >> c & 1 and v < 1):
            return False
    return True


def check_primal_witness(S: StatementSet, x: Sequence[Fraction]) -> bool:
    for c in range(gamma(S.n)):
        if (c in S and x[c] != 0) or (c not in S and x[c] < 1):
            return False
    return all(x[a] + x[b] == x[c] + x[d] for (a, b), (c, d) in generate_axioms(S.n))


def is_submodular(S: StatementSet, form: Literal["primal", "dual"] = "dual") -> SubmodularityResult:
    """Decide submodularity; the dual form returns an interpretable set function."""
    if form == "dual":
        return is_submodular_dual(S)
    if form == "primal":
        return is_submodular_primal(S)
    raise ValueError(f"unknown form {form!r}")


def irreducible_rows(S: StatementSet, prefer_last: Sequence[int] = ()) -> list[int]:
    """Deletion filter: a minimal set of axiom rows whose primal system is infeasible.

    Rows are offered for deletion in order, except those in ``prefer_last``
    which are tried first so that they tend to drop out of the result.
    """
    n = S.n
    rows = list(range(len(generate_axioms(n))))
    late = [r for r in prefer_last if r in rows]
    order = late + [r for r in rows if r not in set(late)]
    keep = set(rows)
    for r in order:
        trial = sorted(keep - {r})
        p, _ = primal_problem(S, trial)
        if not solve_feasibility(p).feasible:
            keep.discard(r)
    return sorted(keep)


@dataclass(frozen=True)
class Certificate:
    """Nonnegative integer combination of oriented axiom equations.

    Each entry is ``(coefficient, lhs pair, rhs pair)``; summing the entries and
    setting the statements of ``S`` to zero yields ``0 = sum(weights * x)``
    with nonnegative weights not all zero.
    """

    n: int
    terms: tuple[tuple[int, tuple[int, int], tuple[int, int]], ...]
    residual: tuple[tuple[int, int], ...]  # (ordinal, weight) after zeroing S

    def oriented_vector(self) -> dict[tuple[tuple[int, int], tuple[int, int]], int]:
        return {(l, r): c for c, l, r in self.terms}


def find_certificate(S: StatementSet, prefer_last: Sequence[int] = ()) -> Certificate:
    _require_semigraphoid(S)
    p_full, off = primal_problem(S)
    if not off or solve_feasibility(p_full).feasible:
        raise ValueError("semigraphoid is submodular; no certificate exists")
    rows = irreducible_rows(S, prefer_last)
    p, off = primal_problem(S, rows)
    res = solve_feasibility(p)
    y = res.certificate
    axioms = generate_axioms(S.n)
    full = [Fraction(0)] * len(axioms)
    for r, v in zip(rows, y):
        full[r] = v
    p_check, _ = primal_problem(S)
    if not check_certificate(p_check, full):
        raise RuntimeError("certificate failed exact re-check on the full system")
    terms = []
    weights: dict[int, int] = {}
    for r, v in enumerate(full):
        if not v:
            continue
        assert v.denominator == 1
        c = int(v)
        (x, yy), (z, w) = axioms[r]
        lhs, rhs = ((x, yy), (z, w)) if c > 0 else ((z, w), (x, yy))
        terms.append((abs(c), lhs, rhs))
        for s in lhs:
            weights[s] = weights.get(s, 0) + abs(c)
        for s in rhs:
            weights[s] = weights.get(s, 0) - abs(c)
    residual = tuple(sorted((s, -v) for s, v in weights.items() if v and s not in S))
    return Certificate(S.n, tuple(terms), residual)


def certificate_report(S: StatementSet, prefer_last: Sequence[int] = ()) -> str:
    """Readable Farkas certificate for a non-submodular semigraphoid."""
    cert = find_certificate(S, prefer_last)
    st = enumerate_statements(S.n)

    def side(pair: tuple[int, int]) -> str:
        return " + ".join(f"[{st[k]}]" if k in S else str(st[k]) for k in pair)

    lines = [f"certificate: {len(cert.terms)} axiom equations, statements of M in brackets"]
    for c, l, r in cert.terms:
        lines.append(f"  {c} x ( {side(l)} = {side(r)} )")
    total = " + ".join(f"{w}*{st[k]}" if w != 1 else str(st[k]) for k, w in cert.residual)
    lines.append(f"sum, with M set to zero: 0 = {total}")
    lines.append("every statement on the right must be positive, so no solution exists")
    return "\n".join(lines) + "\n"


def format_dual_witness(w: Sequence[Fraction]) -> str:
    """Set function in imset text syntax (rational coefficients allowed)."""
    n = len(w).bit_length() - 1
    order = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), subset_digits(m)))
    return "".join(f"{w[T]} {subset_digits(T) or '0'}\n" for T in order if w[T])


def count_submodular(n: int, masks=None, form: Literal["primal", "dual"] = "primal") -> int:
    """Number of submodular semigraphoids on ``[n]`` (``n <= 4``)."""
    from .semigraphoid import semigraphoid_masks

    masks = semigraphoid_masks(n) if masks is None else masks
    return sum(1 for m in masks if is_submodular(StatementSet(n, int(m)), form).submodular)
