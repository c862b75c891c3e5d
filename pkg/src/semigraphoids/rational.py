"""Exact rational linear algebra and phase-one simplex feasibility.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
The simplex works on an all-integer tableau (integer pivoting: every entry is
a minor of the constraint matrix divided by the current basis determinant),
which avoids ``Fraction`` normalisation in the inner loop.  Bland's rule
guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Literal, Optional, Sequence

Number = int | Fraction
Matrix = list[list[Fraction]]
Vector = list[Fraction]


class CertificateError(RuntimeError):
    """An LP answer failed its exact re-verification."""


def num(x: Number) -> Number:
    """Canonical exact value: ``int`` when integral, else ``Fraction``."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def as_matrix(M: Iterable[Iterable[Number]]) -> Matrix:
    return [[num(x) for x in row] for row in M]


def shape(M: Sequence[Sequence[Number]]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for r in M:
        if len(r) != cols:
            raise ValueError("matrix is not rectangular")
    return rows, cols


def transpose(M: Sequence[Sequence[Number]]) -> Matrix:
    return [list(map(Fraction, col)) for col in zip(*M)]


def matvec(M: Sequence[Sequence[Number]], x: Sequence[Number]) -> Vector:
    return [num(sum(a * b for a, b in zip(row, x) if a and b)) for row in M]


def vecmat(y: Sequence[Number], M: Sequence[Sequence[Number]]) -> Vector:
    rows, cols = shape(M)
    out: list[Number] = [0] * cols
    for yi, row in zip(y, M):
        if yi:
            for j, a in enumerate(row):
                if a:
                    out[j] += yi * a
    return [num(v) for v in out]


def _integer_row(row: Sequence[Number]) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns the row and the positive multiplier."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row], 1
    return [int(x * den) for x in row], den


def rank(M: Sequence[Sequence[Number]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows, cols = shape(M)
    T = [_integer_row(r)[0] for r in M]
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if T[i][c]), None)
        if piv is None:
            continue
        T[r], T[piv] = T[piv], T[r]
        p = T[r][c]
        for i in range(r + 1, rows):
            a = T[i][c]
            T[i] = [(p * x - a * y) // prev for x, y in zip(T[i], T[r])]
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rref(M: Sequence[Sequence[Number]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    R = as_matrix(M)
    rows, cols = shape(R)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        p = Fraction(R[r][c])
        R[r] = [num(x / p) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                a = R[i][c]
                R[i] = [num(x - a * y) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R[:r], pivots


def kernel_basis(M: Sequence[Sequence[Number]]) -> list[Vector]:
    """Basis of ``{v : M v = 0}``, one vector per free column of the RREF."""
    rows, cols = shape(M)
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def primitive(v: Sequence[Number]) -> list[int]:
    """Smallest integer vector on the ray through ``v``."""
    ints, _ = _integer_row(v)
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


@dataclass
class FeasibilityProblem:
    """``E x = f`` with ``x_j >= lower[j]`` (``None`` marks a free variable)."""

    E: Matrix
    f: Vector
    lower: list[Optional[Fraction]]

    def __post_init__(self) -> None:
        self.E = as_matrix(self.E)
        self.f = [num(x) for x in self.f]
        self.lower = [None if l is None else num(l) for l in self.lower]
        rows = len(self.E)
        cols = len(self.lower)
        if len(self.f) != rows:
            raise ValueError(f"rhs has length {len(self.f)}, expected {rows}")
        for row in self.E:
            if len(row) != cols:
                raise ValueError(f"row of length {len(row)}, expected {cols} variables")

    @property
    def num_vars(self) -> int:
        return len(self.lower)


@dataclass
class FeasibilityResult:
    status: Literal["feasible", "infeasible"]
    witness: Optional[Vector] = None
    certificate: Optional[Vector] = None
    pivots: int = field(default=0, compare=False)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"

    def __bool__(self) -> bool:
        return self.feasible


def check_witness(p: FeasibilityProblem, x: Sequence[Fraction]) -> bool:
    if len(x) != p.num_vars:
        return False
    if any(l is not None and xi < l for xi, l in zip(x, p.lower)):
        return False
    return matvec(p.E, x) == p.f


def check_certificate(p: FeasibilityProblem, y: Sequence[Fraction]) -> bool:
    """``y`` proves emptiness: ``y^T E`` is <= 0 on bounded and 0 on free variables,
    while ``y^T f`` exceeds the largest value ``y^T E x`` can take."""
    if len(y) != len(p.E):
        return False
    g = vecmat(y, p.E)
    bound: Number = 0
    for gj, l in zip(g, p.lower):
        if l is None:
            if gj:
                return False
        else:
            if gj > 0:
                return False
            bound += gj * l
    rhs = sum(yi * fi for yi, fi in zip(y, p.f) if yi and fi)
    return rhs > bound


def solve_feasibility(p: FeasibilityProblem) -> FeasibilityResult:
    """Decide ``{x : E x = f, x >= lower}`` exactly; re-verifies before returning."""
    m = len(p.E)
    # column j of the standard form is (original var, sign)
    cols: list[tuple[int, int]] = []
    for j, l in enumerate(p.lower):
        cols.append((j, 1))
        if l is None:
            cols.append((j, -1))
    shift = [l if l is not None else 0 for l in p.lower]
    f2 = [num(fi - sum(a * sh for a, sh in zip(row, shift) if a and sh)) for row, fi in zip(p.E, p.f)]

    N = len(cols)
    T: list[list[int]] = []
    row_mult: list[Fraction] = []
    for row, fi in zip(p.E, f2):
        ext = [row[j] if s > 0 else -row[j] for j, s in cols] + [fi]
        ints, den = _integer_row(ext)
        sign = -1 if ints[-1] < 0 else 1
        if sign < 0:
            ints = [-x for x in ints]
        row_mult.append(sign * den)
        # artificials sit between the structural columns and the rhs
        T.append(ints[:N] + [0] * m + [ints[N]])
    for i in range(m):
        T[i][N + i] = 1
    width = N + m + 1
    obj = [0] * width
    for row in T:
        for j in range(N):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    basis = [N + i for i in range(m)]
    D = 1
    pivots = 0

    while True:
        q = next((j for j in range(N + m) if obj[j] < 0), None)
        if q is None:
            break
        r = -1
        for i in range(m):
            a = T[i][q]
            if a > 0:
                if r < 0:
                    r = i
                    continue
                lhs = T[i][-1] * T[r][q]
                rhs = T[r][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r < 0:
            # phase one is bounded below by zero; an unbounded ray cannot occur
            raise CertificateError("phase-one objective unbounded")
        prow = T[r]
        pv = prow[q]
        for i in range(m):
            if i == r:
                continue
            Ti = T[i]
            a = Ti[q]
            if a:
                T[i] = [(pv * x - a * y) // D for x, y in zip(Ti, prow)]
            else:
                T[i] = [(pv * x) // D for x in Ti]
        a = obj[q]
        obj = [(pv * x - a * y) // D for x, y in zip(obj, prow)]
        D = pv
        basis[r] = q
        pivots += 1

    if obj[-1] == 0:
        y: list[Number] = [0] * N
        for i, bj in enumerate(basis):
            if bj < N and T[i][-1]:
                y[bj] = num(Fraction(T[i][-1], D))
        x = list(shift)
        for (j, s), yj in zip(cols, y):
            if yj:
                x[j] = num(x[j] + s * yj)
        if not check_witness(p, x):
            raise CertificateError("simplex witness failed exact re-check")
        return FeasibilityResult("feasible", witness=x, pivots=pivots)

    # phase-one duals: reduced cost of artificial i equals 1 - pi_i
    pi = [1 - Fraction(obj[N + i], D) for i in range(m)]
    y = [pi_i * mult for pi_i, mult in zip(pi, row_mult)]
    cert = primitive(y) if any(y) else y
    if not check_certificate(p, cert):
        raise CertificateError("Farkas certificate failed exact re-check")
    return FeasibilityResult("infeasible", certificate=cert, pivots=pivots)


def positive_support(E: Sequence[Sequence[Number]]) -> set[int]:
    """Coordinates that can be positive somewhere on ``{x >= 0 : E x = 0}``."""
    E = as_matrix(E)
    rows, cols = len(E), (len(E[0]) if E else 0)
    zero = [0] * rows
    support: set[int] = set()
    for k in range(cols):
        if k in support:
            continue
        lower = [0] * cols
        lower[k] = 1
        res = solve_feasibility(FeasibilityProblem(E, zero, lower))
        if res.feasible:
            support.update(j for j, v in enumerate(res.witness) if v > 0)
    return support


def cone_dimension(E: Sequence[Sequence[Number]], ncols: int | None = None) -> int:
    """Dimension of the cone ``{x >= 0 : E x = 0}``."""
    E = as_matrix(E)
    cols = len(E[0]) if E else (ncols or 0)
    P = sorted(positive_support(E)) if E else list(range(cols))
    if not P:
        return 0
    sub = [[row[j] for j in P] for row in E]
    return len(P) - (rank(sub) if sub else 0)


def single_ray_generator(E: Sequence[Sequence[Number]]) -> Optional[list[int]]:
    """Primitive integer generator of ``{x >= 0 : E x = 0}`` if it is a single ray."""
    E = as_matrix(E)
    cols = len(E[0]) if E else 0
    P = sorted(positive_support(E))
    if not P:
        return None
    sub = [[row[j] for j in P] for row in E]
    ker = kernel_basis(sub)
    if len(ker) != 1:
        return None
    v = ker[0]
    if v[0] < 0:
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        raise CertificateError("relative-interior ray has a non-positive entry")
    full = [Fraction(0)] * cols
    for j, x in zip(P, v):
        full[j] = x
    return primitive(full)


def format_matrix(M: Sequence[Sequence[Number]]) -> str:
    rows, cols = shape(M)
    lines = [f"{rows} {cols}"]
    for row in M:
        lines.append(" ".join(f"{Fraction(x).numerator}/{Fraction(x).denominator}" for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    """``rows cols`` header followed by ``num/den`` tokens in row-major order."""
    located = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col) + 1
            located.append((lineno, col, tok))
            col += len(tok) - 1
    if len(located) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    try:
        rows, cols = int(located[0][2]), int(located[1][2])
    except ValueError:
        raise ValueError("line 1, column 1: header must be two integers 'rows cols'") from None
    body = located[2:]
    if len(body) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(body)}")
    vals = []
    for lineno, col, tok in body:
        try:
            vals.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}, column {col}: bad rational {tok!r}") from None
    return [vals[r * cols:(r + 1) * cols] for r in range(rows)]
