"""Rank tests: the partition of ``S_n`` cut out by a semigraphoid, class posets,
simpliciality, and vertex/face computations for polytopes given by facets.

Convention: the permutation ``sigma`` names the region
``x[sigma(1)] <= ... <= x[sigma(n)]``; swapping positions ``k, k+1`` crosses
the wall ``[sigma(k) . sigma(k+1) | sigma(1..k-1)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from .ci import CIStatement, check_n, mask_of, statement_index
from .rational import FeasibilityProblem, kernel_basis, rank, solve_feasibility
from .semigraphoid import StatementSet, is_semigraphoid

Perm = tuple[int, ...]


def parse_permutation(text: str) -> Perm:
    digits = tuple(int(c) for c in text.strip())
    if sorted(digits) != list(range(1, len(digits) + 1)):
        raise ValueError(f"{text!r} is not a permutation word")
    return digits


def perm_text(p: Perm) -> str:
    return "".join(map(str, p))


def edge_statement(sigma: Sequence[int], k: int) -> CIStatement:
    """Wall between ``sigma`` and its swap at positions ``k, k+1`` (1-based)."""
    n = len(sigma)
    if not 1 <= k <= n - 1:
        raise ValueError(f"position {k} outside 1..{n - 1}")
    return CIStatement.make(sigma[k - 1], sigma[k], mask_of(sigma[: k - 1]))


def _swap(sigma: Perm, k: int) -> Perm:
    s = list(sigma)
    s[k - 1], s[k] = s[k], s[k - 1]
    return tuple(s)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(1, check_n(n) + 1)))


@lru_cache(maxsize=None)
def _edges(n: int) -> tuple[tuple[int, int, int], ...]:
    """``(index sigma, index tau, statement ordinal)`` for every adjacent pair."""
    perms = all_permutations(n)
    pos = {p: a for a, p in enumerate(perms)}
    idx = statement_index(n)
    out = []
    for a, p in enumerate(perms):
        for k in range(1, n):
            q = _swap(p, k)
            if a < pos[q]:
                out.append((a, pos[q], idx[edge_statement(p, k)]))
    return tuple(out)


@dataclass(frozen=True)
class RankTestPartition:
    n: int
    classes: tuple[frozenset[Perm], ...]

    def __post_init__(self) -> None:
        seen: set[Perm] = set()
        for c in self.classes:
            if seen & c:
                raise ValueError("classes overlap")
            seen |= c
        if seen != set(all_permutations(self.n)):
            raise ValueError(f"classes do not cover S_{self.n}")

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[Perm]]) -> "RankTestPartition":
        cs = [frozenset(c) for c in classes]
        return cls(n, tuple(sorted(cs, key=lambda c: (len(c), sorted(c)))))

    def sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes)

    def as_set(self) -> set[frozenset[Perm]]:
        return set(self.classes)

    def to_text(self) -> str:
        return "".join(" ".join(perm_text(p) for p in sorted(c)) + "\n" for c in self.classes)


def class_from_label(label: str) -> frozenset[Perm]:
    """``45|1|23``: all permutations listing the blocks in order, any order within."""
    blocks = [tuple(int(c) for c in b) for b in label.strip().split("|")]
    out = set()
    for parts in product(*(permutations(b) for b in blocks)):
        out.add(tuple(e for part in parts for e in part))
    return frozenset(out)


def parse_partition(text: str, n: int | None = None) -> RankTestPartition:
    """One class per line: permutation words separated by spaces, or a block label."""
    classes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if "|" in line:
                classes.append(class_from_label(line))
            else:
                classes.append(frozenset(parse_permutation(w) for w in line.split()))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not classes:
        raise ValueError("empty partition")
    size = len(next(iter(classes[0])))
    if n is not None and n != size:
        raise ValueError(f"permutations have length {size}, expected {n}")
    return RankTestPartition.from_classes(size, classes)


def rank_test(S: StatementSet) -> RankTestPartition:
    """Classes of ``S_n`` joined across every wall whose statement lies in ``S``."""
    if not is_semigraphoid(S):
        raise ValueError("rank_test expects a semigraphoid")
    perms = all_permutations(S.n)
    parent = list(range(len(perms)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, k in _edges(S.n):
        if S.bits >> k & 1:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, set[Perm]] = {}
    for a, p in enumerate(perms):
        groups.setdefault(find(a), set()).add(p)
    return RankTestPartition.from_classes(S.n, groups.values())


def statements_of_partition(p: RankTestPartition) -> StatementSet:
    """Statements of all walls between two permutations of the same class."""
    where = {}
    for c, cls in enumerate(p.classes):
        for s in cls:
            where[s] = c
    perms = all_permutations(p.n)
    bits = 0
    for a, b, k in _edges(p.n):
        if where[perms[a]] == where[perms[b]]:
            bits |= 1 << k
    return StatementSet(p.n, bits)


@dataclass(frozen=True)
class ClassPoset:
    n: int
    relations: frozenset[tuple[int, int]]  # transitively closed strict order
    covers: frozenset[tuple[int, int]]
    pre_convex: bool


def linear_extensions(n: int, relations: Iterable[tuple[int, int]]) -> set[Perm]:
    rel = list(relations)
    out = set()
    for p in all_permutations(n):
        pos = {e: i for i, e in enumerate(p)}
        if all(pos[a] < pos[b] for a, b in rel):
            out.add(p)
    return out


def class_poset(c: Iterable[Perm]) -> ClassPoset:
    """Order common to every permutation of the class, and whether it cuts out the class."""
    c = frozenset(c)
    if not c:
        raise ValueError("empty class")
    n = len(next(iter(c)))
    positions = [{e: i for i, e in enumerate(p)} for p in c]
    rel = frozenset(
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if a != b and all(pos[a] < pos[b] for pos in positions)
    )
    covers = frozenset(
        (a, b) for a, b in rel if not any((a, m) in rel and (m, b) in rel for m in range(1, n + 1))
    )
    return ClassPoset(n, rel, covers, linear_extensions(n, rel) == set(c))


def hasse_is_tree(P: ClassPoset) -> bool:
    """Connected Hasse diagram with exactly ``n - 1`` cover relations."""
    if len(P.covers) != P.n - 1:
        return False
    parent = list(range(P.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    for a, b in P.covers:
        parent[find(a)] = find(b)
    return len({find(e) for e in range(1, P.n + 1)}) == 1


def order_cone_rays(n: int, covers: Iterable[tuple[int, int]]) -> Optional[list[tuple[Fraction, ...]]]:
    """Extreme rays of ``{x : x_a <= x_b}`` modulo the all-ones line, by brute force.

    Returns ``None`` when the cone has lineality beyond the all-ones line.
    """
    covers = sorted(covers)
    ineq = []
    for a, b in covers:
        row = [0] * n
        row[b - 1], row[a - 1] = 1, -1
        ineq.append(row)
    ones = [1] * n
    if rank(ineq + [ones]) < n:
        return None
    d = n - 1
    rays: set[tuple[Fraction, ...]] = set()
    for tight in combinations(range(len(ineq)), d - 1):
        M = [ineq[t] for t in tight] + [ones]
        ker = kernel_basis(M)
        if len(ker) != 1:
            continue
        r = ker[0]
        for sign in (1, -1):
            v = [sign * x for x in r]
            if all(sum(a * x for a, x in zip(row, v)) >= 0 for row in ineq):
                m = max(abs(x) for x in v)
                rays.add(tuple(Fraction(x) / m for x in v))
    return sorted(rays)


def class_is_simplicial(P: ClassPoset) -> bool:
    return hasse_is_tree(P)


def is_simplicial(S: StatementSet, oracle: bool = False) -> bool:
    """Every class cone of the rank test of ``S`` is simplicial.

    With ``oracle=True`` the cover-count criterion is cross-checked against a
    brute-force extreme-ray count for every class.
    """
    result = True
    for c in rank_test(S).classes:
        P = class_poset(c)
        if not P.pre_convex:
            raise ValueError("class is not the set of linear extensions of a poset")
        simp = class_is_simplicial(P)
        if oracle:
            rays = order_cone_rays(P.n, P.covers)
            if simp != (rays is not None and len(rays) == P.n - 1):
                raise RuntimeError(f"simpliciality criteria disagree on class {sorted(c)}")
        if not simp:
            result = False
            if not oracle:
                break
    return result


# ----------------------------------------------------------------- polytopes


@dataclass(frozen=True)
class HPolytope:
    """Rows ``(c0, c)`` meaning ``c . x <= c0``, with ``x`` orthogonal to ``lineality``."""

    rows: tuple[tuple[Fraction, tuple[Fraction, ...]], ...]
    lineality: tuple[tuple[Fraction, ...], ...] = ()

    @property
    def ambient(self) -> int:
        return len(self.rows[0][1]) if self.rows else 0

    @property
    def dim(self) -> int:
        return self.ambient - len(self.lineality)


def parse_polytope(text: str, lineality: Sequence[Sequence[int]] = ()) -> HPolytope:
    """Rows of rationals ``c0 c1 ... cd``; an optional ``POINTS`` header is skipped."""
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.isalpha():
            continue
        try:
            vals = [Fraction(t) for t in line.split()]
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: bad rational entry") from None
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ValueError(f"line {lineno}: expected {width} entries")
        rows.append((vals[0], tuple(vals[1:])))
    if not rows:
        raise ValueError("no facet rows")
    lin = tuple(tuple(Fraction(x) for x in v) for v in lineality)
    return HPolytope(tuple(rows), lin)


class UnboundedPolytope(ValueError):
    pass


def _is_bounded(h: HPolytope) -> bool:
    C = [list(c) for _, c in h.rows]
    L = [list(v) for v in h.lineality]
    if rank(C + L) < h.ambient:
        return False
    # a recession direction y: C y <= 0 with some entry < 0, L y = 0
    m, d = len(C), h.ambient
    E = [C[r] + [1 if s == r else 0 for s in range(m)] for r in range(m)]
    E += [list(v) + [0] * m for v in L]
    E.append([0] * d + [1] * m)
    f = [0] * (m + len(L)) + [1]
    lower = [None] * d + [0] * m
    return not solve_feasibility(FeasibilityProblem(E, f, lower)).feasible


def vertices_from_facets(h: HPolytope) -> list[tuple[Fraction, ...]]:
    """Vertices by solving every square subsystem of facet rows."""
    if not _is_bounded(h):
        raise UnboundedPolytope("polytope is unbounded")
    L = [list(v) for v in h.lineality]
    verts = set()
    for sub in combinations(range(len(h.rows)), h.dim):
        M = [list(h.rows[r][1]) + [h.rows[r][0]] for r in sub] + [v + [0] for v in L]
        x = _solve_square([row[:-1] for row in M], [row[-1] for row in M])
        if x is None:
            continue
        if all(sum(a * b for a, b in zip(c, x)) <= c0 for c0, c in h.rows):
            verts.add(tuple(x))
    return sorted(verts)


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


@dataclass
class FaceLattice:
    dim: int
    vertices: list[tuple[Fraction, ...]]
    facets: list[frozenset[int]]  # vertex sets, in row order
    faces: dict[frozenset[int], int] = field(default_factory=dict)  # vertex set -> dimension

    @property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.dim
        for d in self.faces.values():
            if 0 <= d < self.dim:
                counts[d] += 1
        return tuple(counts)

    def facet_stats(self, k: int) -> tuple[int, int, int]:
        """Vertices, edges and 2-faces of facet ``k``."""
        F = self.facets[k]
        edges = sum(1 for f, d in self.faces.items() if d == 1 and f <= F)
        two = sum(1 for f, d in self.faces.items() if d == 2 and f <= F)
        return len(F), edges, two


def _affine_dim(points: list[tuple[Fraction, ...]]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def face_lattice(h: HPolytope, verts: Sequence[tuple[Fraction, ...]] | None = None) -> FaceLattice:
    """Faces as intersections of facet vertex sets, graded by affine dimension."""
    verts = list(vertices_from_facets(h) if verts is None else verts)
    facets = []
    for c0, c in h.rows:
        facets.append(frozenset(i for i, v in enumerate(verts) if sum(a * b for a, b in zip(c, v)) == c0))
    for k, F in enumerate(facets):
        if _affine_dim([verts[i] for i in F]) != h.dim - 1:
            raise ValueError(f"row {k + 1} does not define a facet")
    faces: dict[frozenset[int], int] = {}
    frontier = set(facets)
    known = set(frontier)
    while frontier:
        nxt = set()
        for F in frontier:
            for G in facets:
                I = F & G
                if I and I not in known:
                    known.add(I)
                    nxt.add(I)
        frontier = nxt
    for F in known:
        faces[F] = _affine_dim([verts[i] for i in F])
    for i in range(len(verts)):
        faces.setdefault(frozenset([i]), 0)
    return FaceLattice(h.dim, verts, facets, faces)


def incidence_isomorphism(
    a: Sequence[frozenset], b: Sequence[frozenset]
) -> Optional[tuple[dict, dict]]:
    """Bijections (elements, sets) carrying set system ``a`` onto ``b``, if any."""
    if len(a) != len(b):
        return None
    ea = sorted(set().union(*a), key=repr)
    eb = sorted(set().union(*b), key=repr)
    if len(ea) != len(eb):
        return None

    def sig(x, sets):
        return tuple(sorted(len(S) for S in sets if x in S))

    sa = {x: sig(x, a) for x in ea}
    sb = {y: sig(y, b) for y in eb}
    emap: dict = {}
    used: set = set()

    def consistent() -> Optional[dict]:
        fmap = {}
        taken = set()
        for i, S in enumerate(a):
            img = frozenset(emap[x] for x in S)
            j = next((j for j, T in enumerate(b) if T == img and j not in taken), None)
            if j is None:
                return None
            fmap[i] = j
            taken.add(j)
        return fmap

    def partial_ok() -> bool:
        # every set of a restricted to mapped elements must sit inside some set of b of equal size
        for S in a:
            img = {emap[x] for x in S if x in emap}
            if not any(img <= T and len(T) == len(S) for T in b):
                return False
        return True

    def go(k: int) -> Optional[dict]:
        if k == len(ea):
            return consistent()
        x = ea[k]
        for y in eb:
            if y in used or sa[x] != sb[y]:
                continue
            emap[x] = y
            used.add(y)
            if partial_ok():
                res = go(k + 1)
                if res is not None:
                    return res
            del emap[x]
            used.discard(y)
        return None

    fmap = go(0)
    return None if fmap is None else (dict(emap), fmap)


def position_facets(classes: Sequence[frozenset[Perm]], n: int) -> dict[str, frozenset[int]]:
    """Class indices per cube facet: ``'e first'`` / ``'e last'`` for each element."""
    out = {}
    for e in range(1, n + 1):
        out[f"{e} first"] = frozenset(k for k, c in enumerate(classes) if any(p[0] == e for p in c))
        out[f"{e} last"] = frozenset(k for k, c in enumerate(classes) if any(p[-1] == e for p in c))
    return out


def labelled_facet_stats(lat: FaceLattice, classes: Sequence[frozenset[Perm]], n: int) -> Optional[dict[str, tuple[int, int, int]]]:
    """Per-label facet statistics, matching polytope facets to cube facets via
    an isomorphism of vertex-facet incidences (``None`` if none exists)."""
    labels = position_facets(classes, n)
    names = list(labels)
    iso = incidence_isomorphism([labels[k] for k in names], lat.facets)
    if iso is None:
        return None
    _, fmap = iso
    return {names[i]: lat.facet_stats(j) for i, j in fmap.items()}
