"""One-shot reproduction of the published claims as a list of named checks."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Optional

import numpy as np

from . import ci, fixtures, geometry, imsets, markov, rational, semigraphoid, submodular
from .ci import AxiomEquation, build_matrix, gamma, generate_axioms, parse_equation
from .semigraphoid import ClassificationRow, StatementSet


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name}: expected {self.expected}, got {self.actual}"


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, expected, actual, passed: bool | None = None, seconds: float = 0.0) -> Check:
        c = Check(name, expected, actual, expected == actual if passed is None else bool(passed), seconds)
        self.checks.append(c)
        return c

    def run(self, name: str, expected, fn: Callable[[], object]) -> Check:
        """Evaluate ``fn`` and compare with ``expected``; exceptions count as failures."""
        t = time.perf_counter()
        try:
            actual = fn()
        except Exception as exc:  # reported, not raised
            actual = f"error: {type(exc).__name__}: {exc}"
        return self.add(name, expected, actual, seconds=time.perf_counter() - t)

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        f = self.first_failure
        lines.append("OVERALL PASS" if f is None else f"OVERALL FAIL (first failed check: {f.name})")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "first_failure": None if self.first_failure is None else self.first_failure.name,
            "checks": [
                {"name": c.name, "expected": _jsonable(c.expected), "actual": _jsonable(c.actual), "pass": c.passed}
                for c in self.checks
            ],
        }


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


# ------------------------------------------------------------------ helpers


def fixture_equations(text: str, n: int) -> list[tuple[AxiomEquation, tuple[str, str, str, str], bool]]:
    out = []
    for toks, _, arrow in fixtures.parse_marked_equations(text):
        eq = parse_equation(f"{toks[0]} + {toks[1]} = {toks[2]} + {toks[3]}", n)
        out.append((eq, toks, arrow))
    return out


def equation_type(eq: AxiomEquation, S: StatementSet) -> str:
    """Shape after zeroing ``S``: ``I`` is x = y, ``II`` is x + y = z, ``III`` keeps all four."""
    off = sorted((sum(k not in S for k in eq.lhs), sum(k not in S for k in eq.rhs)))
    return {(0, 0): "trivial", (1, 1): "I", (1, 2): "II", (2, 2): "III"}.get(tuple(off), "invalid")


def gamma_set(fx: fixtures.FixtureSet) -> StatementSet:
    part = geometry.RankTestPartition.from_classes(5, [geometry.class_from_label(l) for l in fx.gamma_classes])
    return geometry.statements_of_partition(part)


def stabilizer(S: StatementSet) -> list[tuple[int, ...]]:
    return [s for s in permutations(range(1, S.n + 1)) if S.permuted(s) == S]


def arrow_certificate(fx: fixtures.FixtureSet) -> tuple[bool, list, bool]:
    """Solve the LP restricted to the marked equations for M.

    Returns (infeasible, certificate in the printed orientation, and whether the
    unit combination of the printed equations certifies the full system).
    """
    M = semigraphoid.parse_statement_set(fx.m4, 4)
    axioms = list(generate_axioms(4))
    rows, signs = [], []
    for eq, toks, arrow in fixture_equations(fx.axioms4, 4):
        if not arrow:
            continue
        r = axioms.index(eq)
        printed_lhs = tuple(sorted(ci.ordinal(ci.parse_statement(t), 4) for t in toks[:2]))
        rows.append(r)
        signs.append(1 if printed_lhs == eq.lhs else -1)
    p, _ = submodular.primal_problem(M, rows)
    res = rational.solve_feasibility(p)
    oriented = None if res.feasible else [int(y) * s for y, s in zip(res.certificate, signs)]
    full = [0] * len(axioms)
    for r, s in zip(rows, signs):
        full[r] = s
    pf, _ = submodular.primal_problem(M)
    return (not res.feasible), oriented, rational.check_certificate(pf, full)


# ------------------------------------------------------------------ sweep


@dataclass
class SweepResult:
    semigraphoids: int
    submodular: int
    table: list[ClassificationRow]
    disagreements: int  # primal/dual mismatches
    checked_dual: bool

    @property
    def non_submodular(self) -> int:
        return self.semigraphoids - self.submodular


def _sweep_chunk(args) -> tuple[int, list[tuple[int, tuple[int, ...], bool]], int]:
    n, masks, dual = args
    sub = 0
    bad: list[tuple[int, tuple[int, ...], bool]] = []
    mismatch = 0
    for m in masks:
        S = StatementSet(n, int(m))
        ok = submodular.is_submodular_primal(S).submodular
        if dual and submodular.is_submodular_dual(S).submodular != ok:
            mismatch += 1
        if ok:
            sub += 1
        else:
            bad.append((len(S), semigraphoid.type_signature(S), geometry.is_simplicial(S, oracle=True)))
    return sub, bad, mismatch


def sweep(n: int = 4, workers: int | None = None, dual: bool = True, progress: Callable[[int, int], None] | None = None) -> SweepResult:
    """Every semigraphoid: submodularity (both forms when ``dual``) and the table."""
    masks = semigraphoid.semigraphoid_masks(n, workers)
    workers = workers or semigraphoid._threads()
    chunks = [(n, masks[i:i + 512], dual) for i in range(0, len(masks), 512)]
    results = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for k, r in enumerate(pool.map(_sweep_chunk, chunks)):
                results.append(r)
                if progress:
                    progress(k + 1, len(chunks))
    else:
        for k, c in enumerate(chunks):
            results.append(_sweep_chunk(c))
            if progress:
                progress(k + 1, len(chunks))
    groups: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    sub = mismatch = 0
    for s, bad, mm in results:
        sub += s
        mismatch += mm
        for size, t, simp in bad:
            g = groups.setdefault((size, t), [0, 0])
            g[1 if simp else 0] += 1
    table = [ClassificationRow(sz, t, a, b) for (sz, t), (a, b) in sorted(groups.items())]
    return SweepResult(len(masks), sub, table, mismatch, dual)


def compare_table(computed: list[ClassificationRow], printed) -> list[tuple[str, object, object]]:
    """Per-row differences as (row key, printed, computed)."""
    comp = {(r.size, r.type_triple): (r.non_simplicial, r.simplicial, r.total) for r in computed}
    pr = {(s, t): (a, b, c) for s, t, a, b, c in printed}
    diffs = []
    for key in sorted(set(comp) | set(pr)):
        if comp.get(key) != pr.get(key):
            diffs.append((f"{key[0]} {key[1]}", pr.get(key), comp.get(key)))
    return diffs


# ------------------------------------------------------------------ suite


def verify_paper(full: bool = False, fx: fixtures.FixtureSet | None = None, workers: int | None = None) -> Report:
    fx = fixtures.DEFAULT if fx is None else fx
    rep = Report()
    rep.add("fixture checksum", fixtures.EXPECTED_SHA256, fx.checksum)

    # counts and ranks
    rep.run("gamma(3), gamma(4), gamma(5)", (6, 24, 80), lambda: (gamma(3), gamma(4), gamma(5)))
    rep.run("axiom counts n=3,4,5", (3, 24, 120), lambda: tuple(len(generate_axioms(n)) for n in (3, 4, 5)))
    rep.run(
        "n=5 axioms equal the transcribed list",
        True,
        lambda: sorted(e for e, _, _ in fixture_equations(fx.axioms5, 5)) == sorted(generate_axioms(5)),
    )
    rep.run(
        "n=4 axioms equal the transcribed list",
        True,
        lambda: sorted(e for e, _, _ in fixture_equations(fx.axioms4, 4)) == sorted(generate_axioms(4)),
    )
    rep.run("rank A (n=3,4,5)", (4, 11, 26), lambda: tuple(rational.rank(build_matrix(n).tolist()) for n in (3, 4, 5)))
    rep.run("axiom cone dimension n=4", 11, lambda: rational.cone_dimension(ci.axiom_matrix(4).tolist()))

    # the n=4 counterexample
    M = semigraphoid.parse_statement_set(fx.m4, 4)
    rep.run("M is a semigraphoid", True, lambda: semigraphoid.is_semigraphoid(M))
    rep.run("M submodular (primal, dual)", (False, False),
            lambda: (submodular.is_submodular_primal(M).submodular, submodular.is_submodular_dual(M).submodular))
    rep.run("marked equations: LP infeasible, certificate = unit sum, valid for full system",
            (True, [1, 1, 1, 1], True), lambda: arrow_certificate(fx))
    rep.run("rank test of M: 8 singletons + 8 pairs", [1] * 8 + [2] * 8, lambda: geometry.rank_test(M).sizes())
    rep.run("rank test of M equals the listed class labels", True,
            lambda: geometry.rank_test(M).as_set() == {geometry.class_from_label(l) for l in fx.m4_classes})
    rep.run("M simplicial", True, lambda: geometry.is_simplicial(M, oracle=True))

    # Gamma
    try:
        G = gamma_set(fx)
        rep.add("Gamma classes partition the permutations", True, True)
    except ValueError as exc:
        rep.add("Gamma classes partition the permutations", True, f"error: {exc}")
        G = StatementSet.of(5, fixtures.gamma_statement_texts(fx))
    rep.run("Gamma statements", 44, lambda: len(G))
    rep.run("Gamma equals the starred statements", True,
            lambda: G == StatementSet.of(5, fixtures.gamma_statement_texts(fx)))
    rep.run("class 15|234 statements", sorted(fx.gamma_15_234), lambda: sorted(
        str(s) for s in geometry.statements_of_partition(
            _single_class_partition(geometry.class_from_label("15|234"), 5))))
    rep.run("class 45|1|23 statements", sorted(fx.gamma_45_1_23), lambda: sorted(
        str(s) for s in geometry.statements_of_partition(
            _single_class_partition(geometry.class_from_label("45|1|23"), 5))))
    rep.run("Gamma class sizes", [4] * 6 + [12] * 8, lambda: geometry.rank_test(G).sizes())
    rep.run("Gamma is a semigraphoid", True, lambda: semigraphoid.is_semigraphoid(G))
    rep.run("Gamma coarsest (36 extensions close to full)", (36, True),
            lambda: (len(G.complement()), semigraphoid.is_coarsest(G)))
    rep.run("Gamma submodular (primal, dual)", (False, False),
            lambda: (submodular.is_submodular_primal(G).submodular, submodular.is_submodular_dual(G).submodular))
    rep.run("Gamma equation types (I, II, III, trivial)", (78, 12, 6, 24), lambda: _type_counts(G))
    rep.run("Gamma certificate uses only type I and II equations", True, lambda: _gamma_certificate_types(G) <= {"I", "II"})
    rep.run("Gamma stabilizer order", 12, lambda: len(stabilizer(G)))

    # polytope
    def poly():
        h = geometry.parse_polytope(fx.polytope, [fx.polytope_lineality])
        lat = geometry.face_lattice(h)
        return lat

    lat_box: dict = {}

    def f_vec():
        lat_box["lat"] = poly()
        return (len(lat_box["lat"].vertices), lat_box["lat"].f_vector)

    rep.run("polytope vertices and f-vector", (14, tuple(fx.polytope_f_vector)), f_vec)
    rep.run("facet statistics by label (vertices, edges)", _expected_facets(), lambda: _facet_groups(lat_box["lat"], fx))

    # non-normality
    b = ci.parse_imset(fx.b5, 5)
    alpha = ci.combination_vector(fx.alpha.split(), 5)
    beta = ci.combination_vector(fx.beta.split(), 5)
    w2b = ci.combination_vector(fx.witness2b.split(), 5)
    rep.run("image of the signed preimage equals b", True, lambda: bool(np.array_equal(imsets.image(_signed_preimage(fx), 5), b)))
    rep.run("level counts of b", (0, 4, 4, 0), lambda: ci.level_counts(b))
    rep.run("b structural", True, lambda: imsets.is_structural(b))
    rep.run("b combinatorial", False, lambda: imsets.is_combinatorial(b) is not None)
    rep.run("2b combinatorial", True, lambda: imsets.is_combinatorial(2 * b) is not None)
    rep.run("transcribed 16-term sum maps to 2b", True, lambda: bool(np.array_equal(imsets.image(w2b, 5), 2 * b)))
    rep.run("alpha + beta equals the 16-term sum", True, lambda: bool(np.array_equal(alpha + beta, w2b)))
    rep.run("cone {A z = b u}: dimension, generator = (alpha+beta, 2)",
            (1, [int(v) for v in alpha + beta] + [2]),
            lambda: (rational.cone_dimension(imsets.cone_with_target(b)),
                     rational.single_ray_generator(imsets.cone_with_target(b))))

    # Markov
    g = markov.parse_move(fx.g_move, 5)
    rep.run("g in ker A", True, lambda: markov.in_kernel(g))
    rep.run("fiber of g+ is {g+, g-}, degrees", (2, True, 10, 10), lambda: _g_fiber(g))
    cubics = [markov.parse_move(c, 4) for c in fx.cubics4]
    rep.run("cubics in ker A and indispensable", [True] * 4,
            lambda: [markov.in_kernel(c) and markov.is_indispensable(c) for c in cubics])
    q = markov.parse_move(fx.quartic4, 4)
    rep.run("quartic orbit size", 24, lambda: len(markov.orbit(q)))
    rep.run("quartic orbit in ker A and indispensable", True,
            lambda: all(markov.in_kernel(m) and markov.is_indispensable(m) for m in markov.orbit(q)))
    rep.run("n=3 quadrics connect every fiber of degree <= 4", True, lambda: markov.connectivity_check(
        markov.axiom_moves(3), [t for d in range(5) for t in markov.degree_targets(3, d)]).connected)
    rep.run("n=4 quadrics leave the first cubic's fiber disconnected", False, lambda: markov.connectivity_check(
        markov.axiom_moves(4), [build_matrix(4) @ cubics[0].plus]).connected)
    rep.run("monomial primes contain all axiom binomials (codim 12, 15, 16)", (True, True, True),
            lambda: tuple(markov.prime_contains_axioms(markov.parse_prime(fx.primes4[c], 4), 4) for c in (12, 15, 16)))
    rep.run("every relabeling of the listed primes contains the axiom binomials", True,
            lambda: all(markov.prime_contains_axioms(q, 4) for c in (12, 15, 16)
                        for q in markov.prime_orbit(markov.parse_prime(fx.primes4[c], 4), 4)))

    if full:
        box: dict = {}

        def run_sweep():
            box["r"] = sweep(4, workers)
            r = box["r"]
            return (r.semigraphoids, r.submodular, r.non_submodular)

        counts = fx.counts4
        rep.run("n=4 semigraphoids, submodular, non-submodular",
                (counts["semigraphoids"], counts["submodular"], counts["non_submodular"]), run_sweep)
        if "r" in box:
            r = box["r"]
            rep.add("primal/dual agreement on every n=4 semigraphoid (mismatches)", 0, r.disagreements)
            rep.add("01-points of I_SG and I_A", (counts["semigraphoids"], counts["submodular"]),
                    (r.semigraphoids, r.submodular))
            printed = fixtures.parse_table(fx.table4)
            rep.add("table total column sums to the non-submodular count", counts["non_submodular"],
                    sum(row[4] for row in printed))
            rep.add("classification table rows differing from the printed table", [],
                    compare_table(r.table, printed))
    return rep


def _single_class_partition(c, n):
    rest = [frozenset([p]) for p in geometry.all_permutations(n) if p not in c]
    return geometry.RankTestPartition.from_classes(n, [c, *rest])


def _type_counts(G: StatementSet) -> tuple[int, int, int, int]:
    from collections import Counter

    cnt = Counter(equation_type(eq, G) for eq in generate_axioms(G.n))
    return cnt["I"], cnt["II"], cnt["III"], cnt["trivial"]


def _gamma_certificate_types(G: StatementSet) -> set[str]:
    axioms = generate_axioms(G.n)
    late = [r for r, eq in enumerate(axioms) if equation_type(eq, G) not in ("I", "II")]
    cert = submodular.find_certificate(G, prefer_last=late)
    return {equation_type(AxiomEquation.canonical(*l, *r), G) for _, l, r in cert.terms}


def _signed_preimage(fx: fixtures.FixtureSet) -> np.ndarray:
    x = np.zeros(gamma(5), dtype=np.int64)
    for line in fx.signed_preimage.splitlines():
        c, s = line.split()
        x[ci.ordinal(ci.parse_statement(s), 5)] += int(c)
    return x


def _g_fiber(g: markov.MarkovMove):
    F = imsets.enumerate_fiber(build_matrix(5) @ g.plus)
    both = {tuple(int(v) for v in g.plus), tuple(int(v) for v in g.minus)}
    return len(F), F.elements == both, int(g.plus.sum()), int(g.minus.sum())


def _expected_facets() -> dict[str, tuple[int, int]]:
    out = {}
    for e in (1, 5):
        out[f"{e} last"] = (4, 6)
        out[f"{e} first"] = (7, 12)
    for e in (2, 3, 4):
        out[f"{e} last"] = (7, 11)
        out[f"{e} first"] = (7, 13)
    return dict(sorted(out.items()))


def _facet_groups(lat, fx) -> dict[str, tuple[int, int]] | None:
    classes = [geometry.class_from_label(l) for l in fx.gamma_classes]
    stats = geometry.labelled_facet_stats(lat, classes, 5)
    return None if stats is None else dict(sorted((k, v[:2]) for k, v in stats.items()))
