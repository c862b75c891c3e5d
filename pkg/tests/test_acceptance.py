"""Acceptance criteria 1-8, one PASS/FAIL line each, all exact.

Criterion 3 runs the exhaustive n=4 sweep (about ten minutes on one core).
Set SEMIGRAPHOID_SKIP_FULL=1 to skip it.
"""

from __future__ import annotations

import os
import random

import numpy as np
import pytest

from semigraphoids import ci, fixtures, geometry, imsets, markov, rational, semigraphoid, submodular, verify
from semigraphoids.ci import build_matrix, gamma, generate_axioms
from semigraphoids.semigraphoid import StatementSet

from helpers import random_subset, sample_semigraphoids


class Criterion:
    def __init__(self, number: int, title: str) -> None:
        self.number, self.title = number, title
        self.rows: list[tuple[str, object, object, bool]] = []

    def check(self, name: str, expected, actual) -> None:
        self.rows.append((name, expected, actual, expected == actual))

    def finish(self, capsys) -> None:
        ok = all(r[3] for r in self.rows)
        with capsys.disabled():
            print(f"\nCRITERION {self.number} {'PASS' if ok else 'FAIL'}: {self.title}")
            for name, exp, act, passed in self.rows:
                if not passed:
                    print(f"    failed: {name}: expected {exp!r}, got {act!r}")
        assert ok, [r for r in self.rows if not r[3]]


def test_criterion_1_counts_and_ranks(capsys, fx):
    c = Criterion(1, "counts and ranks")
    c.check("gamma_3, gamma_4, gamma_5", (6, 24, 80), (gamma(3), gamma(4), gamma(5)))
    c.check("axiom counts n=4, n=5", (24, 120), (len(generate_axioms(4)), len(generate_axioms(5))))
    c.check("n=5 axioms equal the transcribed list", sorted(generate_axioms(5)),
            sorted(e for e, _, _ in verify.fixture_equations(fx.axioms5, 5)))
    c.check("rank A_5", 26, rational.rank(build_matrix(5).tolist()))
    c.check("rank A_4", 11, rational.rank(build_matrix(4).tolist()))
    c.check("axiom cone dimension n=4", 11, rational.cone_dimension(ci.axiom_matrix(4).tolist()))
    c.finish(capsys)


def test_criterion_2_counterexample_m(capsys, fx, M):
    c = Criterion(2, "the four-statement semigraphoid is not submodular")
    c.check("M is a semigraphoid", True, semigraphoid.is_semigraphoid(M))
    c.check("is_submodular(M)", False, submodular.is_submodular(M).submodular)
    c.check("marked-equation certificate (infeasible, unit weights, valid on all 24)",
            (True, [1, 1, 1, 1], True), verify.arrow_certificate(fx))
    P = geometry.rank_test(M)
    c.check("rank test sizes", [1] * 8 + [2] * 8, P.sizes())
    c.check("rank test equals the listed class labels", {geometry.class_from_label(l) for l in fx.m4_classes}, P.as_set())
    c.check("M simplicial", True, geometry.is_simplicial(M, oracle=True))
    c.finish(capsys)


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("SEMIGRAPHOID_SKIP_FULL") == "1", reason="SEMIGRAPHOID_SKIP_FULL=1")
def test_criterion_3_exhaustive_sweep(capsys, fx):
    c = Criterion(3, "exhaustive n=4 sweep and classification table")
    r = verify.sweep(4)
    c.check("semigraphoids", 26424, r.semigraphoids)
    c.check("submodular", 22108, r.submodular)
    c.check("non-submodular", 4316, r.non_submodular)
    c.check("primal/dual mismatches", 0, r.disagreements)
    printed = fixtures.parse_table(fx.table4)
    row = {(x.size, x.type_triple): (x.non_simplicial, x.simplicial) for x in r.table}
    c.check("|M|=6 type (2,0,4)", (30, 3), row.get((6, (2, 0, 4))))
    c.check("|M|=8 type (4,0,4) non-simplicial", 174, row.get((8, (4, 0, 4)), (None,))[0])
    c.check("rows differing from the printed table (row, printed, computed)", [], verify.compare_table(r.table, printed))
    c.finish(capsys)


def test_criterion_4_gamma(capsys, fx, G):
    c = Criterion(4, "the coarsest non-submodular semigraphoid on five elements")
    P = geometry.RankTestPartition.from_classes(5, [geometry.class_from_label(l) for l in fx.gamma_classes])
    built = geometry.statements_of_partition(P)
    c.check("statements from the 14 classes", 44, len(built))
    c.check("built set equals the transcribed set", G, built)
    names = {str(s) for s in built}
    c.check("class 15|234 statements present", True, set(fx.gamma_15_234) <= names)
    c.check("class 45|1|23 statements present", True, set(fx.gamma_45_1_23) <= names)
    c.check("is_semigraphoid", True, semigraphoid.is_semigraphoid(built))
    c.check("single-statement extensions", 36, len(built.complement()))
    c.check("every extension closes to the full set", True,
            all(semigraphoid.closure(built.add(k)).is_full() for k in built.complement().ordinals()))
    c.check("is_coarsest", True, semigraphoid.is_coarsest(built))
    c.check("is_submodular", False, submodular.is_submodular(built).submodular)
    c.finish(capsys)


def test_criterion_5_polytope(capsys, fx):
    c = Criterion(5, "the 4-polytope from the ten facet rows")
    h = geometry.parse_polytope(fx.polytope, [fx.polytope_lineality])
    lat = geometry.face_lattice(h)
    c.check("vertices", 14, len(lat.vertices))
    c.check("f-vector", (14, 36, 32, 10), lat.f_vector)
    groups = verify._facet_groups(lat, fx)
    expected = {}
    for e in (1, 5):
        expected[f"{e} last"], expected[f"{e} first"] = (4, 6), (7, 12)
    for e in (2, 3, 4):
        expected[f"{e} last"], expected[f"{e} first"] = (7, 11), (7, 13)
    c.check("facet (vertices, edges) by label", dict(sorted(expected.items())), groups)
    c.finish(capsys)


def test_criterion_6_non_normality(capsys, fx):
    c = Criterion(6, "structural but not combinatorial imset")
    b = ci.parse_imset(fx.b5, 5)
    alpha = ci.combination_vector(fx.alpha.split(), 5)
    beta = ci.combination_vector(fx.beta.split(), 5)
    w = ci.combination_vector(fx.witness2b.split(), 5)
    x = imsets.is_combinatorial(2 * b)
    c.check("is_structural(b)", True, imsets.is_structural(b))
    c.check("is_combinatorial(2b) returns a witness", True, x is not None and np.array_equal(imsets.image(x, 5), 2 * b))
    c.check("transcribed combination maps to 2b", True, bool(np.array_equal(imsets.image(w, 5), 2 * b)))
    c.check("is_combinatorial(b)", None, imsets.is_combinatorial(b))
    c.check("level counts of b", (0, 4, 4, 0), ci.level_counts(b))
    E = imsets.cone_with_target(b)
    c.check("cone dimension", 1, rational.cone_dimension(E))
    c.check("minimal generator", [int(v) for v in alpha + beta] + [2], rational.single_ray_generator(E))
    c.finish(capsys)


def test_criterion_7_markov(capsys, fx):
    c = Criterion(7, "Markov moves")
    g = markov.parse_move(fx.g_move, 5)
    c.check("g in ker A", True, markov.in_kernel(g))
    F = imsets.enumerate_fiber(build_matrix(5) @ g.plus)
    c.check("fiber of g+ is {g+, g-}", {tuple(int(v) for v in g.plus), tuple(int(v) for v in g.minus)}, set(F.elements))
    c.check("degrees of g+ and g-", (10, 10), (int(g.plus.sum()), int(g.minus.sum())))
    c.check("g indispensable", True, markov.is_indispensable(g))
    cubics = [markov.parse_move(t, 4) for t in fx.cubics4]
    c.check("cubics in ker A and indispensable", [True] * 4,
            [markov.in_kernel(m) and markov.is_indispensable(m) for m in cubics])
    q = markov.parse_move(fx.quartic4, 4)
    orb = markov.orbit(q)
    c.check("quartic orbit size", 24, len(orb))
    c.check("quartic orbit in ker A and indispensable", True,
            all(markov.in_kernel(m) and markov.is_indispensable(m) for m in orb))
    targets = [t for d in range(5) for t in markov.degree_targets(3, d)]
    c.check("n=3 quadrics connect every fiber of degree <= 4", True,
            markov.connectivity_check(markov.axiom_moves(3), targets).connected)
    c.check("listed primes contain all 24 axiom binomials", {12: True, 15: True, 16: True},
            {k: markov.prime_contains_axioms(markov.parse_prime(t, 4), 4) for k, t in fx.primes4.items()})
    c.finish(capsys)


def test_criterion_8_property_suites(capsys, sg4_masks):
    c = Criterion(8, "property suites")
    rng = random.Random(8)
    bad = 0
    for _ in range(1000):
        S = random_subset(rng, 4)
        T = S | random_subset(rng, 4, 0.1)
        cS = semigraphoid.closure(S)
        if not (S <= cS and semigraphoid.closure(cS) == cS and cS <= semigraphoid.closure(T)):
            bad += 1
    c.check("closure extensive/monotone/idempotent failures in 1000", 0, bad)

    pairs = sample_semigraphoids(sg4_masks, 400, seed=9)
    c.check("intersections of 200 pairs that are not semigraphoids", 0,
            sum(not semigraphoid.is_semigraphoid(a & b) for a, b in zip(pairs[::2], pairs[1::2])))

    disagree = unverified = 0
    for S in sample_semigraphoids(sg4_masks, 500, seed=10):
        p, d = submodular.is_submodular_primal(S), submodular.is_submodular_dual(S)
        disagree += p.submodular != d.submodular
        if p.submodular:
            unverified += not submodular.check_primal_witness(S, p.witness.vector)
            unverified += not submodular.check_dual_witness(S, d.witness.vector)
        else:
            prob, _ = submodular.primal_problem(S)
            unverified += not rational.check_certificate(prob, p.certificate)
    c.check("primal/dual disagreements in 500", 0, disagree)
    c.check("LP answers failing exact re-verification", 0, unverified)

    mismatched = 0
    for _ in range(100):
        deg = rng.randint(1, 4)
        x = np.bincount([rng.randrange(6) for _ in range(deg)], minlength=6)
        b = imsets.image(x, 3)
        mismatched += imsets.enumerate_fiber(b).elements != imsets.brute_force_fiber(b, deg)
    c.check("fiber enumeration vs brute force mismatches in 100", 0, mismatched)
    c.finish(capsys)
