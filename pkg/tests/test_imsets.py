from __future__ import annotations

import random

import numpy as np
import pytest

from semigraphoids import ci, imsets


def _b(fx):
    return ci.parse_imset(fx.b5, 5)


def test_elementary_imsets_are_structural_and_combinatorial():
    for s in ci.enumerate_statements(4):
        u = ci.elementary_imset(s, 4)
        assert imsets.is_structural(u)
        x = imsets.is_combinatorial(u)
        assert x is not None and x.sum() == 1


def test_zero_imset():
    z = np.zeros(8, dtype=np.int64)
    assert imsets.is_structural(z)
    x = imsets.is_combinatorial(z)
    assert x is not None and not x.any()
    assert len(imsets.enumerate_fiber(z)) == 1


def test_negated_elementary_not_structural():
    u = ci.elementary_imset(ci.parse_statement("1.2|3"), 3)
    assert not imsets.is_structural(-u)
    assert imsets.is_combinatorial(-u) is None


def test_small_fiber_against_brute_force():
    x = ci.combination_vector(["1.2|", "2.3|1"], 3)
    b = imsets.image(x, 3)
    F = imsets.enumerate_fiber(b)
    assert F.elements == imsets.brute_force_fiber(b, 2)
    assert tuple(int(v) for v in x) in F.elements


def test_fiber_matches_brute_force_100_n3_targets():
    rng = random.Random(99)
    for _ in range(100):
        d = rng.randint(1, 4)
        x = np.bincount([rng.randrange(6) for _ in range(d)], minlength=6)
        b = imsets.image(x, 3)
        assert imsets.enumerate_fiber(b).elements == imsets.brute_force_fiber(b, d)


def test_fiber_matches_brute_force_n4_targets():
    rng = random.Random(4)
    for _ in range(15):
        d = rng.randint(1, 3)
        x = np.bincount([rng.randrange(24) for _ in range(d)], minlength=24)
        b = imsets.image(x, 4)
        assert imsets.enumerate_fiber(b).elements == imsets.brute_force_fiber(b, d)


def test_non_image_targets_have_empty_fibers():
    rng = random.Random(8)
    for _ in range(30):
        b = np.array([rng.randint(-1, 1) for _ in range(8)], dtype=np.int64)
        F = imsets.enumerate_fiber(b)
        for y in F.elements:
            assert np.array_equal(imsets.image(y, 3), b)
        if imsets.is_combinatorial(b) is None:
            assert len(F) == 0


def test_degree_cap():
    x = np.zeros(6, dtype=np.int64)
    x[0] = 5
    with pytest.raises(imsets.DegreeCapExceeded):
        imsets.enumerate_fiber(imsets.image(x, 3), max_degree=4)


def test_b_structural_but_not_combinatorial(fx):
    b = _b(fx)
    assert ci.level_counts(b) == (0, 4, 4, 0)
    assert imsets.is_structural(b)
    assert imsets.is_combinatorial(b) is None


def test_2b_witness(fx):
    b = _b(fx)
    x = imsets.is_combinatorial(2 * b)
    assert x is not None and x.sum() == 16
    assert np.array_equal(imsets.image(x, 5), 2 * b)
    w = ci.combination_vector(fx.witness2b.split(), 5)
    assert np.array_equal(imsets.image(w, 5), 2 * b)


def test_single_ray_generator(fx):
    b = _b(fx)
    alpha = ci.combination_vector(fx.alpha.split(), 5)
    beta = ci.combination_vector(fx.beta.split(), 5)
    rep = imsets.verify_nonnormality(b, [int(v) for v in alpha + beta] + [2])
    assert rep.ok, rep.checks


def test_format_combination():
    x = ci.combination_vector(["1.2|", "1.2|", "2.3|1"], 3)
    assert imsets.format_combination(x, 3) == "1.2|^2\n2.3|1\n"


def test_bad_length():
    with pytest.raises(ValueError):
        imsets.is_structural([0, 0, 0])
