from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semigraphoids import markov
from semigraphoids.ci import build_matrix, gamma


def test_axiom_moves_in_kernel():
    for n in (3, 4):
        moves = markov.axiom_moves(n)
        assert len(moves) == {3: 3, 4: 24}[n]
        assert all(markov.in_kernel(m) for m in moves)
        assert all(m.degree == 2 for m in moves)


def test_axiom_quadrics_indispensable_n4():
    assert all(markov.is_indispensable(m) for m in markov.axiom_moves(4))


def test_g_move(fx):
    g = markov.parse_move(fx.g_move, 5)
    assert g.degree == 10 and int(g.minus.sum()) == 10
    assert markov.in_kernel(g)
    assert markov.is_indispensable(g)


def test_cubics(fx):
    for text in fx.cubics4:
        c = markov.parse_move(text, 4)
        assert c.degree == 3
        assert markov.in_kernel(c)
        assert markov.is_indispensable(c)


def test_quartic_in_kernel_and_indispensable(fx):
    q = markov.parse_move(fx.quartic4, 4)
    assert q.degree == 4
    for m in markov.orbit(q):
        assert markov.in_kernel(m) and markov.is_indispensable(m)


def test_not_in_kernel_rejected():
    v = [0] * gamma(4)
    v[0] = 1
    m = markov.MarkovMove(4, tuple(v))
    assert not markov.in_kernel(m)
    with pytest.raises(ValueError):
        markov.is_indispensable(m)


def test_text_round_trip(fx):
    g = markov.parse_move(fx.g_move, 5)
    assert markov.parse_move(g.to_text(), 5) == g


def test_parse_errors():
    with pytest.raises(ValueError, match="line 1"):
        markov.parse_moves("* 1.2|\n- 1.3|\n", 4)
    with pytest.raises(ValueError):
        markov.parse_moves("+ 1.2|\n", 4)
    with pytest.raises(ValueError, match="line 2"):
        markov.parse_moves("+ 1.2|\n- 7.8|\n", 4)


def test_n3_quadrics_connect_low_degree_fibers():
    targets = [t for d in range(5) for t in markov.degree_targets(3, d)]
    rep = markov.connectivity_check(markov.axiom_moves(3), targets)
    assert rep.connected and len(rep.fibers) == len(targets)


def test_n4_quadrics_do_not_connect_cubic_fiber(fx):
    c = markov.parse_move(fx.cubics4[0], 4)
    rep = markov.connectivity_check(markov.axiom_moves(4), [build_matrix(4) @ c.plus])
    assert not rep.connected
    rep2 = markov.connectivity_check(markov.axiom_moves(4) + [c], [build_matrix(4) @ c.plus])
    assert rep2.connected


@given(st.permutations([1, 2, 3, 4]))
def test_relabeling_preserves_kernel(sigma):
    for m in markov.axiom_moves(4)[:6]:
        assert markov.in_kernel(m.permuted(sigma))


def test_orbit_of_axiom_quadrics_covers_all():
    orbits = set()
    for m in markov.axiom_moves(4):
        orbits |= markov.orbit(m)
    assert orbits == {m.canonical() for m in markov.axiom_moves(4)}


def test_primes_contain_axioms(fx):
    for codim, text in fx.primes4.items():
        p = markov.parse_prime(text, 4)
        assert len(p) == codim
        assert markov.prime_contains_axioms(p, 4)
        assert all(markov.prime_contains_axioms(q, 4) for q in markov.prime_orbit(p, 4))


def test_semigraphoids_are_01_points(sg4_masks):
    for m in sg4_masks[::1000]:
        assert markov.annihilates_axioms(markov.zero_one_vector(int(m), 4), 4)
    lhs = markov.axiom_moves(4)[0].plus
    assert not markov.annihilates_axioms(lhs, 4)
