from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semigraphoids import semigraphoid as sg
from semigraphoids.ci import gamma, generate_axioms
from semigraphoids.semigraphoid import StatementSet

from helpers import random_subset


def brute_is_semigraphoid(S: StatementSet) -> bool:
    for (a, b), (c, d) in generate_axioms(S.n):
        if (a in S.ordinals() and b in S.ordinals()) != (c in S.ordinals() and d in S.ordinals()):
            return False
    return True


def test_m_is_semigraphoid_of_size_four(M):
    assert sg.is_semigraphoid(M)
    assert len(M) == 4


def test_empty_and_full_are_semigraphoids():
    for n in (3, 4, 5):
        assert sg.is_semigraphoid(StatementSet.empty(n))
        assert sg.is_semigraphoid(StatementSet.full(n))


def test_single_statements_are_semigraphoids():
    for k in range(gamma(4)):
        assert sg.is_semigraphoid(StatementSet(4, 1 << k))


def test_one_side_of_an_axiom_closes_to_both_sides():
    for eq in generate_axioms(4):
        S = StatementSet.of(4, list(eq.lhs))
        assert not sg.is_semigraphoid(S)
        assert StatementSet.of(4, list(eq.lhs) + list(eq.rhs)) <= sg.closure(S)


@pytest.mark.parametrize("seed", range(3))
def test_bitset_check_matches_brute_force(seed):
    rng = random.Random(seed)
    for _ in range(200):
        S = random_subset(rng, 4)
        assert sg.is_semigraphoid(S) == brute_is_semigraphoid(S)


def test_closure_properties_1000_random_subsets():
    rng = random.Random(2024)
    for _ in range(1000):
        S = random_subset(rng, 4)
        T = S | random_subset(rng, 4, 0.1)
        cS, cT = sg.closure(S), sg.closure(T)
        assert S <= cS
        assert sg.is_semigraphoid(cS)
        assert sg.closure(cS) == cS
        assert cS <= cT


def test_intersection_closure_200_pairs(sg4_masks):
    rng = random.Random(7)
    for _ in range(200):
        a = StatementSet(4, int(sg4_masks[rng.randrange(len(sg4_masks))]))
        b = StatementSet(4, int(sg4_masks[rng.randrange(len(sg4_masks))]))
        assert sg.is_semigraphoid(a & b)


def test_closure_is_least(sg4_masks):
    """The closure is contained in every semigraphoid containing the input."""
    rng = random.Random(3)
    for _ in range(50):
        S = random_subset(rng, 4, 0.15)
        c = sg.closure(S)
        for m in sg4_masks[rng.randrange(len(sg4_masks)) :: 997][:20]:
            T = StatementSet(4, int(m))
            if S <= T:
                assert c <= T


def test_counts_small_n():
    assert sg.count_semigraphoids(2) == 2
    assert sg.count_semigraphoids(3) == 22


def test_count_n4(sg4_masks):
    assert len(sg4_masks) == 26424
    assert list(sg4_masks) == sorted(sg4_masks)


@pytest.mark.parametrize("workers", [1, 3])
def test_enumeration_independent_of_workers(workers):
    assert sg.semigraphoid_masks(3, workers).tolist() == sg.semigraphoid_masks(3, 1).tolist()


def test_enumerate_all_yields_semigraphoids():
    items = list(sg.enumerate_all(3))
    assert len(items) == 22
    assert all(sg.is_semigraphoid(S) for S in items)


@given(st.permutations([1, 2, 3, 4]))
def test_relabeling_preserves_semigraphoids(sigma):
    rng = random.Random(hash(tuple(sigma)))
    for _ in range(20):
        S = random_subset(rng, 4)
        assert sg.is_semigraphoid(S) == sg.is_semigraphoid(S.permuted(sigma))
        assert sg.closure(S).permuted(sigma) == sg.closure(S.permuted(sigma))


def test_full_set_is_coarsest_trivially_false_for_empty():
    assert not sg.is_coarsest(StatementSet.empty(3))


def test_gamma_is_coarsest(G):
    assert sg.is_coarsest(G)
    assert len(G.complement()) == 36


def test_type_signature_sums_to_size(M):
    assert sum(sg.type_signature(M)) == len(M)
    assert sg.type_signature(M) == (2, 0, 2)


def test_parse_statement_set_with_comments():
    S = sg.parse_statement_set("# header\n1.2|   # c\n\n3.4|12\n", 4)
    assert [str(s) for s in S] == ["1.2|", "3.4|12"]


def test_parse_errors_name_line_and_column():
    with pytest.raises(ValueError, match="line 2, column 3"):
        sg.parse_statement_set("1.2|\n  9\n", 4)
    with pytest.raises(ValueError, match="line 1"):
        sg.parse_statement_set("1.5|\n", 4)


def test_statement_set_width_check():
    with pytest.raises(ValueError):
        StatementSet(3, 1 << gamma(3))


def test_table_formatting():
    rows = [sg.ClassificationRow(6, (2, 0, 4), 30, 3)]
    text = sg.format_table(rows)
    assert text.splitlines()[0] == sg.TABLE_HEADER
    assert text.splitlines()[1].split("\t")[-1] == "33"
