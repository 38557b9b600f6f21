import random
from itertools import combinations
from math import comb

import pytest

from arrinv.arrangement import SimpleGraph, graphic_arrangement, make_arrangement
from arrinv.catalog import builtin
from arrinv.errors import DomainError, HypothesisError
from arrinv.formulas import (
    RankTable,
    chen_lower_bound,
    chen_ranks_decomposable,
    clique_counts,
    free_chen,
    graphic_lcs,
    lcs_ranks_decomposable,
    witt_rank,
)
from arrinv.holonomy import holonomy_rank
from arrinv.lyndon import lyndon_words, witt_count

from oracles import hilbert_theta


def test_witt_rank_matches_word_count():
    for n in range(1, 5):
        for k in range(1, 7):
            assert witt_rank(n, k) == witt_count(n, k)
            assert witt_rank(n, k) == len(lyndon_words(n, k))
    with pytest.raises(DomainError):
        witt_rank(0, 3)
    with pytest.raises(DomainError):
        witt_rank(2, 0)


def test_free_chen_against_hilbert_series():
    for n in range(1, 7):
        for k in range(1, 9):
            if k == 1:
                assert free_chen(n, k) == n
            else:
                assert free_chen(n, k) == hilbert_theta(n, k)
    assert [free_chen(2, k) for k in (2, 3, 4)] == [1, 2, 3]
    assert free_chen(3, 4) == 15


def test_chen_lower_bound():
    assert chen_lower_bound(builtin("braid", (3,)), 2) == 4
    assert chen_lower_bound(builtin("x3"), 2) == 3
    # doubles contribute nothing
    generic = make_arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)])
    assert chen_lower_bound(generic, 4) == 0
    with pytest.raises(DomainError):
        chen_lower_bound(builtin("x3"), 1)


def test_chen_ranks_decomposable():
    x3 = builtin("x3")
    assert [chen_ranks_decomposable(x3, k) for k in range(1, 6)] == [6, 3, 6, 9, 12]
    assert chen_ranks_decomposable(builtin("x2"), 3) == 10
    with pytest.raises(HypothesisError):
        chen_ranks_decomposable(builtin("braid", (3,)), 3)
    with pytest.raises(HypothesisError):
        chen_ranks_decomposable(builtin("pappus"), 3)
    with pytest.raises(DomainError):
        chen_ranks_decomposable(builtin("x3"), 0)


def test_lcs_ranks_decomposable():
    table = lcs_ranks_decomposable(builtin("x3"), 5)
    assert table.kind == "lcs"
    assert table.as_tuple() == (6, 3, 6, 9, 18)
    ss = lcs_ranks_decomposable(builtin("split_solvable", (2, 3)), 6)
    for k in range(2, 7):
        assert ss[k] == witt_count(2, k) + witt_count(3, k)
    with pytest.raises(HypothesisError):
        lcs_ranks_decomposable(builtin("braid", (3,)), 4)


def test_lcs_pencil_is_free_times_line():
    # a pencil deletes one free generator: phi_k agrees with the free
    # Lie algebra on mu letters for k >= 2
    pencil = make_arrangement([(1, 0), (0, 1), (1, 1), (1, 2)])
    table = lcs_ranks_decomposable(pencil, 6)
    assert table[1] == 4
    for k in range(2, 7):
        assert table[k] == witt_count(3, k)


def test_lcs_matches_holonomy():
    for name in ("x3", "x2", "nonpappus"):
        arr = builtin(name)
        table = lcs_ranks_decomposable(arr, 4)
        for k in range(1, 5):
            assert table[k] == holonomy_rank(arr, k)


def test_rank_table_validation():
    RankTable("lcs", {1: 3, 2: 1}, "none")
    with pytest.raises(ValueError):
        RankTable("lcs", {2: 1}, "none")
    with pytest.raises(ValueError):
        RankTable("lcs", {1: 3, 3: 1}, "none")
    with pytest.raises(ValueError):
        RankTable("lcs", {1: -1}, "none")
    with pytest.raises(ValueError):
        RankTable("spectral", {1: 3}, "none")
    with pytest.raises(ValueError):
        RankTable("lcs", {1: 3}, "maybe")


def brute_cliques(graph):
    verts = range(graph.vertices)
    adj = {(a, b) for a, b in graph.edges}
    out = []
    for size in range(1, graph.vertices + 1):
        count = 0
        for sub in combinations(verts, size):
            if all((a, b) in adj for a, b in combinations(sub, 2)):
                count += 1
        out.append(count)
    return out


def test_clique_counts():
    k4 = SimpleGraph(4, tuple((a, b) for a in range(4) for b in range(a + 1, 4)))
    assert clique_counts(k4) == [4, 6, 4, 1]
    path = SimpleGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert clique_counts(path) == [4, 3, 0, 0]
    rng = random.Random(71)
    for _ in range(20):
        v = rng.randrange(2, 7)
        edges = tuple(
            (a, b)
            for a in range(v)
            for b in range(a + 1, v)
            if rng.random() < 0.5
        )
        g = SimpleGraph(v, edges)
        assert clique_counts(g) == brute_cliques(g)


def test_graphic_lcs_small():
    k3 = SimpleGraph(3, ((0, 1), (0, 2), (1, 2)))
    t = graphic_lcs(k3, 4)
    assert t.kind == "lcs"
    assert t.hypothesis == "graphic"
    assert t.as_tuple() == (3, 1, 2, 3)
    k4 = SimpleGraph(4, tuple((a, b) for a in range(4) for b in range(a + 1, 4)))
    assert graphic_lcs(k4, 4).as_tuple() == (6, 4, 10, 21)
    edge = SimpleGraph(2, ((0, 1),))
    assert graphic_lcs(edge, 3).as_tuple() == (1, 0, 0)
    with pytest.raises(DomainError):
        graphic_lcs(k3, 0)


def test_graphic_lcs_agrees_with_decomposable_route():
    # every K4-free graph is decomposable, so the two formulas must agree
    rng = random.Random(73)
    found = 0
    while found < 12:
        v = rng.randrange(3, 6)
        edges = tuple(
            (a, b)
            for a in range(v)
            for b in range(a + 1, v)
            if rng.random() < 0.5
        )
        g = SimpleGraph(v, edges)
        kappa = clique_counts(g)
        if not edges or (len(kappa) >= 4 and kappa[3]):
            continue
        found += 1
        arr = graphic_arrangement(g)
        assert graphic_lcs(g, 5).values == lcs_ranks_decomposable(arr, 5).values


def test_graphic_lcs_k4_matches_holonomy():
    k4 = SimpleGraph(4, tuple((a, b) for a in range(4) for b in range(a + 1, 4)))
    arr = graphic_arrangement(k4)
    t = graphic_lcs(k4, 4)
    for k in range(1, 5):
        assert t[k] == holonomy_rank(arr, k)
