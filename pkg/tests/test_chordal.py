import itertools

import networkx as nx
import pytest
from hypothesis import given

from chorkit.chordal import (
    NotChordalError,
    clique_tree,
    find_hole,
    is_chordal,
    minimal_triangulations,
    peo_coloring,
    peo_violation,
    recognize_chordal,
    recognize_interval,
)
from chorkit.decomposition import is_complete, verify_td, width
from chorkit.graphs import Graph, GraphInputError, coloring_violation, maximal_cliques

from . import oracles
from .strategies import graphs


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


C4 = cycle(4)
C5 = cycle(5)
K4 = complete(4)
TREE5 = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
C4_CHORD = C4.with_edges([(0, 2)])


def test_recognize_examples():
    w = recognize_chordal(C4)
    assert not w.is_chordal
    assert w.hole == (0, 1, 2, 3)

    w = recognize_chordal(TREE5)
    assert w.is_chordal
    assert peo_violation(TREE5, w.peo) is None

    w = recognize_chordal(C4_CHORD)
    assert w.is_chordal
    # the hand-checkable order also passes
    assert peo_violation(C4_CHORD, (1, 3, 0, 2)) is None


def test_recognition_matches_brute_force_and_networkx():
    for g in oracles.atlas_graphs(1, 6):
        verdict = recognize_chordal(g)
        assert verdict.is_chordal == oracles.brute_is_chordal(g)
        if g.n:
            assert verdict.is_chordal == nx.is_chordal(oracles.to_networkx(g))
        if verdict.is_chordal:
            assert peo_violation(g, verdict.peo) is None
        else:
            hole = verdict.hole
            assert len(hole) >= 4
            for i in range(len(hole)):
                for j in range(i + 1, len(hole)):
                    consecutive = j - i == 1 or (i == 0 and j == len(hole) - 1)
                    assert g.has_edge(hole[i], hole[j]) == consecutive


@given(graphs(max_n=7))
def test_recognition_verdict_is_certified(g):
    verdict = recognize_chordal(g)
    if verdict.is_chordal:
        assert peo_violation(g, verdict.peo) is None
        assert find_hole(g) is None
    else:
        assert find_hole(g) is not None


def test_peo_coloring_examples():
    w = recognize_chordal(K4)
    assert peo_coloring(K4, w).colors_used == 4

    w = recognize_chordal(TREE5)
    assert peo_coloring(TREE5, w).colors_used == 2

    w = recognize_chordal(C4_CHORD)
    col = peo_coloring(C4_CHORD, w)
    assert col.colors_used == 3
    assert coloring_violation(C4_CHORD, col.assignment) is None

    with pytest.raises(GraphInputError):
        peo_coloring(C4, recognize_chordal(C4))
    from chorkit.chordal import ChordalWitness

    with pytest.raises(GraphInputError):
        peo_coloring(C4_CHORD, ChordalWitness(peo=(0, 1, 2, 3)))  # 1,3 later pair


def test_peo_coloring_uses_omega_colors():
    for g in oracles.atlas_graphs(1, 6):
        w = recognize_chordal(g)
        if w.is_chordal:
            col = peo_coloring(g, w)
            assert coloring_violation(g, col.assignment) is None
            assert col.colors_used == (maximal_cliques(g).omega if g.n else 0)


def test_clique_tree_examples():
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    td = clique_tree(path3)
    assert td.tree.m == 2 and td.bags == (frozenset({0, 1}), frozenset({1, 2}))

    td = clique_tree(K4)
    assert td.tree.m == 1 and td.bags == (frozenset({0, 1, 2, 3}),)

    td = clique_tree(C4_CHORD)
    assert td.bags == (frozenset({0, 1, 2}), frozenset({0, 2, 3}))
    assert td.tree.edges == ((0, 1),)

    with pytest.raises(NotChordalError):
        clique_tree(C4)


def test_clique_tree_is_always_a_complete_valid_decomposition():
    for g in oracles.atlas_graphs(1, 6):
        if not is_chordal(g):
            continue
        td = clique_tree(g)
        assert verify_td(g, td).ok
        assert is_complete(g, td)
        assert width(td) == maximal_cliques(g).omega - 1
        # every maximal clique appears exactly once as a bag
        assert sorted(td.bags) == sorted(
            frozenset(c) for c in maximal_cliques(g).maximal_cliques
        )


def test_interval_examples():
    res = recognize_interval(C4)
    assert not res.is_interval and res.hole == (0, 1, 2, 3)

    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    res = recognize_interval(star)
    assert res.is_interval
    spans = res.model
    for u in range(4):
        for v in range(u + 1, 4):
            overlap = spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]
            assert overlap == star.has_edge(u, v)

    spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert oracles.brute_interval_model(spider) is None
    res = recognize_interval(spider)
    assert not res.is_interval
    x, y, z = res.asteroidal_triple
    assert not spider.has_edge(x, y) and not spider.has_edge(x, z) and not spider.has_edge(y, z)


def test_interval_recognition_matches_brute_force():
    for g in oracles.atlas_graphs(1, 6):
        res = recognize_interval(g)
        assert res.is_interval == (oracles.brute_interval_model(g) is not None)


def test_minimal_triangulation_examples():
    enum = minimal_triangulations(TREE5, cap=10)
    assert enum.complete and len(enum.triangulations) == 1
    assert enum.triangulations[0].fill == ()

    enum = minimal_triangulations(C4, cap=10)
    assert sorted(t.fill for t in enum.triangulations) == [((0, 2),), ((1, 3),)]

    enum = minimal_triangulations(C5, cap=10)
    assert enum.complete and len(enum.triangulations) == 5
    # each is a fan: both chords from one apex
    for t in enum.triangulations:
        assert len(t.fill) == 2
        apexes = set(t.fill[0]) & set(t.fill[1])
        assert len(apexes) == 1

    with pytest.raises(GraphInputError):
        minimal_triangulations(C4, cap=0)


def test_minimal_triangulations_match_brute_force():
    for g in oracles.atlas_graphs(1, 5):
        pairs, minimal = oracles.brute_minimal_fill_masks(g)
        expect = sorted(
            tuple(pairs[i] for i in range(len(pairs)) if m >> i & 1) for m in minimal
        )
        enum = minimal_triangulations(g, cap=10_000)
        assert enum.complete
        assert sorted(t.fill for t in enum.triangulations) == sorted(
            tuple(sorted(f)) for f in expect
        )


@given(graphs(max_n=6))
def test_minimal_triangulations_are_minimal_chordal_and_deduplicated(g):
    enum = minimal_triangulations(g, cap=10_000)
    fills = [t.fill for t in enum.triangulations]
    assert len(set(fills)) == len(fills)
    for t in enum.triangulations:
        assert is_chordal(t.result)
        for f in t.fill:
            assert not is_chordal(t.result.without_edges([f]))


def test_triangulation_cap_flags_incomplete():
    c6 = cycle(6)
    enum = minimal_triangulations(c6, cap=3)
    assert not enum.complete and len(enum.triangulations) == 3
