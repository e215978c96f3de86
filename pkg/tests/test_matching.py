import random

import pytest

import oracles
from netctrl.graph import DirectedGraph
from netctrl.matching import driver_set, maximum_matching, n_d


def build(n, edges):
    g = DirectedGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def test_path_has_unique_maximum_matching():
    m = maximum_matching(build(3, [(0, 1), (1, 2)]))
    assert m.matched_edges == {(0, 1), (1, 2)}
    assert m.size == 2


def test_empty_graph_matches_nothing():
    assert maximum_matching(build(3, [])).size == 0


def test_star_matches_single_edge():
    g = build(4, [(0, 1), (0, 2), (0, 3)])
    m = maximum_matching(g)
    assert m.size == 1  # every edge shares source 0
    assert oracles.max_matching_size(g) == 1


def test_driver_set_path():
    g = build(3, [(0, 1), (1, 2)])
    d = driver_set(g, maximum_matching(g))
    assert d.drivers == {0}
    assert d.n_driver == 1


def test_driver_set_cycle_perfect_matching():
    g = build(3, [(0, 1), (1, 2), (2, 0)])
    d = driver_set(g, maximum_matching(g))
    assert d.drivers == set()
    assert d.n_driver == 1  # at least one input is always needed


def test_driver_set_star():
    g = build(4, [(0, 1), (0, 2), (0, 3)])
    m = maximum_matching(g)
    assert m.matched_edges == {(0, 1)}
    d = driver_set(g, m)
    assert d.drivers == {0, 2, 3}
    assert d.n_driver == 3
    # brute force: every maximum matching leaves exactly 3 targets unmatched
    for mm in oracles.all_maximum_matchings(g):
        assert g.n - len(mm) == 3


@pytest.mark.parametrize(
    "n,edges,expected",
    [
        (3, [(0, 1), (1, 2)], 1 / 3),
        (4, [], 1.0),
    ],
)
def test_density(n, edges, expected):
    assert n_d(build(n, edges)) == pytest.approx(expected)


def test_matching_size_matches_bruteforce_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(150):
        g = oracles.random_graph(rng, 8)
        assert maximum_matching(g).size == oracles.max_matching_size(g)


def test_matching_edges_all_exist_and_are_disjoint():
    rng = random.Random(7)
    for _ in range(60):
        g = oracles.random_graph(rng, 12)
        m = maximum_matching(g)
        sources = [u for u, _ in m.matched_edges]
        targets = [v for _, v in m.matched_edges]
        assert len(set(sources)) == len(sources)
        assert len(set(targets)) == len(targets)
        for e in m.matched_edges:
            assert e in g.edges
        d = driver_set(g, m)
        assert len(d.drivers) == g.n - m.size


def test_adding_edge_never_shrinks_matching():
    rng = random.Random(99)
    for _ in range(40):
        g = oracles.random_graph(rng, 7)
        before = maximum_matching(g).size
        candidates = [
            (u, v)
            for u in range(g.n)
            for v in range(g.n)
            if u != v and not g.has_edge(u, v)
        ]
        if not candidates:
            continue
        u, v = rng.choice(candidates)
        g.add_edge(u, v)
        after = maximum_matching(g).size
        assert before <= after <= before + 1


def test_removing_edge_shrinks_matching_by_at_most_one():
    rng = random.Random(100)
    for _ in range(40):
        g = oracles.random_graph(rng, 7)
        if g.edge_count == 0:
            continue
        before = maximum_matching(g).size
        u, v = rng.choice(sorted(g.edges))
        g.remove_edge(u, v)
        after = maximum_matching(g).size
        assert before - 1 <= after <= before


def test_determinism():
    rng = random.Random(5)
    for _ in range(20):
        g = oracles.random_graph(rng, 10)
        assert maximum_matching(g).matched_edges == maximum_matching(g).matched_edges
        assert (
            maximum_matching(g.copy()).matched_edges
            == maximum_matching(g).matched_edges
        )
