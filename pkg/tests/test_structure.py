import logging
from collections import deque

import pytest

from conftest import connected_upto8, girth5_upto10
from oracles import brute_girth, cycle, path
from distcolor.graph import FamilySpec, Graph, generate
from distcolor.structure import (
    ACYCLIC,
    DisconnectedGraph,
    PreconditionError,
    bfs_tree,
    bipartition,
    check_observation,
    components,
    girth,
    is_connected,
    unique_cycle,
)


def fam(name, *params):
    return generate(FamilySpec(name, params))


def naive_distances(g, s):
    # Bellman-Ford style relaxation, independent of the BFS code
    d = {s: 0}
    for _ in range(g.n):
        for u, v in g.edges:
            for a, b in ((u, v), (v, u)):
                if a in d and d.get(b, 1 << 30) > d[a] + 1:
                    d[b] = d[a] + 1
    return d


class TestBfsTree:
    def test_star(self):
        t = bfs_tree(fam("star", 3), 0)
        assert t.level == (0, 1, 1, 1) and t.levels() == [[0], [1, 2, 3]]

    def test_path(self):
        t = bfs_tree(path(3), 0)
        assert t.level == (0, 1, 2) and t.parent == (None, 0, 1)
        assert t.children(0) == [1] and t.height == 2

    def test_cycle_levels(self):
        assert sorted(bfs_tree(cycle(6), 0).level) == [0, 1, 1, 2, 2, 3]

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            bfs_tree(Graph(3, [(0, 1)]), 0)
        with pytest.raises(ValueError):
            bfs_tree(path(3), 5)

    def test_levels_are_distances_on_census(self):
        for g in connected_upto8()[::7]:
            for r in range(g.n):
                t = bfs_tree(g, r)
                d = naive_distances(g, r)
                assert all(t.level[v] == d[v] for v in range(g.n))
                for v in range(g.n):
                    if v != r:
                        assert g.has_edge(v, t.parent[v])
                        assert t.level[v] == t.level[t.parent[v]] + 1


class TestGirth:
    @pytest.mark.parametrize("g,expected", [
        (cycle(6), 6), (path(4), ACYCLIC), (fam("heawood"), 6), (fam("petersen"), 5),
        (fam("complete", 4), 3), (fam("complete_bipartite", 3, 3), 4), (Graph(1), ACYCLIC),
    ])
    def test_values(self, g, expected):
        assert girth(g) == expected

    def test_matches_cycle_enumeration_upto8(self):
        for g in connected_upto8():
            assert girth(g) == brute_girth(g)

    def test_disconnected_forest_plus_cycle(self):
        g = Graph(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)])
        assert girth(g) == 4


class TestBipartition:
    def test_examples(self):
        assert bipartition(cycle(6)) == (0, 1, 0, 1, 0, 1)
        assert bipartition(cycle(5)) is None
        assert bipartition(fam("complete_bipartite", 3, 3)) == (0, 0, 0, 1, 1, 1)
        side = bipartition(fam("heawood"))
        assert all(side[u] != side[v] for u, v in fam("heawood").edges)

    def test_parity_law(self):
        for g in connected_upto8():
            gr = girth(g)
            if gr == ACYCLIC:
                assert bipartition(g) is not None
            elif gr % 2:
                assert bipartition(g) is None


class TestUniqueCycle:
    def test_triangle_with_pendant(self):
        uc = unique_cycle(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)]))
        assert uc.cycle_vertices == (0, 1, 2)
        assert uc.hanging_trees[0] == {0, 3} and uc.hanging_trees[1] == {1}

    def test_tree_and_errors(self):
        assert unique_cycle(path(5)) is None
        with pytest.raises(PreconditionError):
            unique_cycle(fam("complete", 4))
        with pytest.raises(DisconnectedGraph):
            unique_cycle(Graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)]))

    @pytest.mark.parametrize("seed", range(25))
    def test_decomposition(self, seed):
        g = generate(FamilySpec("random_unicyclic", (8 + seed,), seed))
        uc = unique_cycle(g)
        cyc = uc.cycle_vertices
        t = len(cyc)
        assert len(set(cyc)) == t >= 3
        cyc_edges = {tuple(sorted((cyc[i], cyc[(i + 1) % t]))) for i in range(t)}
        assert cyc_edges <= g.edges
        rest = Graph(g.n, g.edges - cyc_edges)
        assert girth(rest) == ACYCLIC
        union = set()
        for x in cyc:
            tree = uc.hanging_trees[x]
            assert tree & set(cyc) == {x} and not tree & union
            union |= tree
        assert union == set(range(g.n))


class TestComponents:
    def test_components(self):
        g = Graph(5, [(0, 3), (1, 4)])
        assert components(g) == [[0, 3], [1, 4], [2]]
        assert not is_connected(g) and is_connected(Graph(1))


class TestObservation:
    @pytest.mark.parametrize("g", [cycle(5), fam("petersen"), fam("heawood"), cycle(9)],
                             ids=["C5", "petersen", "heawood", "C9"])
    def test_passes(self, g):
        rep = check_observation(g)
        assert rep.passed
        assert [line.split()[0] for line in rep.lines()] == ["(i)", "(ii)", "(iii)", "(iv)", "(v)"]

    def test_precondition_distinct_from_failure(self):
        with pytest.raises(PreconditionError, match="girth 4"):
            check_observation(cycle(4))
        with pytest.raises(PreconditionError):
            check_observation(fam("complete", 4))

    def test_census(self):
        assert all(check_observation(g).passed for g in girth5_upto10())

    def test_schemas_listed(self):
        rep = check_observation(cycle(5))
        assert set(rep.schemas) == {"i", "ii", "iii", "iv", "v"}
        assert all("pass" in line for line in rep.lines())
