import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from distcolor.graph import (
    FamilySpec,
    GenerationInfeasible,
    Graph,
    GraphFormatError,
    MissingProblemLine,
    SelfLoopError,
    SplitMix64,
    VertexOutOfRange,
    _g6_size_bytes,
    generate,
    iter_graph6,
    parse_dimacs,
    parse_graph6,
    to_dimacs,
    to_graph6,
)
from distcolor.structure import bipartition, girth, is_connected


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, edges)


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestGraph:
    def test_normalises_edges(self):
        g = Graph(3, [(2, 0), (0, 2), (1, 2)])
        assert g.edges == {(0, 2), (1, 2)}
        assert g.neighbors(2) == {0, 1} and g.degree(0) == 1 and g.max_degree == 2

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_immutable(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 3

    def test_spanning_and_relabel(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert Graph(4, [(0, 1), (2, 3)]).is_spanning_subgraph_of(g)
        assert not Graph(3, [(0, 1)]).is_spanning_subgraph_of(g)
        assert g.relabel([3, 2, 1, 0]) == g

    def test_closed_neighborhood(self):
        g = Graph(3, [(0, 1)])
        assert g.closed_neighborhood(0) == {0, 1}


class TestGraph6:
    def test_examples(self):
        assert parse_graph6("A_") == Graph(2, [(0, 1)])
        assert to_graph6(Graph(2, [(0, 1)])) == "A_"
        assert to_graph6(Graph(1)) == "@"
        assert parse_graph6("@") == Graph(1)
        heawood = generate(FamilySpec("heawood"))
        assert parse_graph6(to_graph6(heawood)) == heawood

    @pytest.mark.parametrize("n", [0, 1, 5, 62, 63, 100, 300])
    def test_size_headers_match_networkx(self, n):
        g = Graph(n, [(0, n - 1)] if n > 1 else [])
        assert to_graph6(g) == nx_graph6(g)
        assert parse_graph6(to_graph6(g)) == g

    def test_eight_byte_header(self):
        # 258048 = 63 * 2^12 needs the '~~' form: 36 bits 0...0 111111 000000 000000
        assert bytes(_g6_size_bytes(258048)) == b"~~???~??"

    def test_seeded_random_round_trip(self):
        rng = SplitMix64(99)
        for _ in range(1000):
            n = 1 + rng.below(20)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.below(3) == 0]
            g = Graph(n, edges)
            text = to_graph6(g)
            assert text == nx_graph6(g)
            assert parse_graph6(text) == g

    @given(graphs())
    def test_round_trip_property(self, g):
        assert parse_graph6(to_graph6(g)) == g

    @pytest.mark.parametrize("text,offset", [("", 0), ("A", 1), ("A_x", 2), ("A\x01", 1), ("Bw?", 2), ("A`", 1)])
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(GraphFormatError) as ei:
            parse_graph6(text)
        assert ei.value.offset == offset
        assert f"offset {offset}" in str(ei.value)

    def test_header_and_stream(self):
        assert parse_graph6(">>graph6<<A_") == Graph(2, [(0, 1)])
        assert [g.n for g in iter_graph6(["A_\n", "\n", "@\n"])] == [2, 1]


class TestDimacs:
    def test_examples(self):
        k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert k3 == generate(FamilySpec("complete", (3,)))
        assert parse_dimacs("p edge 2 0") == Graph(2)
        with pytest.raises(SelfLoopError):
            parse_dimacs("p edge 2 1\ne 1 1\n")

    def test_comments_and_duplicates(self):
        g = parse_dimacs("c hello\np edge 3 2\ne 1 2\ne 2 1\n")
        assert g == Graph(3, [(0, 1)])

    def test_distinct_errors(self):
        with pytest.raises(MissingProblemLine):
            parse_dimacs("e 1 2\n")
        with pytest.raises(VertexOutOfRange):
            parse_dimacs("p edge 2 1\ne 1 3\n")
        assert not issubclass(MissingProblemLine, VertexOutOfRange)
        with pytest.raises(GraphFormatError):
            parse_dimacs("p edge 2 1\ne 1 x\n")

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_dimacs(to_dimacs(g)) == g


class TestSplitMix:
    def test_reference_stream(self):
        # first outputs for seed 0 of the published SplitMix64 reference
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]

    def test_below_in_range(self):
        rng = SplitMix64(5)
        assert all(0 <= rng.below(7) < 7 for _ in range(500))
        with pytest.raises(ValueError):
            rng.below(0)


class TestGenerate:
    def test_named(self):
        c6 = generate(FamilySpec("cycle", (6,)))
        assert c6.edges == {tuple(sorted((i, (i + 1) % 6))) for i in range(6)}
        assert generate(FamilySpec("complete_bipartite", (3, 3))).m == 9
        assert generate(FamilySpec("star", (4,))).degrees() == [4, 1, 1, 1, 1]
        assert generate(FamilySpec("complete_multipartite", (2, 2, 2))).m == 12
        assert generate(FamilySpec("path", (1,))) == Graph(1)
        h, p = generate(FamilySpec("heawood")), generate(FamilySpec("petersen"))
        assert (h.n, h.m, girth(h)) == (14, 21, 6)
        assert (p.n, p.m, girth(p)) == (10, 15, 5)

    def test_random_tree(self):
        g = generate(FamilySpec("random_tree", (10,), 7))
        assert (g.n, g.m) == (10, 9) and is_connected(g)

    @pytest.mark.parametrize("seed", range(30))
    def test_random_families(self, seed):
        u = generate(FamilySpec("random_unicyclic", (5 + seed,), seed))
        assert u.m == u.n and is_connected(u)
        n, m = 12 + seed, 12 + seed + seed // 3
        b = generate(FamilySpec("random_bipartite_girth6", (n, m), seed))
        assert b.n == n and b.m == m
        assert is_connected(b) and bipartition(b) is not None and girth(b) >= 6

    def test_deterministic(self):
        spec = FamilySpec("random_bipartite_girth6", (20, 24), 1)
        assert generate(spec).edges == generate(spec).edges
        assert generate(spec) != generate(FamilySpec("random_bipartite_girth6", (20, 24), 2))

    def test_infeasible(self):
        with pytest.raises(GenerationInfeasible):
            generate(FamilySpec("random_bipartite_girth6", (10, 40), 3))

    @pytest.mark.parametrize("family,params,seed", [
        ("cycle", (), None), ("cycle", (0,), None), ("random_tree", (5,), None),
        ("nonsense", (1,), None), ("random_tree", (5,), -1), ("random_tree", (5,), 2**64),
        ("complete_multipartite", (), None),
    ])
    def test_spec_validation(self, family, params, seed):
        with pytest.raises(ValueError):
            FamilySpec(family, params, seed)
