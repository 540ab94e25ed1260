import pytest

from conftest import connected_upto8
from oracles import brute_aut_order, cycle, naive_chi, naive_d, naive_predicate_value, path
from distcolor.autom import automorphism_group
from distcolor.exact import (
    ExactBudgetExceeded,
    _Enumerator,
    chromatic_number,
    distinguishing_chromatic_number,
    distinguishing_number,
    scan_conjecture,
)
from distcolor.graph import FamilySpec, Graph, generate, to_graph6
from distcolor.labeling import is_distinguishing, is_proper, verify


def fam(name, *params):
    return generate(FamilySpec(name, params))


def exhausted(g, k, proper, distinguishing):
    order = list(range(g.n))
    return _Enumerator(g, order, k, proper, distinguishing, 10**7, None).run() is None


class TestChromatic:
    @pytest.mark.parametrize("g,chi", [
        (cycle(6), 2), (cycle(5), 3), (fam("complete_bipartite", 3, 3), 2),
        (fam("complete", 5), 5), (fam("petersen"), 3), (Graph(3), 1),
    ])
    def test_values(self, g, chi):
        res = chromatic_number(g)
        assert res.value == chi and res.witness.labels_used == chi
        assert is_proper(g, res.witness.labels)

    def test_matches_naive(self):
        for g in connected_upto8()[:200]:
            assert chromatic_number(g).value == naive_chi(g)


class TestDistinguishingNumber:
    @pytest.mark.parametrize("g,d", [
        (cycle(5), 3), (fam("complete", 4), 4), (fam("complete_bipartite", 3, 3), 4),
        (fam("petersen"), 3), (cycle(6), 2), (path(4), 2),
    ])
    def test_values(self, g, d):
        res = distinguishing_number(g)
        assert res.value == d
        assert is_distinguishing(g, res.witness.labels) and res.witness.labels_used == d

    def test_asymmetric(self):
        asym = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 3)])
        assert distinguishing_number(asym).value == 1

    def test_matches_naive_upto6(self):
        for g in connected_upto8():
            if g.n <= 6:
                assert distinguishing_number(g).value == naive_d(g), to_graph6(g)


class TestDistinguishingChromatic:
    @pytest.mark.parametrize("g,value", [
        (cycle(6), 4), (fam("complete_bipartite", 3, 3), 6), (fam("complete_bipartite", 4, 4), 8),
        (cycle(5), 3), (fam("complete_multipartite", 2, 2, 2), 6), (fam("complete_multipartite", 1, 2, 3), 6),
    ])
    def test_values(self, g, value):
        for bound in (True, False):
            res = distinguishing_chromatic_number(g, constructive_bound=bound)
            assert res.value == value
            rep = verify(g, res.witness.labels)
            assert rep.ok and rep.labels_used == value

    def test_petersen(self):
        # naive oracle: enumerate all 4^10 labelings against all 120 automorphisms
        g = fam("petersen")
        assert naive_predicate_value(g, True, True)[0] == 4
        assert distinguishing_chromatic_number(g, constructive_bound=False).value == 4

    def test_heawood(self):
        assert distinguishing_chromatic_number(fam("heawood"), constructive_bound=False).value == 4

    def test_witness_and_certificate_upto8(self):
        for g in connected_upto8()[::23]:
            chi = chromatic_number(g).value
            d = distinguishing_number(g).value
            res = distinguishing_chromatic_number(g)
            assert max(chi, d) <= res.value <= g.n
            assert verify(g, res.witness.labels).ok and res.witness.labels_used == res.value
            assert exhausted(g, res.value - 1, True, True)
            if brute_aut_order(g) == 1:
                assert res.value == chi

    def test_budget_carries_bounds(self):
        g = fam("complete_bipartite", 4, 4)
        with pytest.raises(ExactBudgetExceeded) as ei:
            distinguishing_chromatic_number(g, node_cap=5, constructive_bound=False)
        assert ei.value.lower_bound >= 2 and ei.value.best.labels_used == 8

    def test_n_zero(self):
        with pytest.raises(ValueError):
            distinguishing_chromatic_number(Graph(0))


class TestScan:
    def test_named(self):
        rep = scan_conjecture(20, [fam("petersen"), fam("heawood"), cycle(5)])
        assert rep.checked == 2 and rep.counterexamples == [] and rep.skipped == []
        # C_5 has Δ = 2 and is filtered out
        assert [e["chid"] for e in rep.entries] == [4, 4]
        assert rep.lines()[-1].startswith("checked=2 counterexamples=0 skipped=0")

    def test_girth4_stream(self):
        rep = scan_conjecture(10, [fam("complete_bipartite", 3, 3), cycle(4)])
        assert rep.checked == 0 and rep.max_gap is None
        assert rep.to_json() == '{"checked": 0, "counterexamples": [], "skipped": []}'

    def test_skipped_on_budget(self):
        rep = scan_conjecture(20, [fam("petersen")], node_cap=3)
        assert rep.checked == 0 and len(rep.skipped) == 1
        assert "budget" in rep.skipped[0]["reason"]

    def test_workers_keep_order(self):
        from conftest import girth5_upto10
        graphs = girth5_upto10()[:80]
        a = scan_conjecture(10, graphs, workers=1)
        b = scan_conjecture(10, graphs, workers=2)
        assert a.entries == b.entries and a.lines() == b.lines()
