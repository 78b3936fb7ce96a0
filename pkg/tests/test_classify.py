import pytest

from raagme.errors import DomainError
from raagme.graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from raagme.presentation import GraphProductPresentation, clique_reduce, raag
from raagme.subgroups import star_gluing_kernel
from raagme.classify import (decide_me, decide_oe, invariant_report, rigidity_hypotheses,
                             ue_ball_fingerprint)


def ranks_31111(c5):
    return GraphProductPresentation(c5, {"v1": 3, "v2": 1, "v3": 1, "v4": 1, "v5": 1})


class TestInvariantReport:
    def test_c5(self, c5):
        rep = invariant_report(raag(c5), ball_bound=1)
        assert rep.out_finite
        assert not rep.nonabelian_untransvectable_class
        assert rep.all_untransvectable_strongly
        assert rep.untransvectable == tuple(c5.sorted_vertices())
        assert [L for L, _ in rep.ue_ball_fingerprints] == [0, 1]

    def test_counterexample(self, counterexample_graph):
        rep = invariant_report(raag(counterexample_graph), ball_bound=0)
        assert not rep.all_untransvectable_strongly

    def test_f3(self, f3_graph):
        rep = invariant_report(raag(f3_graph), ball_bound=0)
        assert rep.nonabelian_untransvectable_class
        assert not rep.out_finite

    def test_reduction_happens_first(self, c5):
        rep = invariant_report(ranks_31111(c5), ball_bound=0)
        assert rep.clique_reduced_form.graph == c5
        assert rep.out_finite  # of the reduced graph

    def test_fingerprints_are_iso_invariants(self, c5):
        other = cycle_graph(["a", "b", "c", "d", "e"])
        for L in (0, 1):
            assert ue_ball_fingerprint(c5, L) == ue_ball_fingerprint(other, L)
        assert ue_ball_fingerprint(c5, 0) != ue_ball_fingerprint(
            path_graph(["a", "b", "c", "d", "e"]), 0)


class TestRigidityHypotheses:
    def test_examples(self, c5, f3_graph, counterexample_graph):
        rep = rigidity_hypotheses(raag(c5))
        assert rep.both_hold
        rep = rigidity_hypotheses(raag(counterexample_graph))
        assert rep.no_nonabelian_untransvectable_class
        assert not rep.every_untransvectable_vertex_strong
        rep = rigidity_hypotheses(raag(f3_graph))
        assert not rep.no_nonabelian_untransvectable_class


class TestDecideOe:
    def test_rank_blowup_equivalent(self, c5):
        d = decide_oe(c5, ranks_31111(c5))
        assert d.verdict == "equivalent"
        assert d.witness and "isomorphism" in d.witness

    def test_identity(self, c5):
        assert decide_oe(c5, raag(c5)).verdict == "equivalent"

    def test_c6_not_equivalent(self, c5):
        d = decide_oe(c5, raag(cycle_graph(["a", "b", "c", "d", "e", "f"])))
        assert d.verdict == "not_equivalent"

    def test_infinite_out_hypothesis(self, p3, c5):
        with pytest.raises(DomainError, match="hypothesis"):
            decide_oe(p3, raag(c5))

    def test_trivial_groups(self, c5):
        empty = raag(SimpleGraph([]))
        assert decide_oe(SimpleGraph([]), empty).verdict == "equivalent"
        assert decide_oe(SimpleGraph([]), raag(c5)).verdict == "not_equivalent"
        assert decide_oe(c5, empty).verdict == "not_equivalent"

    def test_zn_all_equivalent_to_z(self):
        point = SimpleGraph(["z"])
        z3 = raag(complete_graph(["a", "b", "c"]))
        assert decide_oe(point, z3).verdict == "equivalent"

    def test_double_not_oe_but_me(self, c5):
        # index-2 subgroup: orbit inequivalent, measure equivalent
        double = raag(star_gluing_kernel(c5, "v1", 2))
        assert decide_oe(c5, double).verdict == "not_equivalent"
        m = decide_me(c5, double)
        assert m.verdict == "equivalent"
        assert m.witness["index"] == 2
        assert m.witness["chain"] == [{"vertex": "v1", "k": 2}]


class TestDecideMe:
    def test_rank_blowup_index_one(self, c5):
        m = decide_me(c5, GraphProductPresentation(
            c5, {"v1": 2, "v2": 1, "v3": 1, "v4": 1, "v5": 1}))
        assert m.verdict == "equivalent" and m.witness["index"] == 1

    def test_f3_separated_by_class_invariant(self, c5, f3_graph):
        m = decide_me(c5, raag(f3_graph))
        assert m.verdict == "not_equivalent"
        assert m.reason_code == "invariant-nonabelian-class"

    def test_counterexample_separated_by_strength(self, c5, counterexample_graph):
        m = decide_me(c5, raag(counterexample_graph))
        assert m.verdict == "not_equivalent"
        assert m.reason_code == "invariant-strong-untransvectability"

    def test_amenable_cases(self, c5):
        point = SimpleGraph(["z"])
        z3 = raag(complete_graph(["a", "b", "c"]))
        assert decide_me(point, z3).verdict == "equivalent"
        assert decide_me(point, raag(c5)).verdict == "not_equivalent"
        assert decide_me(c5, raag(SimpleGraph(["a"]))).verdict == "not_equivalent"
        assert decide_me(point, raag(SimpleGraph([]))).verdict == "not_equivalent"

    def test_unknown_with_budget(self, c5):
        # C6 passes both invariants but admits no witness: search exhausts
        c6 = raag(cycle_graph(["a", "b", "c", "d", "e", "f"]))
        m = decide_me(c5, c6, max_vertices=6, max_steps=2)
        assert m.verdict == "unknown"
        assert m.budget == {"max_vertices": 6, "max_steps": 2}
        assert m.witness["rigidity_hypotheses"]["both_hold"]

    def test_infinite_out_hypothesis(self, p3, c5):
        with pytest.raises(DomainError, match="hypothesis"):
            decide_me(p3, raag(c5))


class TestCrossConsistency:
    def test_oe_implies_me(self, c5):
        h = ranks_31111(c5)
        assert decide_oe(c5, h).verdict == "equivalent"
        assert decide_me(c5, h).verdict == "equivalent"

    def test_symmetric_at_index_one(self, c5):
        h = ranks_31111(c5)
        assert decide_oe(c5, h).verdict == "equivalent"
        lam = clique_reduce(h).graph
        assert decide_oe(lam, raag(c5)).verdict == "equivalent"
        assert decide_me(lam, raag(c5)).verdict == "equivalent"

    def test_unit_rank_relabelings_always_equivalent(self, atlas6):
        from raagme.combinatorics import has_finite_out
        for g in atlas6[4]:
            if not has_finite_out(g):
                continue
            mapping = {v: f"x{i}" for i, v in enumerate(g.sorted_vertices())}
            twin = SimpleGraph(sorted(mapping.values()),
                               [(mapping[u], mapping[w]) for u, w in g.edges()])
            assert decide_oe(g, raag(twin)).verdict == "equivalent"
