"""Isomorphism decisions pinned against hand-built fixtures.

Witness soundness is re-checked here with an independent edge-by-edge
verifier rather than trusting the one inside the module.
"""

import pytest

from zdgraph.arithmetic import factor_integer, factor_polynomial
from zdgraph.compressed_graph import (
    CompressedGraph,
    Vertex,
    graph_from_factorization,
    signature,
)
from zdgraph.finite_ring import IntegersMod, oracle_compressed_graph
from zdgraph.isomorphism import (
    IsoReport,
    SearchBudgetExceeded,
    graphs_isomorphic,
    signature_sufficient,
)


def plain(labels, edges, loops=(), sizes=None, admit_loops=False):
    vs = tuple(
        Vertex(
            label=l,
            loop=l in loops,
            size=None if sizes is None else sizes[i],
        )
        for i, l in enumerate(labels)
    )
    return CompressedGraph(vertices=vs, edges=tuple(edges), loops_admitted=admit_loops or bool(loops))


def check_witness(g1, g2, pairs, respect_loops=True, respect_sizes=False):
    # independent re-verification of a returned pairing
    assert pairs is not None
    lab1 = {v.label: i for i, v in enumerate(g1.vertices)}
    lab2 = {v.label: i for i, v in enumerate(g2.vertices)}
    assert sorted(a for a, _ in pairs) == sorted(lab1)
    assert sorted(b for _, b in pairs) == sorted(lab2)
    m = {lab1[a]: lab2[b] for a, b in pairs}
    e1 = {frozenset(e) for e in g1.edges}
    e2 = {frozenset(e) for e in g2.edges}
    assert {frozenset((m[i], m[j])) for i, j in e1} == e2
    for a, b in pairs:
        v, w = g1.vertices[lab1[a]], g2.vertices[lab2[b]]
        if respect_loops:
            assert v.loop == w.loop
        if respect_sizes:
            assert v.size == w.size


CYCLE6 = plain("abcdef", [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
TRIANGLES = plain("abcdef", [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


class TestPrefilters:
    def test_vertex_count(self):
        r = graphs_isomorphic(plain("a", []), plain("ab", [(0, 1)]))
        assert r == IsoReport(False, None, "vertex count", 0)

    def test_degree_multiset(self):
        path3 = plain("abc", [(0, 1), (1, 2)])
        tri = plain("abc", [(0, 1), (0, 2), (1, 2)])
        r = graphs_isomorphic(path3, tri)
        assert not r.isomorphic and r.separating == "degree multiset"

    def test_loop_count(self):
        looped = plain("a", [], loops="a")
        bare = plain("a", [], admit_loops=True)
        r = graphs_isomorphic(looped, bare, respect_loops=True)
        assert not r.isomorphic and r.separating == "loop count"
        assert graphs_isomorphic(looped, bare, respect_loops=False).isomorphic

    def test_size_multiset(self):
        g1 = plain("ab", [(0, 1)], sizes=(2, 2))
        g2 = plain("ab", [(0, 1)], sizes=(2, 1))
        r = graphs_isomorphic(g1, g2, respect_sizes=True)
        assert not r.isomorphic and r.separating == "size multiset"
        assert graphs_isomorphic(g1, g2, respect_sizes=False).isomorphic

    def test_sizes_required_when_respected(self):
        with pytest.raises(ValueError):
            graphs_isomorphic(plain("a", []), plain("b", []), respect_sizes=True)


class TestSearch:
    def test_cycle_vs_triangles_needs_search(self):
        # same degrees everywhere, so only exhaustive search separates them
        r = graphs_isomorphic(CYCLE6, TRIANGLES)
        assert not r.isomorphic
        assert r.separating == "search exhaustion"
        assert r.nodes > 0

    def test_budget_raises(self):
        with pytest.raises(SearchBudgetExceeded):
            graphs_isomorphic(CYCLE6, TRIANGLES, budget=1)

    def test_relabeled_graph_found(self):
        g = graph_from_factorization(factor_integer(720), loops=True)
        renames = {v.label: f"v{i:02d}" for i, v in enumerate(reversed(g.vertices))}
        g2 = CompressedGraph(
            vertices=tuple(
                Vertex(label=renames[v.label], loop=v.loop) for v in g.vertices
            ),
            edges=g.edges,
            loops_admitted=True,
        )
        r = graphs_isomorphic(g, g2)
        assert r.isomorphic
        check_witness(g, g2, r.witness)

    def test_self_isomorphism_identity_witness(self):
        for g in (CYCLE6, TRIANGLES, graph_from_factorization(factor_integer(360), loops=True)):
            r = graphs_isomorphic(g, g)
            assert r.isomorphic
            assert r.witness == tuple(sorted((v.label, v.label) for v in g.vertices))

    def test_empty_graphs(self):
        r = graphs_isomorphic(plain("", []), plain("", []))
        assert r.isomorphic and r.witness == ()

    def test_loop_placement_not_just_count(self):
        # equal loop counts, but loops sit on different-degree vertices
        g1 = plain("abc", [(0, 1), (1, 2)], loops="b")
        g2 = plain("abc", [(0, 1), (1, 2)], loops="a")
        r = graphs_isomorphic(g1, g2, respect_loops=True)
        assert not r.isomorphic and r.separating == "search exhaustion"
        assert graphs_isomorphic(g1, g2, respect_loops=False).isomorphic

    def test_sizes_constrain_mapping(self):
        g1 = plain("abc", [(0, 1), (1, 2)], sizes=(5, 1, 5))
        g2 = plain("xyz", [(0, 1), (1, 2)], sizes=(5, 1, 5))
        r = graphs_isomorphic(g1, g2, respect_sizes=True)
        assert r.isomorphic
        check_witness(g1, g2, r.witness, respect_sizes=True)
        assert ("b", "y") in r.witness
        g3 = plain("xyz", [(0, 1), (1, 2)], sizes=(1, 5, 5))
        r3 = graphs_isomorphic(g1, g3, respect_sizes=True)
        assert not r3.isomorphic

    def test_symmetric(self):
        a = graphs_isomorphic(CYCLE6, TRIANGLES).isomorphic
        b = graphs_isomorphic(TRIANGLES, CYCLE6).isomorphic
        assert a == b == False  # noqa: E712


class TestRingFixtures:
    def test_z8_vs_z6_unlooped_isomorphic(self):
        g8 = oracle_compressed_graph(IntegersMod(8), loops=False)
        g6 = oracle_compressed_graph(IntegersMod(6), loops=False)
        r = graphs_isomorphic(g8, g6, respect_loops=False)
        assert r.isomorphic
        check_witness(g8, g6, r.witness, respect_loops=False)

    def test_z8_vs_z6_looped_separated(self):
        g8 = oracle_compressed_graph(IntegersMod(8), loops=True)
        g6 = oracle_compressed_graph(IntegersMod(6), loops=True)
        r = graphs_isomorphic(g8, g6, respect_loops=True)
        assert not r.isomorphic
        assert r.separating == "loop count"

    def test_transitive_on_cube_signature(self):
        gs = [
            graph_from_factorization(factor_integer(n), loops=True)
            for n in (8, 27, 125)
        ]
        r01 = graphs_isomorphic(gs[0], gs[1])
        r12 = graphs_isomorphic(gs[1], gs[2])
        r02 = graphs_isomorphic(gs[0], gs[2])
        assert r01.isomorphic and r12.isomorphic and r02.isomorphic


class TestSignatureSufficient:
    def test_mixed_backends(self):
        f72 = factor_integer(72)  # 2^3 * 3^2
        fpoly = factor_polynomial([0, 0, 0, 1, 0, 1], 2)  # x^3 (x+1)^2
        assert signature_sufficient(f72, fpoly)
        assert signature_sufficient(fpoly, f72)

    def test_twelve_vs_x2_x_plus_1(self):
        f12 = factor_integer(12)
        fpoly = factor_polynomial([0, 0, 1, 1], 2)  # x^2 (x+1) = x^3 + x^2
        assert signature_sufficient(f12, fpoly)
        g1 = graph_from_factorization(f12, loops=True)
        g2 = graph_from_factorization(fpoly, loops=True)
        assert graphs_isomorphic(g1, g2).isomorphic

    def test_eight_vs_six(self):
        assert not signature_sufficient(factor_integer(8), factor_integer(6))

    def test_sufficiency_implies_isomorphic_small(self):
        by_sig = {}
        for n in range(4, 61):
            f = factor_integer(n)
            by_sig.setdefault(signature(f), []).append(f)
        checked = 0
        for sig, facts in by_sig.items():
            if sig == (1,):
                continue
            base = graph_from_factorization(facts[0], loops=True)
            base_u = graph_from_factorization(facts[0], loops=False)
            for f in facts[1:]:
                assert graphs_isomorphic(
                    base, graph_from_factorization(f, loops=True)
                ).isomorphic, (facts[0], f)
                assert graphs_isomorphic(
                    base_u, graph_from_factorization(f, loops=False), respect_loops=False
                ).isomorphic
                checked += 1
        assert checked > 10
