from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ordcore import (
    MonotoneMap,
    decide_hyper_retraction,
    decide_retraction,
    find_nonsurjective_endomorphism,
    find_nonsurjective_hyper_endomorphism,
    is_ordered_hyperhom,
    new_graph,
    new_hypergraph,
)
from ordcore.gadgets import X13Formula, hypergraph_gadget
from ordcore.hypergraphs import HypergraphError, OrderedHypergraph

TRIPLE = new_hypergraph(3, 3, [(0, 1, 2)])


def all_hypergraphs(n, k):
    pool = list(combinations(range(n), k))
    for bits in range(1 << len(pool)):
        yield new_hypergraph(
            n, k, [pool[i] for i in range(len(pool)) if bits >> i & 1]
        )


@st.composite
def pair_hypergraph_and_graph(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pool = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return new_hypergraph(n, 2, edges), new_graph(n, edges)


class TestValidation:
    def test_vertex_count(self):
        with pytest.raises(HypergraphError):
            new_hypergraph(0, 3, [])

    def test_uniformity(self):
        with pytest.raises(HypergraphError):
            new_hypergraph(3, 1, [])

    def test_repeated_vertex(self):
        with pytest.raises(HypergraphError):
            new_hypergraph(3, 3, [(0, 1, 1)])

    def test_out_of_range(self):
        with pytest.raises(HypergraphError):
            new_hypergraph(3, 3, [(0, 1, 3)])

    def test_unsorted_rejected_by_constructor(self):
        with pytest.raises(HypergraphError):
            OrderedHypergraph(3, 3, frozenset({(2, 1, 0)}))

    def test_connectivity(self):
        joined = new_hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
        split = new_hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)])
        assert joined.is_connected()
        assert not split.is_connected()


class TestHyperhomCheck:
    def test_identity(self):
        assert is_ordered_hyperhom(TRIPLE, TRIPLE, MonotoneMap((0, 1, 2)))

    def test_constant_shrinks_edge(self):
        assert not is_ordered_hyperhom(TRIPLE, TRIPLE, MonotoneMap((0, 0, 0)))

    def test_dynamic_triple_sits_over_a_static_one(self):
        phi = X13Formula(3, ((0, 1, 2),))
        hg, lay = hypergraph_gadget(phi)
        dynamic = tuple(sorted(lay.third(x) for x in (0, 1, 2)))
        assert dynamic in hg.hyperedges
        # the static triple marking variable 0 true pairs its second vertex
        # with the other variables' fourth vertices
        static = tuple(
            sorted((lay.second(0), lay.fourth(1), lay.fourth(2)))
        )
        assert static in hg.hyperedges

    def test_uniformity_mismatch(self):
        with pytest.raises(HypergraphError):
            is_ordered_hyperhom(
                TRIPLE, new_hypergraph(2, 2, [(0, 1)]), MonotoneMap((0, 0, 1))
            )

    def test_length_mismatch(self):
        with pytest.raises(HypergraphError):
            is_ordered_hyperhom(TRIPLE, TRIPLE, MonotoneMap((0, 1)))

    def test_target_out_of_range(self):
        with pytest.raises(HypergraphError):
            is_ordered_hyperhom(TRIPLE, TRIPLE, MonotoneMap((0, 1, 5)))


class TestEndomorphismSearch:
    def test_single_triple_is_core(self):
        assert find_nonsurjective_hyper_endomorphism(TRIPLE) is None

    def test_satisfiable_gadget_collapses(self):
        phi = X13Formula(3, ((0, 1, 2),))
        hg, _ = hypergraph_gadget(phi)
        f = find_nonsurjective_hyper_endomorphism(hg)
        assert f is not None
        assert is_ordered_hyperhom(hg, hg, f)
        assert len(set(f.image)) < hg.n

    def test_unsatisfiable_gadget_is_core(self):
        phi = X13Formula(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
        hg, _ = hypergraph_gadget(phi)
        assert find_nonsurjective_hyper_endomorphism(hg) is None

    def test_agrees_with_oracle(self):
        for n in (3, 4, 5):
            for hg in all_hypergraphs(n, 3):
                want = oracles.hyper_nonsurjective_endo(hg)
                got = find_nonsurjective_hyper_endomorphism(hg)
                assert (got is None) == (want is None)
                if got is not None:
                    assert is_ordered_hyperhom(hg, hg, got)


class TestHyperRetraction:
    def test_full_x_identity(self):
        f = decide_hyper_retraction(TRIPLE, [0, 1, 2])
        assert f.is_identity()

    def test_two_vertex_target_fails(self):
        assert decide_hyper_retraction(TRIPLE, [0, 1]) is None

    def test_empty_x(self):
        with pytest.raises(HypergraphError):
            decide_hyper_retraction(TRIPLE, [])

    def test_out_of_range(self):
        with pytest.raises(HypergraphError):
            decide_hyper_retraction(TRIPLE, [3])

    def test_gadget_minus_thirds_iff_satisfiable(self):
        sat = X13Formula(3, ((0, 1, 2),))
        unsat = X13Formula(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
        for phi in (sat, unsat):
            hg, lay = hypergraph_gadget(phi)
            thirds = {lay.third(x) for x in range(phi.var_count)}
            keep = [v for v in range(hg.n) if v not in thirds]
            f = decide_hyper_retraction(hg, keep)
            want = oracles.hyper_retract(hg, keep)
            assert (f is None) == (want is None)
            if f is not None:
                assert is_ordered_hyperhom(hg, hg, f)
                assert all(f(v) == v for v in keep)

    def test_agrees_with_oracle(self):
        for n in (3, 4):
            for hg in all_hypergraphs(n, 3):
                for size in range(1, n):
                    for x in combinations(range(n), size):
                        want = oracles.hyper_retract(hg, x)
                        got = decide_hyper_retraction(hg, x)
                        assert (got is None) == (want is None)
                        if got is not None:
                            assert is_ordered_hyperhom(hg, hg, got)
                            assert all(got(v) == v for v in x)


class TestPairUniformityMatchesGraphs:
    def test_endomorphism_agreement_exhaustive(self):
        for n in range(2, 5):
            for edges in oracles.all_graphs(n):
                g = new_graph(n, edges)
                hg = new_hypergraph(n, 2, edges)
                ge = find_nonsurjective_endomorphism(g)
                he = find_nonsurjective_hyper_endomorphism(hg)
                assert (ge is None) == (he is None)
                if ge is not None:
                    assert ge.image == he.image

    def test_retraction_agreement_exhaustive(self):
        for n in range(2, 5):
            for edges in oracles.all_graphs(n):
                g = new_graph(n, edges)
                hg = new_hypergraph(n, 2, edges)
                for size in range(1, n):
                    for x in combinations(range(n), size):
                        a = decide_retraction(g, x)
                        b = decide_hyper_retraction(hg, x)
                        assert (a is None) == (b is None)

    @settings(max_examples=150, deadline=None)
    @given(pair_hypergraph_and_graph())
    def test_endomorphism_agreement_random(self, pair):
        hg, g = pair
        ge = find_nonsurjective_endomorphism(g)
        he = find_nonsurjective_hyper_endomorphism(hg)
        assert (ge is None) == (he is None)
        if ge is not None:
            assert ge.image == he.image
