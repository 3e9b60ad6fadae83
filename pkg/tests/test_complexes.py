"""Core complex construction, spans, links, fullness, flagness, cycles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combcurv.complexes import (
    build_complex,
    canonical_cycle,
    chords,
    full_cycles,
    is_flag,
    is_full,
)
from combcurv.errors import (
    BoundExceeded,
    DimensionTooHigh,
    DuplicateVertexInSimplex,
    SimplexNotPresent,
)
from combcurv.generators import flag_completion

from conftest import gen
from oracles import naive_full_cycles


class TestBuildComplex:
    def test_single_tetrahedron_closure(self):
        X = build_complex([[0, 1, 2, 3]])
        assert X.counts() == (4, 6, 4, 1)

    def test_c4_has_no_triangles(self):
        X = build_complex([[0, 1], [1, 2], [2, 3], [3, 0]])
        assert X.counts() == (4, 4, 0, 0)

    def test_icosahedron_euler(self, icosa):
        v, e, f, t = icosa.counts()
        assert (v, e, f, t) == (12, 30, 20, 0)
        assert v - e + f == 2

    def test_vertex_count_is_max_id_plus_one(self):
        X = build_complex([[0, 7]])
        assert X.vertex_count == 8
        assert X.vertices == (0, 7)

    def test_oversized_simplex_rejected(self):
        with pytest.raises(DimensionTooHigh):
            build_complex([[0, 1, 2, 3, 4]])

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(DuplicateVertexInSimplex):
            build_complex([[0, 1, 1]])

    def test_downward_closure_invariant(self, gs2):
        for d in (1, 2, 3):
            for s in gs2.simplices(d):
                for k in range(len(s)):
                    assert gs2.has_simplex(s[:k] + s[k + 1:])

    def test_adjacency_matches_one_skeleton(self, octa):
        for (u, v) in octa.simplices(1):
            assert octa.adjacent(u, v) and octa.adjacent(v, u)
        assert not octa.adjacent(0, 5)


class TestLink:
    def test_tetrahedron_vertex_link_is_triangle(self, tetra):
        link, vmap = tetra.link((0,))
        assert link.counts() == (3, 3, 1, 0)
        assert vmap == [1, 2, 3]

    def test_icosahedron_vertex_link_is_full_5_cycle(self, icosa):
        for v in icosa.vertices:
            link, _ = icosa.link((v,))
            assert link.counts() == (5, 5, 0, 0)
            assert all(link.degree(u) == 2 for u in range(5))
            assert len(full_cycles(link, 5, 5)) == 1

    def test_bd4_edge_link_is_empty_3_cycle(self, bd4):
        link, vmap = bd4.link((0, 1))
        assert vmap == [2, 3, 4]
        assert link.counts() == (3, 3, 0, 0)

    def test_missing_simplex_raises(self, c4):
        with pytest.raises(SimplexNotPresent):
            c4.link((0, 2))

    def test_link_members_rejoin(self, gs2):
        # any link simplex joined with its base is a simplex of the complex
        for sigma in [(0,), (1,), tuple(sorted(next(iter(gs2.simplices(1)))))]:
            link, vmap = gs2.link(sigma)
            for d in range(3):
                for tau in link.simplices(d):
                    joined = tuple(vmap[u] for u in tau) + sigma
                    assert gs2.has_simplex(joined)


class TestIsFull:
    def test_whole_c4_is_full(self, c4):
        assert is_full(c4, [0, 1, 2, 3]).passed

    def test_octahedron_equator_is_full(self, octa):
        assert is_full(octa, [1, 2, 3, 4]).passed

    def test_icosahedron_chord_witnessed(self, icosa):
        # triangle (0, 5, 11) plus 4, a common neighbor of 5 and 11
        verdict = is_full(icosa, [0, 5, 4, 11])
        assert not verdict.passed
        assert verdict.witness["kind"] == "chord"
        u, v = verdict.witness["edge"]
        assert icosa.adjacent(u, v)

    def test_non_cycle_input_fails(self, c4):
        assert not is_full(c4, [0, 2, 1, 3]).passed


class TestIsFlag:
    def test_octahedron_is_flag(self, octa):
        assert is_flag(octa).passed

    def test_bd4_fails_with_k5_witness(self, bd4):
        verdict = is_flag(bd4)
        assert not verdict.passed
        assert verdict.witness["vertices"] == [0, 1, 2, 3, 4]

    def test_c4_is_flag(self, c4):
        assert is_flag(c4).passed

    def test_empty_triangle_witnessed(self):
        X = build_complex([[0, 1], [1, 2], [2, 0]])
        verdict = is_flag(X)
        assert not verdict.passed
        assert verdict.witness["vertices"] == [0, 1, 2]

    @given(n=st.integers(4, 10), p=st.floats(0.1, 0.6), seed=st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_flag_completion_of_k5_free_graph_is_flag(self, n, p, seed):
        X = gen("random_flag", n, p, seed)
        verdict = is_flag(X)
        if verdict.passed:
            return
        # the only permitted failure mode is a true 5-clique in the graph
        vs = verdict.witness["vertices"]
        assert len(vs) == 5
        assert all(X.adjacent(u, v) for u in vs for v in vs if u != v)


class TestFullCycles:
    def test_c4_single_cycle(self, c4):
        out = full_cycles(c4, 4, 4)
        assert [c.vertices for c in out] == [(0, 1, 2, 3)]

    def test_octahedron_equators(self, octa):
        out = full_cycles(octa, 4, 4)
        assert len(out) == 3

    def test_icosahedron_no_full_4_cycles(self, icosa):
        assert full_cycles(icosa, 4, 4) == []

    def test_icosahedron_full_5_cycles_are_links(self, icosa):
        assert len(full_cycles(icosa, 5, 5)) == 12

    def test_bound_exceeded(self, icosa):
        with pytest.raises(BoundExceeded):
            full_cycles(icosa, 4, 9)
        # explicit cap raise is allowed
        full_cycles(icosa, 4, 9, cap=9)

    def test_range_validation(self, c4):
        with pytest.raises(ValueError):
            full_cycles(c4, 3, 4)

    def test_against_naive_oracle_on_corpus(self, c4, c5, octa, icosa, torus66):
        for X in (c4, c5, octa, icosa, torus66, gen("tri_torus", 4, 5),
                  gen("geodesic_sphere", 2)):
            hi = min(7, X.vertex_count)
            mine = [c.vertices for c in full_cycles(X, 4, hi)]
            ref = naive_full_cycles(X, 4, hi)
            assert mine == ref, X.name

    @given(n=st.integers(4, 9), p=st.floats(0.2, 0.7), seed=st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_against_naive_oracle_random(self, n, p, seed):
        X = gen("random_flag", n, p, seed)
        mine = [c.vertices for c in full_cycles(X, 4, min(7, n))]
        assert mine == naive_full_cycles(X, 4, min(7, n))

    def test_reported_cycles_are_chordless(self, gs2):
        for cyc in full_cycles(gs2, 4, 6):
            assert cyc.is_full
            assert not chords(gs2, cyc.vertices)
            assert cyc.vertices == canonical_cycle(cyc.vertices)


class TestCanonicalCycle:
    def test_rotation_and_reflection_invariance(self):
        base = (2, 7, 3, 9, 5)
        for r in range(5):
            rotated = base[r:] + base[:r]
            assert canonical_cycle(rotated) == canonical_cycle(base)
            assert canonical_cycle(rotated[::-1]) == canonical_cycle(base)

    def test_minimality(self):
        assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
        assert canonical_cycle((5, 9, 3, 7, 2)) == (2, 5, 9, 3, 7)


class TestSpan:
    def test_span_of_equator_is_the_cycle(self, octa):
        sub = octa.span({1, 2, 3, 4})
        assert len(sub.simplices(1)) == 4
        assert len(sub.simplices(2)) == 0

    def test_span_keeps_ids(self, icosa):
        sub = icosa.span({0, 1, 5})
        assert sub.has_simplex((0, 1, 5))
        assert sub.vertex_count == icosa.vertex_count


def test_flag_completion_round_trip(octa, icosa):
    # rebuilding a flag complex from its own cliques is the identity
    for X in (octa, icosa):
        edges = sorted(X.simplices(1))
        rebuilt = flag_completion(X.vertex_count, edges)
        assert rebuilt == X


def test_complex_equality_and_pickle(octa):
    import pickle

    again = pickle.loads(pickle.dumps(octa))
    assert again == octa
    assert again.neighbors(0) == octa.neighbors(0)
