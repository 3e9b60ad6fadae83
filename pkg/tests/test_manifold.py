"""3-manifold validation, vertex links, sphere conditions, dual cellulation,
cycle-filling checks, and the full pipeline."""

import pytest

from combcurv import build_complex
from combcurv.complexes import full_cycles
from combcurv.errors import LinkNotSphere, NoFillingPair, NotASphere, NotPure, PreconditionNotMet
from combcurv.manifold import (
    check_7cycle_fillings,
    check_sphere_cycle_lemma,
    check_wheel_in_link,
    edge_degrees,
    find_7cycle_filling,
    five_six_star_verdict,
    is_5_6_star_sphere,
    soccer_dual,
    validate_closed_3manifold,
    verify_theorem_b,
    vertex_link_sphere,
)

from conftest import gen


def flip_edge(Y, u, v):
    """Replace the two triangles over edge (u, v) by the opposite diagonal."""
    tris = [t for t in Y.simplices(2) if u in t and v in t]
    assert len(tris) == 2
    apexes = [next(x for x in t if x not in (u, v)) for t in tris]
    keep = [t for t in Y.maximal_simplices() if not (u in t and v in t and len(t) == 3)]
    keep.append((apexes[0], apexes[1], u))
    keep.append((apexes[0], apexes[1], v))
    return build_complex(keep)


class TestValidate:
    def test_boundary_4_simplex_is_a_closed_manifold(self, bd4):
        report = validate_closed_3manifold(bd4)
        assert report.is_closed_manifold
        assert set(report.edge_degrees.values()) == {3}
        assert not report.five_six_star.passed
        assert report.five_six_star.witness["degree"] == 3

    def test_two_glued_tetrahedra_fail(self):
        X = build_complex([[0, 1, 2, 3], [1, 2, 3, 4]])
        report = validate_closed_3manifold(X)
        assert not report.is_pseudomanifold.passed
        assert not report.is_closed_manifold

    def test_not_pure_raises(self, gs2):
        with pytest.raises(NotPure):
            validate_closed_3manifold(gs2)
        with pytest.raises(NotPure):
            validate_closed_3manifold(build_complex([[0, 1, 2, 3], [3, 4]]))

    def test_report_json(self, bd4):
        doc = validate_closed_3manifold(bd4).to_json()
        assert doc["status"] == "fail"
        assert doc["stages"]["pseudomanifold"]["status"] == "pass"
        assert doc["edge_degrees"]["0-1"] == 3


class TestVertexLinks:
    def test_bd4_links_are_tetrahedron_boundaries(self, bd4):
        for v in bd4.vertices:
            sphere, vmap = vertex_link_sphere(bd4, v)
            assert sphere.counts() == (4, 6, 4, 0)
            assert sphere.euler_characteristic() == 2
            assert all(sphere.degree(u) == 3 for u in range(4))

    def test_degree_transport(self, bd4):
        # link-vertex degree equals ambient edge degree, independently counted
        degrees = edge_degrees(bd4)
        for v in bd4.vertices:
            sphere, vmap = vertex_link_sphere(bd4, v)
            for i, u in enumerate(vmap):
                edge = tuple(sorted((v, u)))
                assert sphere.degree(i) == degrees[edge]

    def test_non_manifold_link_raises(self):
        X = build_complex([[0, 1, 2, 3], [1, 2, 3, 4]])
        with pytest.raises(LinkNotSphere):
            vertex_link_sphere(X, 0)


class TestSphereCondition:
    def test_icosahedron_fails_adjacent_low_degree(self, icosa):
        verdict = is_5_6_star_sphere(icosa)
        assert not verdict.passed
        assert verdict.witness["kind"] == "adjacent_low_degree"

    def test_octahedron_fails_degree(self, octa):
        verdict = is_5_6_star_sphere(octa)
        assert not verdict.passed
        assert verdict.witness["degree"] == 4

    def test_geodesic_spheres(self, gs2, gs3):
        for Y, expected6 in ((gs2, 30), (gs3, 80)):
            verdict = is_5_6_star_sphere(Y)
            assert verdict.passed
            assert verdict.stats["degree5"] == 12
            assert verdict.stats["degree6"] == expected6
        assert not is_5_6_star_sphere(gen("geodesic_sphere", 1)).passed

    def test_torus_is_not_a_sphere(self, torus66):
        with pytest.raises(NotASphere):
            is_5_6_star_sphere(torus66)


class TestSoccerDual:
    def test_gs2_counts(self, gs2):
        dual = soccer_dual(gs2)
        assert dual.pentagon_count == 12
        assert dual.hexagon_count == 30
        assert len(dual.dual_vertices) == 80
        assert len(dual.dual_edges) == 120

    def test_gs3_counts(self, gs3):
        dual = soccer_dual(gs3)
        assert (dual.pentagon_count, dual.hexagon_count) == (12, 80)

    def test_icosahedron_rejected(self, icosa):
        with pytest.raises(PreconditionNotMet):
            soccer_dual(icosa)

    def test_duality_round_trip(self, gs2):
        dual = soccer_dual(gs2)
        # each dual vertex is incident to exactly the three cells around it;
        # reassembling them recovers the sphere's face set
        rebuilt = {tuple(sorted(t)) for t in dual.dual_vertices}
        assert rebuilt == set(gs2.simplices(2))
        # cell gonality equals the number of faces around the cell
        for v, g in dual.cells:
            assert len(dual.cell_faces[v]) == g
        # each dual edge separates two distinct dual vertices
        for _edge, (a, b) in dual.dual_edges:
            assert a != b


class TestCycleLemma:
    def test_geodesic_spheres_pass(self, gs2, gs3):
        for Y in (gs2, gs3):
            verdict = check_sphere_cycle_lemma(Y)
            assert verdict.passed
            assert verdict.stats["filled"] > 0

    def test_no_full_4_cycles_is_part_of_the_check(self, gs2):
        assert full_cycles(gs2, 4, 4) == []

    def test_corrupted_sphere_rejected(self, gs2):
        flipped = flip_edge(gs2, *sorted(next(iter(gs2.simplices(1)))))
        with pytest.raises(PreconditionNotMet):
            check_sphere_cycle_lemma(flipped)


class TestSevenCycleFilling:
    def test_every_full_7_cycle_fills(self, gs2, gs3):
        for Y in (gs2, gs3):
            cycles = full_cycles(Y, 7, 7)
            assert cycles
            for cyc in cycles:
                pair = find_7cycle_filling(Y, cyc.vertices)
                assert Y.adjacent(pair.y, pair.z)
                rot = pair.cycle
                assert all(Y.adjacent(pair.y, rot[i]) for i in range(4))
                assert all(Y.adjacent(pair.z, rot[i]) for i in (3, 4, 5, 6, 0))

    def test_aggregate_checker(self, gs2):
        verdict = check_7cycle_fillings(gs2)
        assert verdict.passed
        assert verdict.stats["cycles"] == 60

    def test_no_filling_raises(self):
        # a bare 7-cycle complex is not a sphere; drive the searcher directly
        Y = gen("c_n", 7)
        with pytest.raises(NoFillingPair):
            find_7cycle_filling(Y, tuple(range(7)))

    def test_length_validation(self, gs2):
        with pytest.raises(ValueError):
            find_7cycle_filling(gs2, (0, 1, 2))


class TestWheelInLink:
    def test_bd4_rejected_by_precondition(self, bd4):
        with pytest.raises(PreconditionNotMet):
            check_wheel_in_link(bd4)

    def test_vacuous_on_wheelless_input(self):
        # isolated points: the degree census is empty, no wheels exist
        X = build_complex([[0], [1], [2]])
        verdict = check_wheel_in_link(X)
        assert verdict.passed
        assert verdict.stats["wheels"] == 0


class TestFiveSixStar:
    def test_zero_degree_edges_detected(self):
        verdict = five_six_star_verdict(gen("triangle"))
        assert not verdict.passed
        assert verdict.witness["kind"] == "edge_degree"

    def test_two_low_edges_in_one_triangle_detected(self):
        # degrees injected directly to drive the per-triangle rule
        X = gen("triangle")
        degrees = {(0, 1): 5, (0, 2): 5, (1, 2): 6}
        verdict = five_six_star_verdict(X, degrees)
        assert not verdict.passed
        assert verdict.witness["kind"] == "triangle_two_low_edges"
        assert verdict.witness["triangle"] == [0, 1, 2]

    def test_one_low_edge_per_triangle_is_allowed(self):
        X = gen("triangle")
        degrees = {(0, 1): 5, (0, 2): 6, (1, 2): 6}
        assert five_six_star_verdict(X, degrees).passed


class TestTheoremB:
    def test_bd4_fails_at_five_six_star(self, bd4):
        verdict = verify_theorem_b(bd4)
        assert not verdict.passed
        assert verdict.stats["stage"] == "five_six_star"

    def test_non_manifold_fails_at_validation(self):
        X = build_complex([[0, 1, 2, 3], [1, 2, 3, 4]])
        verdict = verify_theorem_b(X)
        assert not verdict.passed
        assert verdict.stats["stage"] == "validate"

    def test_non_pure_fails_at_validation(self, gs2):
        verdict = verify_theorem_b(gs2)
        assert not verdict.passed
        assert verdict.stats["stage"] == "validate"
