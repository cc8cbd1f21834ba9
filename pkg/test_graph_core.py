"""
Tests for rotation-system validation, faces, subgraphs, matrices and canonical codes
"""

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constructions import bipyramid, dodecahedron, goldberg, nanotube_50
from errors import BadDegreeProfile, N22Forbidden, NonTriangleFace, NotSphere, NotSymmetric
from graph_core import (
    adjacency_matrix,
    build,
    canonical_code,
    counts,
    degree_matrix,
    dual_of_primal,
    faces,
    from_triangles,
    is_ipr,
    is_isomorphic,
    matrices,
    primal,
    subgraph,
)
from models import DualFullerene, RotationSystem


def test_icosahedron_builds_as_c20(icosahedron):
    assert isinstance(icosahedron, DualFullerene)
    assert icosahedron.m == 12
    assert icosahedron.n == 20
    assert set(icosahedron.degrees()) == {5}
    assert counts(icosahedron) == {'V': 12, 'E': 30, 'F': 20, 'pentagons': 12, 'hexagons': 0}


def test_octahedron_has_wrong_degree_profile():
    with pytest.raises(BadDegreeProfile):
        build(bipyramid(6))


def test_thirteen_vertices_are_forbidden():
    with pytest.raises(N22Forbidden):
        build(bipyramid(13))


def test_one_sided_edge_is_rejected():
    with pytest.raises(NotSymmetric):
        build([[1, 2], [2], [0, 1]], strict=False)


def test_open_disk_is_not_a_sphere():
    with pytest.raises(NotSphere):
        from_triangles(3, [(0, 1, 2)])


def test_quadrilateral_face_is_rejected():
    # square with both sides as faces: two 4-gons
    square = RotationSystem([(1, 3), (2, 0), (3, 1), (0, 2)])
    with pytest.raises(NonTriangleFace):
        build(square, strict=False)


def test_faces_are_triangles_and_cover_darts(icosahedron, tube30):
    for g, expected in ((icosahedron, 20), (tube30, 30)):
        face_list = faces(g)
        assert len(face_list) == expected
        assert all(len(f) == 3 for f in face_list)
        assert sum(len(f) for f in face_list) == 2 * g.edge_count


def test_subgraphs_of_icosahedron(icosahedron):
    assert len(subgraph(icosahedron, 6)) == 0
    t5 = subgraph(icosahedron, 5)
    assert len(t5) == 12
    assert len(t5.edges()) == 30
    assert len(t5.triangle_faces()) == 20


def test_pentagon_subgraph_of_gsw_free_family(gsw_free92):
    components = subgraph(gsw_free92, 5).components()
    assert len(components) == 4
    assert all(len(c) == 3 for c in components)


def test_hexagon_subgraph_facets_of_gsw_free_family(gsw_free92):
    t6 = subgraph(gsw_free92, 6)
    assert len(t6) == 36
    assert len(t6.edges()) == 90
    assert Counter(len(f) for f in t6.faces()) == {3: 52, 6: 4}
    assert len(t6.triangle_faces()) == 52


def test_matrices_of_icosahedron(icosahedron):
    A = adjacency_matrix(icosahedron)
    D = degree_matrix(icosahedron)
    assert A.shape == (12, 12)
    assert np.array_equal(A, A.T)
    assert np.all(A.sum(axis=1) == 5)
    assert np.array_equal(D, 5 * np.eye(12))
    assert np.array_equal(matrices(icosahedron, 0, 1), D)
    assert np.allclose(matrices(icosahedron, -1, 1), D - A)


def test_view_matrices_use_view_degrees(gsw_free92):
    t5 = subgraph(gsw_free92, 5)
    D = matrices(t5, 0, 1)
    assert np.array_equal(D, 2 * np.eye(12))


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(12))))
def test_canonical_code_ignores_labels(perm):
    g = dodecahedron()
    assert canonical_code(g.relabel(perm)) == canonical_code(g)


@settings(max_examples=15, deadline=None)
@given(st.permutations(list(range(17))))
def test_relabeled_nanotube_is_isomorphic(perm):
    g = nanotube_50(1)
    assert is_isomorphic(g, g.relabel(perm))


def test_canonical_code_ignores_mirroring(tube30):
    assert canonical_code(tube30.mirror()) == canonical_code(tube30)


def test_isomorphism_checks(icosahedron):
    assert is_isomorphic(goldberg(1, 0), nanotube_50(0))
    assert not is_isomorphic(icosahedron, nanotube_50(1))


def test_two_c28_isomers_have_different_codes(isomers):
    a, b = isomers(28)
    assert canonical_code(a) != canonical_code(b)


def test_primal_of_icosahedron_is_dodecahedron(icosahedron):
    p = primal(icosahedron)
    assert p.m == 20
    assert set(p.degrees()) == {3}
    assert p.edge_count == 30
    assert Counter(len(f) for f in p.faces()) == {5: 12}


def test_primal_round_trip(c60):
    p = primal(c60)
    assert p.m == 60
    assert p.edge_count == 90
    assert is_isomorphic(dual_of_primal(p), c60)


def test_primal_round_trip_on_isomers(isomers, tube30):
    graphs = [g for n in (24, 26, 28, 30) for g in isomers(n)] + [tube30, goldberg(2, 0)]
    for g in graphs:
        p = primal(g)
        assert p.m == g.n
        assert set(p.degrees()) == {3}
        assert Counter(len(f) for f in p.faces()) == {5: 12, 6: g.m - 12}
        back = dual_of_primal(p)
        assert is_isomorphic(back, g)


def test_isolated_pentagon_rule(icosahedron, c60):
    assert not is_ipr(icosahedron)
    assert is_ipr(c60)
