"""
Tests for facet tags, the two cut phases, triangle templates and the gSW-path conjecture check
"""

import pytest

from cut_partition import (
    PLAIN,
    THREE_FACET,
    TWO_FACET,
    CutGraph,
    classify_component,
    classify_facet_vertices,
    conjecture2_report,
    cut_partition,
    cut_phase1,
    cut_phase2,
    triangle_template,
)
from graph_core import from_triangles, subgraph
from models import RotationSystem, TriangleClass


def _label(kind, t, r=None, convention='ROWS'):
    return TriangleClass(kind, t, r, convention)


def _bowtie():
    # triangles (0, 1, 2) and (0, 3, 4) sharing only vertex 0
    rot = {0: [1, 2, 3, 4], 1: [2, 0], 2: [0, 1], 3: [4, 0], 4: [0, 3]}
    tri = {0: [True, False, True, False], 1: [True, False], 2: [True, False],
           3: [True, False], 4: [True, False]}
    return CutGraph(rot, tri)


def test_c60_hexagon_vertices_each_touch_three_holes(c60):
    view = subgraph(c60, 6)
    assert len(view) == 20
    assert set(classify_facet_vertices(view).values()) == {THREE_FACET}


def test_gsw_free_family_has_no_facet_vertices(gsw_free92):
    view = subgraph(gsw_free92, 6)
    assert set(classify_facet_vertices(view).values()) == {PLAIN}
    graph = CutGraph.from_view(view)
    assert cut_phase1(graph).rot == graph.rot


def test_bowtie_faces():
    graph = _bowtie()
    faces = graph.angle_faces()
    # both open angles of the centre sit on the single outer face
    assert faces[(0, 1)] == faces[(0, 3)]
    assert faces[(0, 0)] != faces[(0, 2)]


def test_phase1_splits_at_open_angles():
    graph = cut_phase1(_bowtie(), {0: TWO_FACET})
    assert graph.vertex_count() == 6
    assert graph.degree(0) == 2
    assert sorted(graph.rot[0]) == [3, 4]
    assert len(graph.components()) == 2
    assert graph.triangle_count() == 2


def test_phase2_is_identity_without_degree_five(c60):
    graph = CutGraph.from_view(subgraph(c60, 6))
    out, unresolved = cut_phase2(graph)
    assert out.rot == graph.rot
    assert unresolved == set()


def test_single_vertex_is_zero_triangle():
    label = classify_component(RotationSystem([()]))
    assert label == _label(TriangleClass.T_TRIANGLE, 0)


def test_small_triangle_patch_is_two_triangle():
    g = triangle_template(2)
    assert g.m == 6
    assert g.edge_count == 9
    assert classify_component(g, 'ROWS') == _label(TriangleClass.T_TRIANGLE, 2)


@pytest.mark.parametrize('t', range(9))
def test_plain_templates_classify_as_themselves(t):
    label = classify_component(triangle_template(t), 'ROWS')
    assert label == _label(TriangleClass.T_TRIANGLE, t)


def test_relabeled_template_is_recognised():
    g = triangle_template(4, (1, 1, 1))
    assert g.m == 12
    perm = list(reversed(range(g.m)))
    label = classify_component(g.relabel(perm), 'ROWS')
    assert label == _label(TriangleClass.TRUNCATED, 4, (1, 1, 1))
    assert str(label) == 'TRUNCATED(4,(1,1,1))'


def test_full_convention_corner_truncation():
    g = triangle_template(4, (1, 0, 0), 'FULL')
    assert g.m == 12
    label = classify_component(g, 'FULL')
    assert label == _label(TriangleClass.TRUNCATED, 4, (1, 0, 0), 'FULL')
    assert label.convention == 'FULL'


def test_non_triangular_pieces_are_other():
    strip = from_triangles(4, [(0, 1, 2), (0, 2, 3)], closed=False)
    assert classify_component(strip).kind == TriangleClass.OTHER
    star = RotationSystem([(1, 2, 3), (0,), (0,), (0,)])
    assert classify_component(star).kind == TriangleClass.OTHER


def test_gsw_free_family_partition(gsw_free92):
    partition = cut_partition(gsw_free92, 'ROWS')
    assert partition.unresolved == 0
    assert len(partition) == 4
    for comp, label in partition.components:
        assert comp.m == 12
        assert str(label) == 'TRUNCATED(4,(1,1,1))'
    assert partition.to_dict()['components'][0]['name'] == 'TRUNCATED(4,(1,1,1))'


def test_icosahedron_partition_is_empty(icosahedron):
    assert len(cut_partition(icosahedron)) == 0


def test_conjecture_check_on_known_cases(icosahedron, gsw_free92):
    assert conjecture2_report(icosahedron)['ROWS']['verdict'] == 'exceptional'
    report = conjecture2_report(gsw_free92, ['ROWS'])['ROWS']
    assert report['has_gsw'] is False
    assert report['all_triangular'] is True
    assert report['zero_only'] is False
    assert report['components'] == 4
    assert report['verdict'] == 'consistent'


def test_full_templates_admit_every_truncation_size():
    # three rows go at one corner and two at another, five in all on a side of five
    g = triangle_template(5, (2, 1, 0), 'FULL')
    assert g.m == 12
    assert classify_component(g, 'FULL') == _label(TriangleClass.TRUNCATED, 5, (2, 1, 0), 'FULL')


@pytest.mark.parametrize('n', [24, 26, 28, 30])
def test_conjecture_check_over_small_isomers(n, isomers):
    for g in isomers(n):
        report = conjecture2_report(g)
        assert all(entry['has_gsw'] for entry in report.values())
        assert any(entry['verdict'] == 'consistent' for entry in report.values())


def _cut_invariants(g):
    view = subgraph(g, 6)
    graph = CutGraph.from_view(view)
    tags = classify_facet_vertices(view)
    first = cut_phase1(graph, tags)
    assert first.triangle_count() == graph.triangle_count()
    assert first.degree_sum() == graph.degree_sum()
    split = [v for v, tag in tags.items() if tag != PLAIN] + \
        [v for v in first.rot if v not in graph.rot]
    for v in split:
        assert first.tri[v].count(False) == 1

    second, unresolved = cut_phase2(first)
    assert second.triangle_count() == first.triangle_count()
    assert unresolved == {v for v in second.rot if second.degree(v) == 5}
    return unresolved


def test_cut_phases_keep_triangles(isomers, c60, gsw_free92):
    graphs = [g for n in (24, 26, 28, 30) for g in isomers(n)] + [c60, gsw_free92]
    for g in graphs:
        assert _cut_invariants(g) == set()
