"""
Tests for edge flips, classic Stone-Wales sites and gSW paths
"""

import pytest

from constructions import bipyramid, nanotube_50
from errors import BadDegreeProfile, InvalidPath, MultiEdge
from graph_core import build, is_ipr, is_isomorphic
from models import GswPath
from sw_ops import (
    MutableTriangulation,
    apply_gsw,
    check_gsw_path,
    classic_sw_sites,
    find_gsw_paths,
    flip_site,
    has_gsw_path,
    psw_flip,
)


def test_flip_site_orientation(icosahedron):
    v2 = icosahedron.neighbors[0][0]
    site = flip_site(icosahedron, 0, v2)
    assert site == MutableTriangulation(icosahedron).site(0, v2)
    assert {site.v3, site.v4} == set(icosahedron.neighbors[0]) & set(icosahedron.neighbors[v2])


def test_flip_twice_restores_edges(c60):
    site = classic_sw_sites(c60)[0]
    flipped = psw_flip(c60, site)
    assert flipped.has_edge(site.v3, site.v4)
    assert not flipped.has_edge(site.v1, site.v2)
    restored = psw_flip(flipped, (site.v3, site.v4))
    assert restored.edge_set() == c60.edge_set()


def test_flip_keeps_stable_edge_slots(icosahedron):
    state = MutableTriangulation(icosahedron)
    v1, v2 = state.edges[7]
    site = state.site(v1, v2)
    state.flip(site)
    assert state.edges[7] == (min(site.v3, site.v4), max(site.v3, site.v4))
    assert len(state.edges) == 30
    assert sum(state.degrees()) == 60


def test_multi_edge_flip_is_rejected():
    tri = bipyramid(5)
    state = MutableTriangulation(tri)
    with pytest.raises(MultiEdge):
        state.check(state.site(0, 1))
    with pytest.raises(MultiEdge):
        psw_flip(tri, (0, 1))


def test_generic_flip_leaves_fullerene_space(icosahedron):
    flipped = psw_flip(icosahedron, (0, icosahedron.neighbors[0][0]))
    assert sorted(flipped.degrees()) == [4, 4] + [5] * 8 + [6, 6]
    with pytest.raises(BadDegreeProfile):
        build(flipped)


def test_classic_sites(icosahedron, c60):
    assert classic_sw_sites(icosahedron) == []
    sites = classic_sw_sites(c60)
    assert len(sites) == 30
    flipped = build(psw_flip(c60, sites[0]))
    assert flipped.n == 60
    assert not is_ipr(flipped)
    assert not is_isomorphic(flipped, c60)


def test_no_gsw_paths(icosahedron, gsw_free92):
    assert find_gsw_paths(icosahedron) == []
    assert not has_gsw_path(icosahedron)
    assert not has_gsw_path(gsw_free92)


def test_nanotube_has_gsw_path():
    assert has_gsw_path(nanotube_50(2))


def test_found_paths_pass_the_check(c60):
    paths = find_gsw_paths(c60, w_max=3)
    assert paths
    for path in paths:
        check_gsw_path(c60, path)
        assert path.w <= 3


def test_unique_fragments_drop_reversals(c60):
    every = find_gsw_paths(c60, w_max=2)
    unique = find_gsw_paths(c60, w_max=2, unique_fragments=True)
    assert len(unique) < len(every)
    keys = {min(p.vertices, tuple(reversed(p.vertices))) for p in every}
    assert len(unique) == len(keys)


def test_short_gsw_equals_classic_flip(c60):
    path = find_gsw_paths(c60, w_max=2)[0]
    vs = path.vertices
    assert path.w == 2
    assert apply_gsw(c60, path).edge_set() == psw_flip(c60, (vs[1], vs[2])).edge_set()


def test_gsw_is_self_inverse(isomers):
    for g in isomers(30):
        for path in find_gsw_paths(g, unique_fragments=True):
            out = apply_gsw(g, path)
            assert out.n == 30
            back = apply_gsw(out, path.reversed_pairs())
            assert back.edge_set() == g.edge_set()


@pytest.mark.parametrize('n', [24, 26, 28, 30])
def test_every_small_isomer_has_gsw_path(n, isomers):
    assert all(has_gsw_path(g) for g in isomers(n))


def test_invalid_paths(c60):
    with pytest.raises(InvalidPath):
        apply_gsw(c60, [0, 1, 2])
    path = find_gsw_paths(c60, w_max=2)[0]
    vs = path.vertices
    with pytest.raises(InvalidPath):
        check_gsw_path(c60, GswPath((vs[1], vs[0], vs[3], vs[2])))
    with pytest.raises(InvalidPath):
        check_gsw_path(c60, GswPath((vs[0], vs[1], vs[2], vs[2])))


@pytest.mark.slow
@pytest.mark.parametrize('n', [24, 26, 28, 30, 32])
def test_gsw_is_self_inverse_on_every_path(n, isomers):
    for g in isomers(n):
        for path in find_gsw_paths(g):
            out = apply_gsw(g, path)
            assert out.n == n
            assert apply_gsw(out, path.reversed_pairs()).edge_set() == g.edge_set()
