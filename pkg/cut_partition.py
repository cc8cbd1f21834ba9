"""
Fullab Cut Partition
Splits the hexagonal subgraph T^6 into pieces and labels them as t-triangles,
truncated triangles or other; checks the gSW-path conjecture on the result
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

import config
from constructions import CONVENTIONS, grid_triangles, simplex_points
from graph_core import canonical_code, from_triangles, subgraph
from models import CutPartition, RotationSystem, SubgraphView, TriangleClass
from sw_ops import has_gsw_path

logger = logging.getLogger(__name__)

PLAIN = 'plain'
TWO_FACET = 'two_facet'
THREE_FACET = 'three_facet'


class CutGraph:
    """Working copy of a T^6 view.

    rot[v] lists neighbours counterclockwise; tri[v][i] tells whether the angle
    between rot[v][i] and rot[v][i+1] is a triangle of the parent.
    """

    def __init__(self, rot: Dict[int, List[int]], tri: Dict[int, List[bool]]):
        self.rot = rot
        self.tri = tri
        self.next_id = max(rot, default=-1) + 1

    @classmethod
    def from_view(cls, view: SubgraphView) -> 'CutGraph':
        rot = {v: list(view.neighbors[v]) for v in view.vertices}
        tri = {v: [view.is_triangle_angle(v, i) for i in range(len(rot[v]))]
               for v in view.vertices}
        graph = cls(rot, tri)
        graph.next_id = max(graph.next_id, view.parent.m)
        return graph

    def copy(self) -> 'CutGraph':
        graph = CutGraph({v: list(r) for v, r in self.rot.items()},
                         {v: list(f) for v, f in self.tri.items()})
        graph.next_id = self.next_id
        return graph

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def vertex_count(self) -> int:
        return len(self.rot)

    def degree_sum(self) -> int:
        return sum(len(r) for r in self.rot.values())

    def triangle_count(self, vertices: Optional[Sequence[int]] = None) -> int:
        vertices = self.rot if vertices is None else vertices
        return sum(sum(self.tri[v]) for v in vertices) // 3

    def new_vertex(self, rot: List[int], tri: List[bool]) -> int:
        w = self.next_id
        self.next_id += 1
        self.rot[w] = rot
        self.tri[w] = tri
        return w

    def replace_neighbor(self, u: int, old: int, new: int) -> None:
        r = self.rot[u]
        r[r.index(old)] = new

    def pred(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[r.index(u) - 1]

    def angle_faces(self) -> Dict[Tuple[int, int], int]:
        """Face id of every angle (v, i); the angle lies on the face of dart v->rot[v][i]"""
        face_of: Dict[Tuple[int, int], int] = {}
        face_id = 0
        for v in sorted(self.rot):
            for a in self.rot[v]:
                if (v, a) in face_of:
                    continue
                x, y = v, a
                while (x, y) not in face_of:
                    face_of[(x, y)] = face_id
                    x, y = y, self.pred(y, x)
                face_id += 1
        return {(v, i): face_of[(v, a)] for v in self.rot for i, a in enumerate(self.rot[v])}

    def is_interior_edge(self, x: int, y: int) -> bool:
        i = self.rot[x].index(y)
        return self.tri[x][i] and self.tri[x][i - 1]

    def to_networkx(self, interior: bool = False) -> nx.Graph:
        """Undirected copy; with interior=True only edges between two triangles"""
        G = nx.Graph()
        G.add_nodes_from(self.rot)
        G.add_edges_from((v, u) for v, r in self.rot.items() for u in r
                         if not interior or self.is_interior_edge(v, u))
        return G

    def components(self) -> List[List[int]]:
        return sorted(sorted(comp) for comp in nx.connected_components(self.to_networkx()))

    def rotation_system(self, vertices: Sequence[int]) -> RotationSystem:
        index = {v: i for i, v in enumerate(vertices)}
        return RotationSystem([tuple(index[u] for u in self.rot[v]) for v in vertices])


# ============================================================================
# Facet vertices and phase 1
# ============================================================================

def _tags(graph: CutGraph) -> Dict[int, str]:
    faces = graph.angle_faces()
    tags = {}
    for v in graph.rot:
        big = {faces[(v, i)] for i, flag in enumerate(graph.tri[v]) if not flag}
        tags[v] = PLAIN if len(big) <= 1 else TWO_FACET if len(big) == 2 else THREE_FACET
    return tags


def classify_facet_vertices(view: SubgraphView) -> Dict[int, str]:
    """Tag every T^6 vertex by how many distinct non-triangular facets it bounds"""
    return _tags(CutGraph.from_view(view))


def _fans(graph: CutGraph, v: int) -> List[Tuple[List[int], List[bool]]]:
    """Split rot[v] at its non-triangular angles into maximal triangle fans"""
    rot, tri = graph.rot[v], graph.tri[v]
    d = len(rot)
    big = [i for i in range(d) if not tri[i]]
    fans = []
    for k, i in enumerate(big):
        j = big[(k + 1) % len(big)]
        length = (j - i) % d or d
        members = [rot[(i + 1 + s) % d] for s in range(length)]
        flags = [tri[(i + 1 + s) % d] for s in range(length - 1)] + [False]
        fans.append((members, flags))
    return fans


def cut_phase1(graph: CutGraph, tags: Optional[Dict[int, str]] = None) -> CutGraph:
    """Split each 2- and 3-facet vertex at its non-triangular angles.

    The largest fan (ties to the one holding the larger smallest id) stays with
    the vertex, every other fan moves to a fresh vertex.
    """
    graph = graph.copy()
    tags = _tags(graph) if tags is None else tags
    for v in sorted(tags):
        if tags[v] == PLAIN:
            continue
        fans = sorted(_fans(graph, v), key=lambda fan: (len(fan[0]), min(fan[0])))
        keep_rot, keep_tri = fans.pop()
        graph.rot[v], graph.tri[v] = keep_rot, keep_tri
        for members, flags in fans:
            w = graph.new_vertex(members, flags)
            for u in members:
                graph.replace_neighbor(u, v, w)
    return graph


# ============================================================================
# Phase 2
# ============================================================================

def _select_path(graph: CutGraph) -> Optional[List[int]]:
    """Shortest interior-edge path between two degree-5 vertices.

    Ties go to the smaller endpoint pair, then to the lexicographically
    smallest shortest path.
    """
    fives = sorted(v for v in graph.rot if graph.degree(v) == 5)
    G = graph.to_networkx(interior=True)
    best = None
    for s in fives:
        dist = nx.single_source_shortest_path_length(G, s)
        for t in fives:
            if t > s and t in dist:
                key = (dist[t], s, t)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    _, s, t = best
    to_t = nx.single_source_shortest_path_length(G, t)
    path = [s]
    while path[-1] != t:
        x = path[-1]
        path.append(min(y for y in G[x] if to_t.get(y) == to_t[x] - 1))
    return path


def _split_at_first_big(rot: List[int], tri: List[bool], start: int):
    """Rotate so rot starts at index start; cut after the first big angle.

    Returns (head fan, head flags, tail fan, tail flags) or None.
    """
    d = len(rot)
    order = [(start + s) % d for s in range(d)]
    for k, i in enumerate(order):
        if not tri[i]:
            head = [rot[j] for j in order[:k + 1]]
            head_tri = [tri[j] for j in order[:k]] + [False]
            tail = [rot[j] for j in order[k + 1:]]
            tail_tri = [tri[j] for j in order[k + 1:]]
            return head, head_tri, tail, tail_tri
    return None


def _cut_along(graph: CutGraph, path: List[int]) -> bool:
    """Duplicate the path; the right-hand side moves to the copies"""
    L = len(path) - 1
    copies = [graph.next_id + i for i in range(L + 1)]
    graph.next_id += L + 1
    new_rot: Dict[int, Tuple[List[int], List[bool]]] = {}
    moved: Dict[int, List[int]] = {}

    for i, x in enumerate(path):
        rot, tri = graph.rot[x], graph.tri[x]
        d = len(rot)
        if 0 < i < L:
            a, b = path[i - 1], path[i + 1]
            ia, ib = rot.index(a), rot.index(b)
            left = [(ib + s) % d for s in range((ia - ib) % d + 1)]
            right = [(ia + s) % d for s in range((ib - ia) % d + 1)]
            keep = ([rot[j] for j in left], [tri[j] for j in left[:-1]] + [False])
            copy_rot = [rot[j] for j in right]
            copy_tri = [tri[j] for j in right[:-1]] + [False]
            copy_rot[0], copy_rot[-1] = copies[i - 1], copies[i + 1]
        elif i == 0:
            split = _split_at_first_big(rot, tri, rot.index(path[1]))
            if split is None:
                return False
            head, head_tri, tail, tail_tri = split
            keep = (head, head_tri)
            copy_rot = tail + [copies[1]]
            copy_tri = tail_tri[:-1] + [tail_tri[-1], False] if tail else [False]
        else:
            ia = rot.index(path[i - 1])
            split = _split_at_first_big(rot, tri, ia)
            if split is None:
                return False
            head, head_tri, tail, tail_tri = split
            copy_rot = [copies[i - 1]] + head[1:]
            copy_tri = head_tri
            keep = (tail + [head[0]], tail_tri + [False]) if tail else ([head[0]], [False])
        new_rot[x] = keep
        new_rot[copies[i]] = (copy_rot, copy_tri)
        path_set = {path[i - 1] if i > 0 else None, path[i + 1] if i < L else None}
        moved[x] = [u for u in copy_rot if u not in copies and u not in path_set]

    for x, (rot, tri) in new_rot.items():
        graph.rot[x], graph.tri[x] = rot, tri
    for i, x in enumerate(path):
        for u in moved[x]:
            graph.replace_neighbor(u, x, copies[i])
    return True


def cut_phase2(graph: CutGraph, max_cuts: Optional[int] = None) -> Tuple[CutGraph, Set[int]]:
    """Cut along interior paths between degree-5 vertices until none remain.

    Returns the cut graph and the degree-5 vertices no qualifying path could reach.
    """
    graph = graph.copy()
    max_cuts = 4 * graph.vertex_count() + 4 if max_cuts is None else max_cuts
    for _ in range(max_cuts):
        path = _select_path(graph)
        if path is None:
            break
        if not _cut_along(graph, path):
            logger.warning(f"Path {path} has an endpoint without a non-triangular angle")
            break
    unresolved = {v for v in graph.rot if graph.degree(v) == 5}
    return graph, unresolved


# ============================================================================
# Triangle templates and classification
# ============================================================================

def _removed_rows(r: int, convention: str) -> int:
    if convention == 'ROWS':
        return r
    return r + 1 if r >= 1 else 0


def triangle_template(t: int, r: Tuple[int, int, int] = (0, 0, 0),
                      convention: str = 'ROWS') -> RotationSystem:
    """t-row triangular grid with r_i corner rows removed under the given convention"""
    if t == 0:
        return RotationSystem([()])
    rows = [_removed_rows(x, convention) for x in r]
    keep = [p for p in simplex_points(t) if all(p[i] <= t - rows[i] for i in range(3))]
    index = {p: i for i, p in enumerate(keep)}
    triangles = [tuple(index[p] for p in tri) for tri in grid_triangles(t)
                 if all(p in index for p in tri)]
    return from_triangles(len(keep), triangles, closed=False)


def _signature(g: RotationSystem) -> Tuple:
    return (g.m, g.edge_count, tuple(sorted(g.degrees())))


@lru_cache(maxsize=None)
def _templates(convention: str, max_t: int) -> Dict[Tuple, List[Tuple[TriangleClass, RotationSystem]]]:
    table: Dict[Tuple, List[Tuple[TriangleClass, RotationSystem]]] = {}
    for t in range(0, max_t + 1):
        g = triangle_template(t)
        table.setdefault(_signature(g), []).append(
            (TriangleClass(TriangleClass.T_TRIANGLE, t, convention=convention), g))
        for r1 in range(t):
            for r2 in range(r1 + 1):
                for r3 in range(r2 + 1):
                    if r1 == 0:
                        continue
                    if max(r1 + r2, r1 + r3, r2 + r3) > t - 1:
                        continue
                    g = triangle_template(t, (r1, r2, r3), convention)
                    # overlapping FULL corners can leave a bare line of vertices
                    if g.edge_count == 0 or not nx.is_connected(g.to_networkx()):
                        continue
                    label = TriangleClass(TriangleClass.TRUNCATED, t, (r1, r2, r3), convention)
                    table.setdefault(_signature(g), []).append((label, g))
    return table


def classify_component(comp: RotationSystem, convention: Optional[str] = None,
                       max_t: Optional[int] = None) -> TriangleClass:
    """Match a connected component against t-triangle and truncated templates"""
    convention = (convention or config.CONVENTION).upper()
    max_t = config.MAX_TEMPLATE_T if max_t is None else max_t
    if comp.m == 1 and comp.edge_count == 0:
        return TriangleClass(TriangleClass.T_TRIANGLE, 0, convention=convention)
    candidates = _templates(convention, max_t).get(_signature(comp), [])
    if candidates:
        code = canonical_code(comp)
        for label, template in candidates:
            if canonical_code(template) == code:
                return label
    return TriangleClass(TriangleClass.OTHER, convention=convention)


def cut_partition(g: RotationSystem, convention: Optional[str] = None) -> CutPartition:
    """Both cut phases on T^6, then one label per component"""
    convention = (convention or config.CONVENTION).upper()
    view = subgraph(g, 6)
    graph = CutGraph.from_view(view)
    tags = _tags(graph)
    graph = cut_phase1(graph, tags)
    graph, unresolved = cut_phase2(graph)

    components = []
    for comp in graph.components():
        rot = graph.rotation_system(comp)
        if unresolved.intersection(comp):
            label = TriangleClass(TriangleClass.OTHER, convention=convention)
        else:
            label = classify_component(rot, convention)
        components.append((rot, label))
    if unresolved:
        logger.info(f"{len(unresolved)} degree-5 vertices left without a cut path")
    return CutPartition(components, convention, unresolved=len(unresolved))


def conjecture2_report(g: RotationSystem,
                       conventions: Sequence[str] = CONVENTIONS) -> Dict[str, Dict]:
    """Per convention: does 'all pieces triangular (not only 0-triangles)' match 'no gSW path'?"""
    has_gsw = has_gsw_path(g)
    report = {}
    for convention in conventions:
        partition = cut_partition(g, convention)
        labels = partition.labels()
        all_triangular = partition.unresolved == 0 and all(lb.is_triangular for lb in labels)
        zero_only = all(lb.kind == TriangleClass.T_TRIANGLE and lb.t == 0 for lb in labels)
        if not labels:
            verdict = 'exceptional'
        elif (all_triangular and not zero_only) == (not has_gsw):
            verdict = 'consistent'
        else:
            verdict = 'inconsistent'
        report[convention] = {
            'has_gsw': has_gsw,
            'all_triangular': all_triangular,
            'zero_only': zero_only,
            'components': len(labels),
            'verdict': verdict,
        }
    return report
