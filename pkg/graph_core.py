"""
Fullab Graph Core
Validation, facial structure, induced subgraphs, matrices and canonical codes
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from errors import (
    BadDegreeProfile,
    N22Forbidden,
    NonTriangleFace,
    NotSphere,
    NotSymmetric,
)
from models import (
    PENTAGONS,
    CanonicalCode,
    DualFullerene,
    RotationSystem,
    SubgraphView,
)

logger = logging.getLogger(__name__)

Graph = Union[RotationSystem, SubgraphView]


# ============================================================================
# Construction helpers
# ============================================================================

def from_triangles(m: int, triangles: Iterable[Sequence[int]],
                   closed: bool = True) -> RotationSystem:
    """Assemble a rotation system from counterclockwise triangles (u, v, w).

    Around u the neighbour v is followed by w. With closed=False the link of a
    vertex may be a path (disk boundary); its rotation then starts at the free end.
    """
    links: List[Dict[int, int]] = [dict() for _ in range(m)]
    for u, v, w in triangles:
        for a, b, c in ((u, v, w), (v, w, u), (w, u, v)):
            if b in links[a]:
                raise NotSymmetric(f"dart {a}->{b} lies on two triangles",
                                   vertex=a)
            links[a][b] = c

    neighbors = []
    for v, link in enumerate(links):
        if not link:
            neighbors.append(())
            continue
        targets = set(link.values())
        free = [x for x in link if x not in targets]
        if free and closed:
            raise NotSphere(f"link of vertex {v} is not a cycle", vertex=v)
        if len(free) > 1:
            raise NotSphere(f"vertex {v} is a pinch point", vertex=v)
        start = free[0] if free else min(link)
        order = [start]
        x = link.get(start)
        while x is not None and x != start:
            order.append(x)
            if len(order) > len(link) + 1:
                raise NotSphere(f"link of vertex {v} is not simple", vertex=v)
            x = link.get(x)
        expected = len(link) + (1 if free else 0)
        if len(order) != expected:
            raise NotSphere(f"link of vertex {v} has several pieces", vertex=v)
        neighbors.append(tuple(order))
    return RotationSystem(neighbors)


# ============================================================================
# Validation
# ============================================================================

def _check_symmetric(neighbors: Sequence[Sequence[int]]) -> None:
    m = len(neighbors)
    for v, nbrs in enumerate(neighbors):
        if len(set(nbrs)) != len(nbrs):
            raise NotSymmetric(f"vertex {v} lists a neighbour twice", vertex=v)
        for u in nbrs:
            if not 0 <= u < m:
                raise NotSymmetric(f"vertex {v} lists unknown vertex {u}", vertex=v)
            if u == v:
                raise NotSymmetric(f"loop at vertex {v}", vertex=v)
            if v not in neighbors[u]:
                raise NotSymmetric(f"edge {v}-{u} is one-sided", vertex=v)


def _is_connected(rot: RotationSystem) -> bool:
    return rot.m > 0 and nx.is_connected(rot.to_networkx())


def validate_triangulation(rot: RotationSystem) -> Tuple[int, int, int]:
    """Check that rot is a simple sphere triangulation; return (V, E, F)"""
    _check_symmetric(rot.neighbors)
    if not _is_connected(rot):
        raise NotSphere("graph is disconnected")
    face_list = rot.faces()
    for face in face_list:
        if len(face) != 3:
            raise NonTriangleFace(f"face {face} has length {len(face)}", face=face)
    V, E, F = rot.m, rot.edge_count, len(face_list)
    if V - E + F != 2:
        raise NotSphere(f"Euler characteristic {V - E + F} != 2", V=V, E=E, F=F)
    return V, E, F


def check_degree_profile(rot: RotationSystem) -> None:
    counts = Counter(rot.degrees())
    if counts[5] != PENTAGONS or counts[5] + counts[6] != rot.m:
        raise BadDegreeProfile(
            f"degree profile {dict(sorted(counts.items()))} is not 12 x 5 plus 6s",
            profile=dict(counts))


def build(neighbor_lists: Union[RotationSystem, Sequence[Sequence[int]]],
          strict: bool = True) -> Union[DualFullerene, RotationSystem]:
    """Validate rotation lists and return a DualFullerene.

    With strict=False only the sphere-triangulation checks run and a plain
    RotationSystem is returned (flip-chain states, bipyramids).
    """
    neighbors = (neighbor_lists.neighbors if isinstance(neighbor_lists, RotationSystem)
                 else neighbor_lists)
    _check_symmetric(neighbors)
    if strict and len(neighbors) == 13:
        raise N22Forbidden("no fullerene has 22 vertices")
    rot = RotationSystem(neighbors)
    validate_triangulation(rot)
    if not strict:
        return rot
    check_degree_profile(rot)
    return DualFullerene(rot.neighbors)


# ============================================================================
# Faces, subgraphs and duality
# ============================================================================

def faces(g: RotationSystem) -> List[Tuple[int, ...]]:
    """Faces as vertex cycles; consecutive entries (cyclically) are the face's darts"""
    return g.faces()


def face_darts(face: Sequence[int]) -> List[Tuple[int, int]]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def subgraph(g: RotationSystem, degree: int) -> SubgraphView:
    """Induced subgraph on the vertices of the given degree (5 gives T^5, 6 gives T^6)"""
    return SubgraphView(g, [v for v in range(g.m) if g.degree(v) == degree])


def dual(rot: RotationSystem) -> RotationSystem:
    """Plane dual: one vertex per face, neighbours listed counterclockwise"""
    face_list = rot.faces()
    face_of = {}
    for f, face in enumerate(face_list):
        for dart in face_darts(face):
            face_of[dart] = f
    neighbors = []
    for face in face_list:
        neighbors.append(tuple(face_of[(b, a)] for a, b in face_darts(face)))
    return RotationSystem(neighbors)


def primal(g: DualFullerene) -> RotationSystem:
    """3-regular fullerene graph: n vertices, 3n/2 edges, 12 pentagons"""
    return dual(g)


def dual_of_primal(p: RotationSystem) -> DualFullerene:
    return build(dual(p))


def is_ipr(g: DualFullerene) -> bool:
    return g.is_ipr()


# ============================================================================
# Matrices
# ============================================================================

def _vertices_and_neighbors(g: Graph) -> Tuple[Sequence[int], Dict[int, Sequence[int]]]:
    if isinstance(g, SubgraphView):
        return g.vertices, g.neighbors
    return range(g.m), dict(enumerate(g.neighbors))


def adjacency_matrix(g: Graph) -> np.ndarray:
    vertices, nbrs = _vertices_and_neighbors(g)
    index = {v: i for i, v in enumerate(vertices)}
    A = np.zeros((len(index), len(index)))
    for v in vertices:
        for u in nbrs[v]:
            A[index[v], index[u]] = 1.0
    return A


def degree_matrix(g: Graph) -> np.ndarray:
    vertices, nbrs = _vertices_and_neighbors(g)
    return np.diag([float(len(nbrs[v])) for v in vertices])


def matrices(g: Graph, alpha: float = 1.0, beta: float = 0.0) -> np.ndarray:
    """alpha*A + beta*D using the graph's own degrees (views use in-view degrees).

    (1, 0) gives A, (0, 1) gives D and (-1, 1) the Laplacian.
    """
    A = adjacency_matrix(g)
    return alpha * A + beta * np.diag(A.sum(axis=1))


# ============================================================================
# Canonical codes
# ============================================================================

def _bfs_code(rot: RotationSystem, u: int, v: int, sigma: int,
              bound: Optional[List[int]]) -> Optional[List[int]]:
    """BFS code from dart u->v in direction sigma; None if it exceeds bound"""
    neighbors = rot.neighbors
    label = {u: 1}
    parent = {u: v}
    order = [u]
    code = [rot.m]
    smaller = bound is None

    def emit(x: int) -> bool:
        nonlocal smaller
        if not smaller:
            b = bound[len(code)]
            if x > b:
                return False
            if x < b:
                smaller = True
        code.append(x)
        return True

    i = 0
    while i < len(order):
        x = order[i]
        nbrs = neighbors[x]
        d = len(nbrs)
        if not emit(d):
            return None
        start = nbrs.index(parent[x])
        for k in range(d):
            y = nbrs[(start + sigma * k) % d]
            if y not in label:
                label[y] = len(order) + 1
                parent[y] = x
                order.append(y)
            if not emit(label[y]):
                return None
        i += 1
    return code


@lru_cache(maxsize=4096)
def canonical_code(g: RotationSystem) -> CanonicalCode:
    """Lexicographically smallest BFS code over every dart and both orientations.

    Equal codes mean isomorphic embedded graphs up to reflection. The graph
    must be connected; edgeless graphs are coded by their vertex count.
    """
    if g.edge_count == 0:
        return (g.m,) + (0,) * g.m
    best = None
    for u, v in g.darts():
        for sigma in (1, -1):
            code = _bfs_code(g, u, v, sigma, best)
            if code is not None and (best is None or code < best):
                best = code
    return tuple(best)


def is_isomorphic(a: RotationSystem, b: RotationSystem) -> bool:
    if a.m != b.m or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)


def counts(g: RotationSystem) -> Dict[str, int]:
    """V, E, F and the degree-5 / degree-6 counts of a triangulation"""
    degs = Counter(g.degrees())
    return {
        'V': g.m,
        'E': g.edge_count,
        'F': len(g.faces()),
        'pentagons': degs[5],
        'hexagons': degs[6],
    }
