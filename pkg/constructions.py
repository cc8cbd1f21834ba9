"""
Fullab Constructions
Named fullerene families: dodecahedron, (5,0)-nanotubes, Goldberg polyhedra,
the gSW-free family, lexicographic seeds, growth from C_36,1 and bipyramids
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from scipy.spatial import ConvexHull, cKDTree

from errors import GluingFailed, InfeasibleN, PatchAmbiguous, ValidationError
from graph_core import build, from_triangles
from models import DualFullerene, RotationSystem
from spiral import check_feasible, first_success

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]

CONVENTIONS = ('ROWS', 'FULL')


# ============================================================================
# Tubes, caps and bipyramids
# ============================================================================

def _tube_triangles(rings: int) -> Tuple[int, List[Triangle]]:
    """Apex, `rings` stacked 5-cycles with alternating offset, apex.

    Ring vertex (k, i) has id 1 + 5(k-1) + i; ring k+1 vertex i sits between
    ring k vertices i and i+1.
    """
    def ring(k: int, i: int) -> int:
        return 1 + 5 * (k - 1) + i % 5

    top, bottom = 0, 5 * rings + 1
    triangles = []
    for i in range(5):
        triangles.append((top, ring(1, i), ring(1, i + 1)))
        triangles.append((bottom, ring(rings, i + 1), ring(rings, i)))
        for k in range(1, rings):
            triangles.append((ring(k, i), ring(k + 1, i - 1), ring(k + 1, i)))
            triangles.append((ring(k, i), ring(k + 1, i), ring(k, i + 1)))
    return 5 * rings + 2, triangles


def dodecahedron() -> DualFullerene:
    """The icosahedron, dual of C_20"""
    m, triangles = _tube_triangles(2)
    return build(from_triangles(m, triangles))


def nanotube_50(r: int) -> DualFullerene:
    """(5,0)-nanotube: two six-pentagon caps joined by r belts of five hexagons.

    n = 20 + 10r; r = 0 gives the dodecahedron.
    """
    if r < 0:
        raise ValueError(f"belt count must be non-negative, got {r}")
    m, triangles = _tube_triangles(r + 2)
    return build(from_triangles(m, triangles))


def bipyramid(m: int) -> RotationSystem:
    """Dual of the (m-2)-gonal prism; seed of the flip chain"""
    if m < 5:
        raise ValueError(f"bipyramid needs m >= 5, got {m}")
    k = m - 2
    top, bottom = 0, k + 1
    triangles = []
    for i in range(k):
        a, b = 1 + i, 1 + (i + 1) % k
        triangles.append((top, a, b))
        triangles.append((bottom, b, a))
    return build(from_triangles(m, triangles), strict=False)


# ============================================================================
# Goldberg polyhedra
# ============================================================================

def _outward(points: np.ndarray, simplices: np.ndarray) -> List[Triangle]:
    triangles = []
    for a, b, c in simplices:
        normal = np.cross(points[b] - points[a], points[c] - points[a])
        if np.dot(normal, points[a] + points[b] + points[c]) < 0:
            b, c = c, b
        triangles.append((int(a), int(b), int(c)))
    return triangles


def _icosahedron_points() -> Tuple[np.ndarray, List[Triangle]]:
    phi = (1 + np.sqrt(5)) / 2
    points = []
    for s1, s2 in product((1, -1), repeat=2):
        points.extend([(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)])
    points = np.array(points, dtype=float)
    return points, _outward(points, ConvexHull(points).simplices)


def goldberg(p: int, q: int = 0) -> DualFullerene:
    """Goldberg-Coxeter subdivision of the icosahedron, n = 20((p+q)^2 - pq).

    Lattice points of the triangle (0, p e1 + q e2, -q e1 + (p+q) e2) are
    mapped onto each icosahedral face, projected to the unit sphere, merged,
    and triangulated as their convex hull.
    """
    if q > p:
        p, q = q, p
    if q < 0 or p + q < 1:
        raise ValueError(f"goldberg needs p >= q >= 0 and p + q >= 1, got ({p}, {q})")

    corners, faces3d = _icosahedron_points()
    e1 = np.array([1.0, 0.0])
    e2 = np.array([0.5, np.sqrt(3) / 2])
    A, B, C = np.zeros(2), p * e1 + q * e2, -q * e1 + (p + q) * e2
    T = np.column_stack([B - A, C - A])
    T_inv = np.linalg.inv(T)

    weights = []
    span = p + q
    for i in range(-span, span + 1):
        for j in range(0, span + 1):
            lb, lc = T_inv @ (i * e1 + j * e2)
            la = 1 - lb - lc
            if min(la, lb, lc) >= -1e-9:
                weights.append((la, lb, lc))

    W = np.array(weights)
    candidates = np.concatenate([W @ corners[list(face)] for face in faces3d])
    candidates /= np.linalg.norm(candidates, axis=1)[:, None]
    # points shared by neighbouring faces coincide up to rounding
    groups = cKDTree(candidates).query_ball_point(candidates, r=1e-7)
    points = [candidates[i] for i, group in enumerate(groups) if min(group) == i]

    expected = 10 * (p * p + p * q + q * q) + 2
    if len(points) != expected:
        raise ValidationError(f"goldberg({p},{q}) produced {len(points)} points, expected {expected}")
    points = np.array(points)
    triangles = _outward(points, ConvexHull(points).simplices)
    logger.debug(f"goldberg({p},{q}): {len(points)} dual vertices")
    return build(from_triangles(len(points), triangles))


# ============================================================================
# gSW-free family
# ============================================================================

TETRAHEDRON = ((0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2))


def grid_triangles(side: int) -> List[Tuple[Tuple[int, int, int], ...]]:
    """Small triangles of a side-`side` triangular grid in barycentric coordinates"""
    triangles = []
    for c in simplex_points(side - 1):
        triangles.append(tuple(_shift(c, i) for i in range(3)))
    for d in simplex_points(side - 2):
        s = tuple(x + 1 for x in d)
        triangles.append(tuple(_shift(s, i, -1) for i in range(3)))
    return triangles


def simplex_points(total: int) -> List[Tuple[int, int, int]]:
    if total < 0:
        return []
    return [(a, b, total - a - b) for a in range(total + 1) for b in range(total + 1 - a)]


def _shift(point: Sequence[int], i: int, delta: int = 1) -> Tuple[int, int, int]:
    out = list(point)
    out[i] += delta
    return tuple(out)


def gsw_free_family(t: int, convention: str = 'ROWS') -> DualFullerene:
    """Four corner-truncated 2t-triangles glued along their cut edges.

    The pieces sit at the corners of a tetrahedron; each of the four holes
    left at the tetrahedron's faces is a hexagon closed by a pentagon triple.
    n = 4(t^2 + 6t + 7) and no gSW path exists.
    """
    if t < 2:
        raise ValueError(f"gSW-free family needs t >= 2, got {t}")
    convention = convention.upper()
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown truncation convention: {convention}")
    side = 2 * t
    keep_max = t + 1 if convention == 'ROWS' else t
    cut_len = side - keep_max

    tetra = from_triangles(4, TETRAHEDRON)
    kept = [p for p in simplex_points(side) if max(p) <= keep_max]
    uf = DisjointSet((v, point) for v in range(4) for point in kept)

    # cut side i of piece v faces tetra neighbour u_i; it is glued reversed to u's side toward v
    for v in range(4):
        for i, u in enumerate(tetra.neighbors[v]):
            if u < v:
                continue
            j = tetra.neighbors[u].index(v)
            for s in range(cut_len + 1):
                mine = [0, 0, 0]
                mine[i], mine[(i + 2) % 3], mine[(i + 1) % 3] = keep_max, s, cut_len - s
                theirs = [0, 0, 0]
                theirs[j], theirs[(j + 2) % 3], theirs[(j + 1) % 3] = (
                    keep_max, cut_len - s, s)
                uf.merge((v, tuple(mine)), (u, tuple(theirs)))

    ids: Dict = {}
    for v in range(4):
        for point in kept:
            root = uf[(v, point)]
            if root not in ids:
                ids[root] = len(ids)

    def vid(v: int, point: Sequence[int]) -> int:
        return ids[uf[(v, tuple(point))]]

    triangles: List[Triangle] = []
    for v in range(4):
        for tri in grid_triangles(side):
            if all(max(p) <= keep_max for p in tri):
                triangles.append(tuple(vid(v, p) for p in tri))
    hex_vertices = len(ids)

    for face in TETRAHEDRON:
        hole = _hole_cycle(face, tetra, keep_max, side, vid)
        if len(hole) != 6:
            raise GluingFailed(
                f"{convention} convention leaves a {len(hole)}-gon hole, not a hexagon",
                convention=convention, t=t)
        p0, p1, p2 = len(ids), len(ids) + 1, len(ids) + 2
        ids[('pentagon', face, 0)] = p0
        ids[('pentagon', face, 1)] = p1
        ids[('pentagon', face, 2)] = p2
        h0, h1, h2, h3, h4, h5 = hole
        triangles.extend([
            (h1, h2, p0), (h2, h3, p0), (p0, h3, p1), (h3, h4, p1), (h4, h5, p1),
            (p1, h5, p2), (h5, h0, p2), (h0, h1, p2), (p2, h1, p0), (p0, p1, p2),
        ])

    logger.debug(f"gsw_free_family({t}, {convention}): {hex_vertices} hexagonal vertices")
    try:
        return build(from_triangles(len(ids), triangles))
    except ValidationError as e:
        raise GluingFailed(f"{convention} gluing is not a fullerene: {e}",
                           convention=convention, t=t) from e


def _hole_cycle(face: Sequence[int], tetra: RotationSystem, keep_max: int, side: int,
                vid) -> List[int]:
    """Boundary of the hole at a tetrahedron face, hole on the left"""
    segments = []
    for v in face:
        nbrs = tetra.neighbors[v]
        others = [w for w in face if w != v]
        # corners K_i, K_{i+1} face the two other pieces of this face, in link order
        i = next(k for k in range(3)
                 if nbrs[k] in others and nbrs[(k + 1) % 3] in others)
        k = (i + 2) % 3
        segment = []
        for ci1 in range(keep_max, side - keep_max - 1, -1):
            point = [0, 0, 0]
            point[(i + 1) % 3], point[i], point[k] = ci1, side - ci1, 0
            segment.append(vid(v, point))
        segments.append(segment)

    cycle = list(segments.pop(0))
    while segments:
        nxt = next((s for s in segments if s[0] == cycle[-1]), None)
        if nxt is None:
            return []
        segments.remove(nxt)
        cycle.extend(nxt[1:])
    if cycle[0] == cycle[-1]:
        cycle.pop()
    return cycle


# ============================================================================
# Seeds
# ============================================================================

def seed_for(n: int, budget: Optional[int] = None) -> DualFullerene:
    """C_{n,1}: the first pentagon vector in lexicographic order that winds up.

    If the lexicographic search runs out of budget, falls back to the (5,0)-nanotube
    for n = 20 + 10r, then to growth from C_36,1.
    """
    check_feasible(n)
    if n == 22:
        raise InfeasibleN("no fullerene has 22 vertices", n=n)
    g = first_success(n, budget)
    if g is not None:
        return g
    if (n - 20) % 10 == 0:
        logger.warning(f"Seed search for n={n} fell back to the (5,0)-nanotube")
        return nanotube_50((n - 20) // 10)
    if n >= 38:
        logger.warning(f"Seed search for n={n} fell back to growth from C_36,1")
        return grow_from_c36((n - 36) // 2)
    raise InfeasibleN(f"no seed found for n={n}", n=n)


GROWTH_LABELS = (1, 2, 2, 2, 2, 3)


class SeedGrower:
    """Repeatedly enlarges a fullerene by one hexagon around a fixed growth cap.

    The cap is the smaller side of a chordless separating 6-cycle whose labels
    6 - (degree towards the larger side) read (1,2,2,2,2,3). Each step attaches a
    new vertex to c5, c0, c1 and slides the cap one position along the cycle,
    which leaves the labels unchanged.
    """

    def __init__(self, graph: DualFullerene):
        self.graph = graph
        found = _find_growth_cycle(graph)
        if found is None:
            raise PatchAmbiguous("no chordless 6-cycle with labels (1,2,2,2,2,3)")
        self.cycle, self.inner, self.inner_left = found

    def labels(self) -> Tuple[int, ...]:
        return _cycle_labels(self.graph, self.cycle, self.inner)

    def step(self) -> DualFullerene:
        g = self.graph
        c = self.cycle
        x = g.m
        mapping = {c[k]: k for k in range(6)}
        new_cycle = list(c[1:]) + [x]

        triangles = []
        for face in g.faces():
            if any(v in self.inner for v in face):
                face = tuple(new_cycle[mapping[v]] if v in mapping else v for v in face)
            triangles.append(face)
        if self.inner_left:
            triangles.extend([(c[0], c[1], x), (c[5], c[0], x)])
        else:
            triangles.extend([(c[1], c[0], x), (c[0], c[5], x)])

        try:
            grown = build(from_triangles(g.m + 1, triangles))
        except ValidationError as e:
            raise PatchAmbiguous(f"growth step produced an invalid graph: {e}") from e
        self.graph = grown
        self.cycle = tuple(new_cycle)
        if self.labels() != GROWTH_LABELS:
            raise PatchAmbiguous(f"growth labels drifted to {self.labels()}")
        return grown


def _chordless_six_cycles(g: RotationSystem) -> List[Tuple[int, ...]]:
    cycles = set()
    for cyc in nx.chordless_cycles(g.to_networkx(), length_bound=6):
        if len(cyc) != 6:
            continue
        k = cyc.index(min(cyc))
        forward = tuple(cyc[k:] + cyc[:k])
        cycles.add(min(forward, forward[:1] + forward[:0:-1]))
    return sorted(cycles)


def _sides(g: RotationSystem, cycle: Sequence[int]) -> List[List[int]]:
    G = g.to_networkx()
    G.remove_nodes_from(cycle)
    return sorted(sorted(comp) for comp in nx.connected_components(G))


def _cycle_labels(g: RotationSystem, cycle: Sequence[int], inner: frozenset) -> Tuple[int, ...]:
    return tuple(6 - sum(1 for u in g.neighbors[c] if u not in inner) for c in cycle)


def _find_growth_cycle(g: RotationSystem):
    for cyc in _chordless_six_cycles(g):
        sides = _sides(g, cyc)
        if len(sides) != 2:
            continue
        for side in sorted(sides, key=lambda s: (len(s), s[0])):
            inner = frozenset(side)
            for seq in _orientations(cyc):
                if _cycle_labels(g, seq, inner) == GROWTH_LABELS:
                    inner_left = g.pred(seq[1], seq[0]) in inner
                    return tuple(seq), inner, inner_left
    return None


def _orientations(cycle: Sequence[int]):
    forward = list(cycle)
    backward = list(reversed(cycle))
    for seq in (forward, backward):
        for k in range(len(seq)):
            yield seq[k:] + seq[:k]


def grow_from_c36(steps: int, seed: Optional[DualFullerene] = None) -> DualFullerene:
    """C_{36,1} enlarged by `steps` hexagons, n = 36 + 2 steps"""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    seed = seed if seed is not None else first_success(36, budget=float('inf'))
    grower = SeedGrower(seed)
    for _ in range(steps):
        grower.step()
    return grower.graph
