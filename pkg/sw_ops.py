"""
Fullab Stone-Wales Operations
Edge flips (pSW), classic SW sites, gSW path search and the gSW ladder rewrite
"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from errors import DegreeUnderflow, InvalidPath, MultiEdge, ValidationError
from graph_core import build
from models import DualFullerene, FlipSite, GswPath, RotationSystem

logger = logging.getLogger(__name__)


class MutableTriangulation:
    """Rotation lists that can be flipped in place; edges kept in stable slots"""

    def __init__(self, tri: RotationSystem):
        self.neighbors: List[List[int]] = [list(nbrs) for nbrs in tri.neighbors]
        self.edges: List[Tuple[int, int]] = tri.edges()
        self.slot = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.neighbors)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.slot

    def site(self, v1: int, v2: int) -> FlipSite:
        """Flip site of edge v1-v2: v3 left of v1->v2, v4 right"""
        nbrs = self.neighbors[v1]
        i = nbrs.index(v2)
        return FlipSite(v1, v2, nbrs[(i + 1) % len(nbrs)], nbrs[i - 1])

    def check(self, site: FlipSite) -> None:
        v1, v2, v3, v4 = site.as_tuple()
        if not self.has_edge(v1, v2) or self.site(v1, v2) != site:
            raise ValidationError(f"{site} is not a flip site of this triangulation")
        if v3 == v4 or self.has_edge(v3, v4):
            raise MultiEdge(f"edge {v3}-{v4} already exists", site=site.as_tuple())
        if self.degree(v1) < 4 or self.degree(v2) < 4:
            raise DegreeUnderflow(f"flip at {v1}-{v2} would drop a degree below 3",
                                  site=site.as_tuple())

    def flip(self, site: FlipSite) -> None:
        self.check(site)
        v1, v2, v3, v4 = site.as_tuple()
        self.neighbors[v1].remove(v2)
        self.neighbors[v2].remove(v1)
        r3 = self.neighbors[v3]
        r3.insert(r3.index(v1) + 1, v4)
        r4 = self.neighbors[v4]
        r4.insert(r4.index(v2) + 1, v3)

        slot = self.slot.pop((min(v1, v2), max(v1, v2)))
        new_edge = (min(v3, v4), max(v3, v4))
        self.edges[slot] = new_edge
        self.slot[new_edge] = slot

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.neighbors]

    def freeze(self) -> RotationSystem:
        return RotationSystem(self.neighbors)


def psw_flip(tri: RotationSystem, site: Union[FlipSite, Tuple[int, int]]) -> RotationSystem:
    """Replace edge v1-v2 by v3-v4; the result need not be a fullerene"""
    state = MutableTriangulation(tri)
    if not isinstance(site, FlipSite):
        site = state.site(*site)
    state.flip(site)
    return state.freeze()


def flip_site(tri: RotationSystem, v1: int, v2: int) -> FlipSite:
    return FlipSite(v1, v2, tri.succ(v1, v2), tri.pred(v1, v2))


def classic_sw_sites(g: DualFullerene) -> List[FlipSite]:
    """Edges between two degree-6 vertices whose opposite vertices both have degree 5"""
    sites = []
    for v1, v2 in g.edges():
        if g.degree(v1) != 6 or g.degree(v2) != 6:
            continue
        site = flip_site(g, v1, v2)
        if g.degree(site.v3) == 5 and g.degree(site.v4) == 5 and not g.has_edge(site.v3, site.v4):
            sites.append(site)
    return sites


# ============================================================================
# gSW paths
# ============================================================================

def _other_apex(g: RotationSystem, a: int, b: int, not_this: int) -> int:
    left, right = g.succ(a, b), g.pred(a, b)
    return right if left == not_this else left


def _iter_gsw_paths(g: RotationSystem, w_max: Optional[int] = None) -> Iterator[GswPath]:
    max_len = 2 * (w_max if w_max is not None else g.m // 2)
    for v1, v2 in g.darts():
        if g.degree(v1) != 5 or g.degree(v2) != 6:
            continue
        for v3 in (g.succ(v1, v2), g.pred(v1, v2)):
            path = [v1, v2, v3]
            seen = set(path)
            while len(path) < max_len:
                nxt = _other_apex(g, path[-2], path[-1], path[-3])
                if nxt in seen:
                    break
                path.append(nxt)
                seen.add(nxt)
                if len(path) % 2 == 0 and g.degree(path[-1]) == 5 and g.degree(path[-2]) == 6:
                    yield GswPath(path)


def find_gsw_paths(g: RotationSystem, w_max: Optional[int] = None,
                   unique_fragments: bool = False) -> List[GswPath]:
    """All gSW paths with w <= w_max (default m/2), in dart order.

    A path and its reversal are both reported unless unique_fragments is set.
    """
    paths = []
    fragments = set()
    for path in _iter_gsw_paths(g, w_max):
        if unique_fragments:
            key = min(path.vertices, tuple(reversed(path.vertices)))
            if key in fragments:
                continue
            fragments.add(key)
        paths.append(path)
    return paths


def has_gsw_path(g: RotationSystem) -> bool:
    return next(_iter_gsw_paths(g), None) is not None


def check_gsw_path(g: RotationSystem, path: GswPath) -> None:
    vs = path.vertices
    if len(set(vs)) != len(vs):
        raise InvalidPath(f"{path} repeats a vertex")
    if any(not 0 <= v < g.m for v in vs):
        raise InvalidPath(f"{path} names an unknown vertex")
    for i in range(len(vs) - 1):
        if not g.has_edge(vs[i], vs[i + 1]):
            raise InvalidPath(f"{vs[i]}-{vs[i + 1]} is not an edge")
    for i in range(len(vs) - 2):
        if not g.has_edge(vs[i], vs[i + 2]):
            raise InvalidPath(f"chord {vs[i]}-{vs[i + 2]} is missing")
    degrees = [g.degree(v) for v in (vs[0], vs[1], vs[-2], vs[-1])]
    if degrees != [5, 6, 6, 5]:
        raise InvalidPath(f"end degrees {degrees} are not (5, 6, ..., 6, 5)")


def apply_gsw(g: RotationSystem, path: Union[GswPath, Sequence[int]]) -> DualFullerene:
    """Slide the ladder: drop edges (v_2i, v_2i+1), add (v_2i-1, v_2i+2), i = 1..w-1"""
    if not isinstance(path, GswPath):
        try:
            path = GswPath(path)
        except ValueError as e:
            raise InvalidPath(str(e)) from e
    check_gsw_path(g, path)
    vs = path.vertices
    state = MutableTriangulation(g)
    for i in range(1, path.w):
        a, b = vs[2 * i - 1], vs[2 * i]
        site = state.site(a, b)
        if {site.v3, site.v4} != {vs[2 * i - 2], vs[2 * i + 1]}:
            raise InvalidPath(f"rung {a}-{b} is not flanked by {vs[2 * i - 2]} and {vs[2 * i + 1]}")
        try:
            state.flip(site)
        except ValidationError as e:
            raise InvalidPath(f"rung {a}-{b} cannot be flipped: {e}") from e
    try:
        return build(state.freeze())
    except ValidationError as e:
        raise InvalidPath(f"gSW rewrite did not give a fullerene: {e}") from e
