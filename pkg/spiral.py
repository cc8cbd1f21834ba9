"""
Fullab Spiral
Vertex spirals on dual fullerenes, windup, lexicographic isomer ordering and enumeration.

A dual vertex spiral is the same object as the face spiral of the primal fullerene:
the k-th dual vertex is the k-th face peeled off, and degree 5 marks a pentagon.
"""

import bisect
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import config
from errors import (
    BudgetExceeded,
    DegreeOverflow,
    InfeasibleN,
    NoSpiralExists,
    NotFound,
    SpiralStuck,
    ValidationError,
    WindupFailed,
)
from graph_core import build, canonical_code, from_triangles
from models import (
    PENTAGONS,
    DualFullerene,
    PentagonVector,
    RotationSystem,
    SpiralTrace,
    candidate_count,
)

logger = logging.getLogger(__name__)

# Known isomer counts (House of Graphs); 60 is the Buckminsterfullerene family
ISO_COUNTS: Dict[int, int] = {
    20: 1, 22: 0, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6,
    36: 15, 38: 17, 40: 40, 60: 1812,
}

# Asymptotic bounds of iso(n) / n^9; documentation constants only
ISO_LIMINF = 809 / (2 ** 15 * 3 ** 13 * 5 ** 2)
ZETA_9 = 1.0020083928260822
ISO_LIMSUP = ISO_LIMINF * ZETA_9


def check_feasible(n: int) -> int:
    """Return m = n/2 + 2 for an even n >= 20, else raise InfeasibleN"""
    if n < 20 or n % 2:
        raise InfeasibleN(f"n={n} must be an even integer >= 20", n=n)
    return n // 2 + 2


def acceptance_rate(n: int) -> Optional[float]:
    """iso(n) / C(n/2+2, 12) when iso(n) is known"""
    if n not in ISO_COUNTS:
        return None
    return ISO_COUNTS[n] / candidate_count(n)


# ============================================================================
# Unwinding
# ============================================================================

def _unwind(g: RotationSystem, v1: int, v2: int, sigma: int,
            bound: Optional[Sequence[int]] = None) -> Tuple[Optional[List[int]], Optional[List[int]]]:
    """Core tight-spiral walk.

    Returns (order, word); both are None when the walk gets stuck or its word
    exceeds bound.
    """
    m = g.m
    neighbors = g.neighbors
    position = {v1: 0, v2: 1}
    order = [v1, v2]
    word = [len(neighbors[v1]), len(neighbors[v2])]
    unvisited = [len(nbrs) for nbrs in neighbors]
    for x in (v1, v2):
        for y in neighbors[x]:
            unvisited[y] -= 1

    smaller = bound is None
    if not smaller:
        for i in (0, 1):
            if word[i] > bound[i]:
                return None, None
            if word[i] < bound[i]:
                smaller = True
                break

    open_i = 0
    while len(order) < m:
        while open_i < len(order) and unvisited[order[open_i]] == 0:
            open_i += 1
        if open_i == len(order):
            return None, None
        o, last = order[open_i], order[-1]
        if o == last or not g.has_edge(o, last):
            return None, None
        x = g.succ(o, last, sigma)
        if x in position:
            return None, None
        d = len(neighbors[x])
        if not smaller:
            b = bound[len(word)]
            if d > b:
                return None, None
            if d < b:
                smaller = True
        position[x] = len(order)
        order.append(x)
        word.append(d)
        for y in neighbors[x]:
            unvisited[y] -= 1
    return order, word


def unwind(g: RotationSystem, start: Tuple[int, int], sigma: int = 1) -> SpiralTrace:
    """Peel g from the directed edge start, turning in direction sigma"""
    v1, v2 = start
    order, word = _unwind(g, v1, v2, sigma)
    if order is None:
        raise SpiralStuck(f"spiral from {start} (sigma={sigma}) gets stuck",
                          start=start, sigma=sigma)
    return SpiralTrace(order, start, sigma, word)


def spiral_starts(g: RotationSystem):
    """All 6n start choices: every directed edge in both orientations"""
    for dart in g.darts():
        for sigma in (1, -1):
            yield dart, sigma


def canonical_spiral(g: RotationSystem) -> SpiralTrace:
    """Successful unwinding with the lexicographically smallest degree word"""
    best: Optional[SpiralTrace] = None
    for (u, v), sigma in spiral_starts(g):
        order, word = _unwind(g, u, v, sigma, best.word if best else None)
        if order is not None and (best is None or tuple(word) < best.word):
            best = SpiralTrace(order, (u, v), sigma, word)
    if best is None:
        raise NoSpiralExists("no unwinding of the graph succeeds", m=g.m)
    return best


def canonical_pentagon_vector(g: RotationSystem) -> PentagonVector:
    return canonical_spiral(g).pentagon_vector()


def is_canonical(g: RotationSystem, word: Sequence[int]) -> bool:
    """True if no complete unwinding of g yields a degree word below word"""
    word = tuple(word)
    for (u, v), sigma in spiral_starts(g):
        order, found = _unwind(g, u, v, sigma, word)
        if order is not None and tuple(found) < word:
            return False
    return True


def spiral_relabel(g: RotationSystem, trace: SpiralTrace) -> RotationSystem:
    """Relabel g so that vertex ids follow the spiral order"""
    perm = [0] * g.m
    for i, v in enumerate(trace.vertices):
        perm[v] = i
    relabeled = g.relabel(perm)
    return relabeled if trace.sigma == 1 else relabeled.mirror()


# ============================================================================
# Windup
# ============================================================================

def _windup_triangles(word: Sequence[int]) -> List[Tuple[int, int, int]]:
    m = len(word)
    need = list(word)
    need[0] -= 1
    need[1] -= 1
    boundary = deque([0, 1])
    triangles = []

    for x in range(2, m):
        o, last = boundary[0], boundary[-1]
        need[x] -= 2
        need[o] -= 1
        need[last] -= 1
        triangles.append((o, last, x))
        boundary.append(x)
        if need[o] < 0 or need[last] < 0 or need[x] < 0:
            raise DegreeOverflow(f"vertex degree exceeded while adding {x + 1}", position=x + 1)

        # a saturated vertex next to x is sealed off, at either end of the boundary
        while len(boundary) > 3:
            if need[boundary[0]] == 0:
                o = boundary.popleft()
                b = boundary[0]
                triangles.append((b, o, x))
            elif need[boundary[-2]] == 0:
                last = boundary[-2]
                del boundary[-2]
                b = boundary[-2]
                triangles.append((x, last, b))
            else:
                break
            need[x] -= 1
            need[b] -= 1
            if need[x] < 0 or need[b] < 0:
                raise DegreeOverflow(f"vertex degree exceeded while closing at {x + 1}",
                                     position=x + 1)

    if len(boundary) != 3 or any(need[v] for v in boundary):
        raise WindupFailed("spiral does not close into a sphere triangulation",
                           boundary=len(boundary))
    a, b, x = boundary
    triangles.append((a, x, b))
    return triangles


def windup(pv: PentagonVector) -> DualFullerene:
    """Rebuild the dual fullerene whose spiral from (0, 1, +1) has pv's degree word"""
    word = pv.word()
    triangles = _windup_triangles(word)
    try:
        return build(from_triangles(len(word), triangles))
    except ValidationError as e:
        raise WindupFailed(f"wound-up graph is invalid: {e}", positions=pv.positions) from e


def try_windup(pv: PentagonVector) -> Optional[DualFullerene]:
    try:
        return windup(pv)
    except WindupFailed:
        return None


# ============================================================================
# Enumeration
# ============================================================================

def unrank_combination(rank: int, m: int, k: int = PENTAGONS) -> Tuple[int, ...]:
    """rank-th (0-based) k-subset of {1..m} in lexicographic order"""
    if not 0 <= rank < comb(m, k):
        raise ValueError(f"rank {rank} out of range for C({m},{k})")
    result = []
    x = 1
    for slots in range(k, 0, -1):
        while True:
            c = comb(m - x, slots - 1)
            if rank < c:
                result.append(x)
                x += 1
                break
            rank -= c
            x += 1
    return tuple(result)


def rank_combination(positions: Sequence[int], m: int) -> int:
    """Inverse of unrank_combination"""
    k = len(positions)
    rank = 0
    prev = 0
    for i, p in enumerate(positions):
        for x in range(prev + 1, p):
            rank += comb(m - x, k - i - 1)
        prev = p
    return rank


def next_combination(c: List[int], m: int) -> bool:
    """Advance c to its lexicographic successor in place; False when exhausted"""
    k = len(c)
    i = k - 1
    while i >= 0 and c[i] == m - k + i + 1:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def accept_canonical(pv: PentagonVector) -> Optional[DualFullerene]:
    """Wound-up graph if pv is its own canonical spiral, else None"""
    g = try_windup(pv)
    if g is None or not is_canonical(g, pv.word()):
        return None
    return g


def _enumerate_block(n: int, lo: int, hi: int) -> List[Tuple[Tuple[int, ...], tuple]]:
    m = n // 2 + 2
    c = list(unrank_combination(lo, m))
    found = []
    for _ in range(hi - lo):
        pv = PentagonVector(n, c)
        g = accept_canonical(pv)
        if g is not None:
            found.append((pv.positions, g.neighbors))
        if not next_combination(c, m):
            break
    return found


def _blocks(total: int, parts: int) -> List[Tuple[int, int]]:
    size = -(-total // parts)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def enumerate_isomers(n: int, budget: Optional[int] = None,
                      workers: Optional[int] = None) -> List[DualFullerene]:
    """All isomers of C_n ordered by canonical pentagon vector; index j-1 is C_{n,j}"""
    m = check_feasible(n)
    budget = config.ENUMERATION_BUDGET if budget is None else budget
    workers = config.THREADS if workers is None else workers
    total = comb(m, PENTAGONS)
    if total > budget:
        raise BudgetExceeded(f"C({m},12) = {total} windups exceeds budget {budget}",
                             n=n, candidates=total, budget=budget)
    if n == 22:
        logger.info("Enumerated C_22: 0 isomers")
        return []

    if workers <= 1 or total < 1000:
        found = _enumerate_block(n, 0, total)
    else:
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_enumerate_block, n, lo, hi)
                       for lo, hi in _blocks(total, workers * 4)]
            for future in futures:
                found.extend(future.result())

    found.sort()
    isomers = []
    seen = set()
    for positions, neighbors in found:
        g = DualFullerene(neighbors)
        code = canonical_code(g)
        if code in seen:
            logger.warning(f"Duplicate canonical code for {positions} dropped")
            continue
        seen.add(code)
        isomers.append(g)
    logger.info(f"Enumerated C_{n}: {len(isomers)} isomers")
    return isomers


def first_success(n: int, budget: Optional[int] = None) -> Optional[DualFullerene]:
    """First pentagon vector in lexicographic order that winds up; that graph is C_{n,1}"""
    m = check_feasible(n)
    budget = config.SEED_BUDGET if budget is None else budget
    for attempts, positions in enumerate(combinations(range(1, m + 1), PENTAGONS)):
        if attempts >= budget:
            logger.info(f"Lexicographic seed search for n={n} stopped after {budget} windups")
            return None
        g = try_windup(PentagonVector(n, positions))
        if g is not None:
            return g
    return None


def canonical_vectors(isomers: Sequence[RotationSystem]) -> List[PentagonVector]:
    return [canonical_pentagon_vector(g) for g in isomers]


def isomer_index(g: DualFullerene, isomers: Optional[Sequence[DualFullerene]] = None,
                 budget: Optional[int] = None) -> Tuple[int, int]:
    """(n, j) with j the 1-based position of g in the lexicographic order of C_n"""
    n = 2 * (g.m - 2)
    if isomers is None:
        isomers = enumerate_isomers(n, budget=budget)
    vectors = canonical_vectors(isomers)
    target = canonical_pentagon_vector(g)
    j = bisect.bisect_left(vectors, target)
    if j == len(vectors) or vectors[j] != target:
        raise NotFound(f"{target.to_line()} is not among the isomers of C_{n}")
    return n, j + 1
