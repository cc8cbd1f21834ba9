"""
Fullab Models
Data structures for embedded dual fullerenes, spirals, rewrites and reports
"""

from functools import total_ordering
from math import comb
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

Dart = Tuple[int, int]
CanonicalCode = Tuple[int, ...]

PENTAGONS = 12


class RotationSystem:
    """Plane embedding given by counterclockwise neighbour lists, ids 0..m-1"""

    def __init__(self, neighbors: Sequence[Sequence[int]]):
        self.neighbors: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(u) for u in nbrs) for nbrs in neighbors
        )
        self._index: List[Dict[int, int]] = [
            {u: i for i, u in enumerate(nbrs)} for nbrs in self.neighbors
        ]

    @property
    def m(self) -> int:
        return len(self.neighbors)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._index[u]

    def succ(self, u: int, v: int, sigma: int = 1) -> int:
        """Neighbour of u following v in rotation direction sigma (+1 = ccw)"""
        nbrs = self.neighbors[u]
        return nbrs[(self._index[u][v] + sigma) % len(nbrs)]

    def pred(self, u: int, v: int) -> int:
        return self.succ(u, v, -1)

    def darts(self) -> Iterator[Dart]:
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                yield (u, v)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in self.darts() if u < v]

    def edge_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.edges())

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.m))
        G.add_edges_from(self.edges())
        return G

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def next_dart(self, u: int, v: int) -> Dart:
        """Next dart of the face to the left of u->v"""
        return (v, self.pred(v, u))

    def face_of(self, u: int, v: int) -> Tuple[int, ...]:
        walk = [u]
        a, b = self.next_dart(u, v)
        while (a, b) != (u, v):
            walk.append(a)
            a, b = self.next_dart(a, b)
        return tuple(walk)

    def faces(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for dart in self.darts():
            if dart in seen:
                continue
            walk = []
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = self.next_dart(a, b)
            result.append(tuple(walk))
        return result

    def relabel(self, perm: Sequence[int]) -> 'RotationSystem':
        """Return a copy where old vertex v becomes perm[v]"""
        new = [()] * self.m
        for v, nbrs in enumerate(self.neighbors):
            new[perm[v]] = tuple(perm[u] for u in nbrs)
        return self.__class__(new)

    def mirror(self) -> 'RotationSystem':
        return self.__class__([tuple(reversed(nbrs)) for nbrs in self.neighbors])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RotationSystem) and self.neighbors == other.neighbors

    def __hash__(self) -> int:
        return hash(self.neighbors)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(m={self.m}, edges={self.edge_count})"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {'m': self.m, 'neighbors': [list(nbrs) for nbrs in self.neighbors]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RotationSystem':
        return cls(data['neighbors'])


class DualFullerene(RotationSystem):
    """Validated sphere triangulation with twelve degree-5 and otherwise degree-6 vertices

    Instances come out of graph_core.build; constructing one directly skips validation.
    """

    @property
    def n(self) -> int:
        return 2 * (self.m - 2)

    def pentagons(self) -> List[int]:
        return [v for v, nbrs in enumerate(self.neighbors) if len(nbrs) == 5]

    def hexagons(self) -> List[int]:
        return [v for v, nbrs in enumerate(self.neighbors) if len(nbrs) == 6]

    def is_ipr(self) -> bool:
        """Isolated Pentagon Rule: no edge joins two degree-5 vertices"""
        return not any(len(self.neighbors[u]) == 5 and len(self.neighbors[v]) == 5
                       for u, v in self.edges())

    def __repr__(self) -> str:
        return f"DualFullerene(n={self.n}, m={self.m})"

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data['n'] = self.n
        return data


class SubgraphView:
    """Induced subgraph on a vertex subset, keeping the parent's facial structure"""

    def __init__(self, parent: RotationSystem, vertices: Sequence[int]):
        self.parent = parent
        self.vertices: Tuple[int, ...] = tuple(sorted(vertices))
        kept = set(self.vertices)
        self.neighbors: Dict[int, Tuple[int, ...]] = {
            v: tuple(u for u in parent.neighbors[v] if u in kept) for v in self.vertices
        }

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in self.neighbors[u] if u < v]

    def is_triangle_angle(self, v: int, i: int) -> bool:
        """Whether the angle at v between neighbour i and i+1 is a face of the parent"""
        nbrs = self.neighbors[v]
        if len(nbrs) < 2:
            return False
        a, b = nbrs[i], nbrs[(i + 1) % len(nbrs)]
        return self.parent.succ(v, a) == b

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edges())
        return G

    def components(self) -> List[List[int]]:
        return sorted(sorted(comp) for comp in nx.connected_components(self.to_networkx()))

    def faces(self) -> List[Tuple[int, ...]]:
        """Facial walks of every component (isolated vertices contribute none)"""
        seen = set()
        result = []
        for u in self.vertices:
            for v in self.neighbors[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    nbrs = self.neighbors[b]
                    a, b = b, nbrs[(nbrs.index(a) - 1) % len(nbrs)]
                result.append(tuple(walk))
        return result

    def triangle_faces(self) -> List[Tuple[int, ...]]:
        """Facial walks that are faces of the parent triangulation"""
        return [f for f in self.faces()
                if len(f) == 3 and self.parent.succ(f[0], f[1]) == f[2]]

    def __repr__(self) -> str:
        return f"SubgraphView(vertices={len(self.vertices)})"


@total_ordering
class PentagonVector:
    """Sorted 1-based positions of the twelve degree-5 vertices along a spiral"""

    def __init__(self, n: int, positions: Sequence[int]):
        positions = tuple(int(p) for p in positions)
        m = n // 2 + 2
        if len(positions) != PENTAGONS:
            raise ValueError(f"pentagon vector needs 12 positions, got {len(positions)}")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ValueError(f"positions must be strictly increasing: {positions}")
        if positions[0] < 1 or positions[-1] > m:
            raise ValueError(f"positions must lie in [1, {m}] for n={n}")
        self.n = n
        self.positions = positions

    @property
    def m(self) -> int:
        return self.n // 2 + 2

    def word(self) -> Tuple[int, ...]:
        """Degree word of the spiral: 5 at listed positions, 6 elsewhere"""
        word = [6] * self.m
        for p in self.positions:
            word[p - 1] = 5
        return tuple(word)

    def to_line(self) -> str:
        return ' '.join(str(x) for x in (self.n,) + self.positions)

    @classmethod
    def from_line(cls, line: str) -> 'PentagonVector':
        fields = [int(x) for x in line.split()]
        return cls(fields[0], fields[1:])

    @classmethod
    def from_word(cls, word: Sequence[int]) -> 'PentagonVector':
        return cls(2 * (len(word) - 2), [i + 1 for i, d in enumerate(word) if d == 5])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PentagonVector)
                and (self.n, self.positions) == (other.n, other.positions))

    def __lt__(self, other: 'PentagonVector') -> bool:
        return (self.n, self.positions) < (other.n, other.positions)

    def __hash__(self) -> int:
        return hash((self.n, self.positions))

    def __repr__(self) -> str:
        return f"PentagonVector(n={self.n}, positions={self.positions})"


class SpiralTrace:
    """Vertex order produced by one successful unwinding"""

    def __init__(self, vertices: Sequence[int], start: Dart, sigma: int, word: Sequence[int]):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        self.start = start
        self.sigma = sigma
        self.word: Tuple[int, ...] = tuple(word)

    def pentagon_vector(self) -> PentagonVector:
        return PentagonVector.from_word(self.word)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"SpiralTrace(start={self.start}, sigma={self.sigma}, m={len(self.vertices)})"


def candidate_count(n: int) -> int:
    """Number of strictly increasing pentagon vectors for n, C(n/2+2, 12)"""
    return comb(n // 2 + 2, PENTAGONS)


class FlipSite:
    """Edge (v1,v2) of a triangulation with its two opposite vertices v3 (left) and v4 (right)"""

    def __init__(self, v1: int, v2: int, v3: int, v4: int):
        self.v1, self.v2, self.v3, self.v4 = v1, v2, v3, v4

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FlipSite) and self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        return f"FlipSite{self.as_tuple()}"

    def to_dict(self) -> Dict[str, Any]:
        return {'edge': [self.v1, self.v2], 'opposite': [self.v3, self.v4]}


class GswPath:
    """Zigzag ladder (v_1, ..., v_2w) with degree-5 ends and degree-6 second/penultimate vertices"""

    def __init__(self, vertices: Sequence[int]):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        if len(self.vertices) < 4 or len(self.vertices) % 2:
            raise ValueError(f"gSW path needs an even length >= 4, got {len(self.vertices)}")

    @property
    def w(self) -> int:
        return len(self.vertices) // 2

    def reversed_pairs(self) -> 'GswPath':
        """(v2, v1, v4, v3, ..., v2w, v2w-1)"""
        vs = self.vertices
        out = []
        for i in range(0, len(vs), 2):
            out.extend((vs[i + 1], vs[i]))
        return GswPath(out)

    def fragment(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GswPath) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"GswPath{self.vertices}"

    def to_dict(self) -> Dict[str, Any]:
        return {'w': self.w, 'vertices': list(self.vertices)}


class TriangleClass:
    """Label of a cut-partition component"""

    T_TRIANGLE = 'T_TRIANGLE'
    TRUNCATED = 'TRUNCATED'
    OTHER = 'OTHER'

    def __init__(self, kind: str, t: Optional[int] = None,
                 r: Optional[Tuple[int, int, int]] = None, convention: str = 'ROWS'):
        self.kind = kind
        self.t = t
        self.r = tuple(r) if r is not None else None
        self.convention = convention

    @property
    def is_triangular(self) -> bool:
        return self.kind in (self.T_TRIANGLE, self.TRUNCATED)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TriangleClass)
                and (self.kind, self.t, self.r) == (other.kind, other.t, other.r))

    def __hash__(self) -> int:
        return hash((self.kind, self.t, self.r))

    def __str__(self) -> str:
        if self.kind == self.T_TRIANGLE:
            return f"T_TRIANGLE({self.t})"
        if self.kind == self.TRUNCATED:
            return f"TRUNCATED({self.t},({self.r[0]},{self.r[1]},{self.r[2]}))"
        return self.OTHER

    __repr__ = __str__

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 't': self.t,
                'r': list(self.r) if self.r else None, 'convention': self.convention}


class CutPartition:
    """Components of the cut T^6 together with their triangle labels"""

    def __init__(self, components: List[Tuple[RotationSystem, TriangleClass]],
                 convention: str = 'ROWS', unresolved: int = 0):
        self.components = components
        self.convention = convention
        # degree-5 vertices left because no qualifying phase-2 path existed
        self.unresolved = unresolved

    def labels(self) -> List[TriangleClass]:
        return [label for _, label in self.components]

    def __len__(self) -> int:
        return len(self.components)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'convention': self.convention,
            'unresolved': self.unresolved,
            'components': [
                {'vertices': comp.m, 'edges': comp.edge_count, 'label': label.to_dict(),
                 'name': str(label)}
                for comp, label in self.components
            ],
        }


class NewtonValue:
    """Newton polynomial N(M, k) = tr(M^k)"""

    def __init__(self, descriptor: str, k: int, value: float):
        self.descriptor = descriptor
        self.k = k
        self.value = value

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self) -> str:
        return f"NewtonValue({self.descriptor}, k={self.k}, value={self.value})"

    def to_dict(self) -> Dict[str, Any]:
        return {'matrix': self.descriptor, 'k': self.k, 'value': self.value}


class SpectralSummary:
    """Spectrum and (alpha, beta)-character of one graph representation"""

    def __init__(self, graph_id: str, alpha: float, beta: float,
                 eigenvalues: Sequence[float], character: float):
        self.graph_id = graph_id
        self.alpha = alpha
        self.beta = beta
        self.eigenvalues = [float(x) for x in eigenvalues]
        self.character = float(character)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'graph_id': self.graph_id,
            'alpha': self.alpha,
            'beta': self.beta,
            'eigenvalues': self.eigenvalues,
            'character': self.character,
        }


class SamplerConfig:
    """Random generation settings for spiral acceptance-rejection and the pSW chain"""

    def __init__(self, n: int, seed: int = 0, method: str = 'spiral_ar',
                 steps: int = 10000, burn_in: int = 0, policy: str = 'uniform_flip',
                 energy: Optional[Any] = None, temperature: float = 1.0,
                 max_attempts: Optional[int] = None, workers: int = 1,
                 validate_every: int = 10000):
        if method not in ('spiral_ar', 'psw_chain'):
            raise ValueError(f"unknown sampling method: {method}")
        if policy not in ('uniform_flip', 'energy'):
            raise ValueError(f"unknown flip policy: {policy}")
        if method == 'psw_chain' and not steps > burn_in >= 0:
            raise ValueError("psw_chain needs steps > burn_in >= 0")
        if policy == 'energy' and energy is None:
            raise ValueError("energy policy needs an energy callable")
        self.n = n
        self.seed = seed
        self.method = method
        self.steps = steps
        self.burn_in = burn_in
        self.policy = policy
        self.energy = energy
        self.temperature = temperature
        self.max_attempts = max_attempts
        self.workers = workers
        self.validate_every = validate_every

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'seed': self.seed,
            'method': self.method,
            'steps': self.steps,
            'burn_in': self.burn_in,
            'policy': self.policy,
            'temperature': self.temperature,
            'max_attempts': self.max_attempts,
            'workers': self.workers,
        }


class SampleReport:
    """Attempt/acceptance counters and per-isomer empirical counts"""

    def __init__(self, n: int):
        self.n = n
        self.attempted = 0
        self.accepted = 0
        self.counts: Dict[PentagonVector, int] = {}

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempted if self.attempted else 0.0

    def record(self, key: PentagonVector) -> None:
        self.accepted += 1
        self.counts[key] = self.counts.get(key, 0) + 1

    def merge(self, other: 'SampleReport') -> None:
        self.attempted += other.attempted
        self.accepted += other.accepted
        for key, count in other.counts.items():
            self.counts[key] = self.counts.get(key, 0) + count

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            'n': self.n,
            'attempted': self.attempted,
            'accepted': self.accepted,
            'acceptance_rate': self.acceptance_rate,
            'counts': {key.to_line(): count for key, count in sorted(self.counts.items())},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SampleReport':
        report = cls(data['n'])
        report.attempted = data.get('attempted', 0)
        report.accepted = data.get('accepted', 0)
        report.counts = {PentagonVector.from_line(line): count
                         for line, count in data.get('counts', {}).items()}
        return report
