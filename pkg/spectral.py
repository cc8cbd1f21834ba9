"""
Fullab Spectral
Spectra, Newton polynomials and (alpha, beta)-characters of dual fullerenes and
their subgraphs, with sweep tables for ranges, gaps and histograms
"""

import logging
from itertools import combinations
from math import factorial, isqrt
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.linalg import expm

import config
from constructions import goldberg, nanotube_50
from errors import EmptyInput, OutOfRange, SymmetryError
from graph_core import canonical_code, matrices, primal, subgraph
from models import NewtonValue, RotationSystem, SpectralSummary, SubgraphView

logger = logging.getLogger(__name__)

REPRESENTATIONS = ('dual', 'hex', 'pent', 'primal')
TOLERANCE = 1e-9

# parameter pairs of the character-range figure
FIGURE_PARAMETERS = ((0.5, 0.25), (1.0, 0.5), (0.5, 1.0), (1.0, 1.0))


def sym_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Full spectrum of a real symmetric matrix, descending"""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return np.zeros(0)
    if M.shape[0] != M.shape[1] or np.max(np.abs(M - M.T)) > 1e-12:
        raise SymmetryError("matrix is not symmetric", shape=M.shape)
    return np.linalg.eigvalsh(M)[::-1]


def newton(M: np.ndarray, k: int, descriptor: str = 'M') -> NewtonValue:
    """N(M, k) = tr(M^k) from the spectrum; exact integer for integral M"""
    if k < 0:
        raise ValueError(f"Newton polynomial order must be >= 0, got {k}")
    M = np.asarray(M, dtype=float)
    value = float(np.sum(sym_eigenvalues(M) ** k))
    if M.size and np.array_equal(M, np.round(M)):
        exact = int(np.trace(np.linalg.matrix_power(M.astype(int).astype(object), k))) \
            if k else M.shape[0]
        if abs(value - exact) > 1e-6 * max(1.0, abs(exact)):
            logger.warning(f"Spectral N({descriptor},{k}) = {value} drifts from exact {exact}")
        return NewtonValue(descriptor, k, exact)
    return NewtonValue(descriptor, k, value)


def representation_graph(g: RotationSystem, representation: str = 'dual') -> Union[RotationSystem, SubgraphView]:
    if representation == 'dual':
        return g
    if representation == 'hex':
        return subgraph(g, 6)
    if representation == 'pent':
        return subgraph(g, 5)
    if representation == 'primal':
        return primal(g)
    raise ValueError(f"unknown representation: {representation}")


def _degrees(graph: Union[RotationSystem, SubgraphView]) -> np.ndarray:
    return matrices(graph, 0.0, 1.0).diagonal()


def character(g: RotationSystem, alpha: Optional[float] = None, beta: Optional[float] = None,
              representation: str = 'dual') -> float:
    """ch = tr exp(alpha A + beta D) = sum exp(alpha lambda_j), lambda_j spectrum of A + (beta/alpha) D"""
    alpha = config.DEFAULT_ALPHA if alpha is None else alpha
    beta = config.DEFAULT_BETA if beta is None else beta
    graph = representation_graph(g, representation)
    if alpha == 0:
        return float(np.sum(np.exp(beta * _degrees(graph))))
    eigenvalues = sym_eigenvalues(matrices(graph, 1.0, beta / alpha))
    return float(np.sum(np.exp(alpha * eigenvalues)))


def character_series(g: RotationSystem, alpha: float, beta: float,
                     representation: str = 'dual', terms: int = 60) -> float:
    """Truncated power series of tr exp(alpha A + beta D), k <= terms"""
    X = matrices(representation_graph(g, representation), alpha, beta)
    total = 0.0
    power = np.eye(X.shape[0])
    for k in range(terms + 1):
        total += np.trace(power) / factorial(k)
        power = power @ X
    return float(total)


def character_expm(g: RotationSystem, alpha: float, beta: float,
                   representation: str = 'dual') -> float:
    return float(np.trace(expm(matrices(representation_graph(g, representation), alpha, beta))))


def spectral_summary(g: RotationSystem, alpha: Optional[float] = None, beta: Optional[float] = None,
                     representation: str = 'dual', graph_id: str = '') -> SpectralSummary:
    alpha = config.DEFAULT_ALPHA if alpha is None else alpha
    beta = config.DEFAULT_BETA if beta is None else beta
    graph = representation_graph(g, representation)
    if alpha == 0:
        eigenvalues = np.sort(beta * _degrees(graph))[::-1]
    else:
        eigenvalues = sym_eigenvalues(matrices(graph, 1.0, beta / alpha))
    return SpectralSummary(graph_id, alpha, beta, eigenvalues,
                           character(g, alpha, beta, representation))


def normalized_character(value: Union[float, RotationSystem], ch_min: float, ch_max: float,
                         alpha: Optional[float] = None, beta: Optional[float] = None) -> float:
    """(ch - ch_min) / (ch_max - ch_min); values outside the interval are rejected"""
    if not ch_min < ch_max:
        raise ValueError(f"need ch_min < ch_max, got {ch_min} and {ch_max}")
    ch = character(value, alpha, beta) if isinstance(value, RotationSystem) else float(value)
    slack = TOLERANCE * max(1.0, abs(ch_max))
    if ch < ch_min - slack or ch > ch_max + slack:
        raise OutOfRange(f"character {ch} outside [{ch_min}, {ch_max}]", value=ch)
    ratio = (ch - ch_min) / (ch_max - ch_min)
    clamped = min(1.0, max(0.0, ratio))
    if clamped != ratio:
        logger.debug("normalized character %.17g clamped to %g", ratio, clamped)
    return clamped


def normalized_newton(g: RotationSystem, k: int, representation: str = 'dual') -> float:
    """2/(n+4) N(A + D/2, k) on the dual; N(A, k)/n on the primal"""
    n = 2 * (g.m - 2)
    if representation == 'dual':
        return 2.0 / (n + 4) * float(newton(matrices(g, 1.0, 0.5), k, 'A+D/2'))
    if representation == 'primal':
        return float(newton(matrices(primal(g), 1.0, 0.0), k, 'A_primal')) / n
    raise ValueError(f"normalized Newton values exist for dual and primal, not {representation}")


def histogram(values: Sequence[float], bins: int = 1000,
              value_range: Optional[Tuple[float, float]] = None) -> pd.DataFrame:
    """Equal-width density histogram; density * width sums to 1"""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise EmptyInput("histogram needs at least one value")
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    density, edges = np.histogram(values, bins=bins, range=value_range, density=True)
    counts, _ = np.histogram(values, bins=edges)
    return pd.DataFrame({
        'left': edges[:-1],
        'right': edges[1:],
        'count': counts,
        'density': density,
    })


# ============================================================================
# Sweeps over isomer sets
# ============================================================================

def goldberg_parameters(n: int) -> Optional[Tuple[int, int]]:
    """(p, q) with p >= q and n = 20(p^2 + pq + q^2), if any"""
    if n % 20:
        return None
    T = n // 20
    for p in range(1, isqrt(T) + 1):
        for q in range(0, p + 1):
            if p * p + p * q + q * q == T:
                return p, q
    return None


def extreme_bounds(n: int, alpha: Optional[float] = None,
                   beta: Optional[float] = None) -> Optional[Tuple[float, float]]:
    """(Goldberg character, (5,0)-nanotube character) when both families reach n"""
    pq = goldberg_parameters(n)
    if pq is None or (n - 20) % 10:
        return None
    return (character(goldberg(*pq), alpha, beta),
            character(nanotube_50((n - 20) // 10), alpha, beta))


def characters(isomers: Sequence[RotationSystem], alpha: Optional[float] = None,
               beta: Optional[float] = None, representation: str = 'dual') -> List[float]:
    return [character(g, alpha, beta, representation) for g in isomers]


def sweep(n: int, isomers: Sequence[RotationSystem], alpha: Optional[float] = None,
          beta: Optional[float] = None, representation: str = 'dual') -> pd.DataFrame:
    """One row per isomer: n, j, character, normalized"""
    values = characters(isomers, alpha, beta, representation)
    bounds = extreme_bounds(n, alpha, beta) if representation == 'dual' else None
    lo, hi = bounds if bounds else (min(values, default=0.0), max(values, default=0.0))
    # the bounds coincide for n=20 up to rounding
    if hi > lo and not np.isclose(hi, lo, rtol=TOLERANCE, atol=0.0):
        normalized = [(v - lo) / (hi - lo) for v in values]
    else:
        normalized = [0.0] * len(values)
    return pd.DataFrame({
        'n': [n] * len(values),
        'j': list(range(1, len(values) + 1)),
        'character': values,
        'normalized': normalized,
    })


def character_range(n: int, isomers: Sequence[RotationSystem], alpha: Optional[float] = None,
                    beta: Optional[float] = None,
                    neighbors: Optional[Dict[int, Sequence[RotationSystem]]] = None) -> Dict:
    """Extremes of the character over C_n and overlap with C_{n-2}, C_{n+2} when given"""
    values = characters(isomers, alpha, beta)
    if not values:
        raise EmptyInput(f"no isomers supplied for n={n}")
    lo, hi = int(np.argmin(values)), int(np.argmax(values))
    report = {
        'n': n,
        'min': values[lo],
        'argmin': lo + 1,
        'max': values[hi],
        'argmax': hi + 1,
        'overlaps': {},
    }
    for other_n, other in (neighbors or {}).items():
        other_values = characters(other, alpha, beta)
        if other_values:
            report['overlaps'][other_n] = (min(other_values) <= values[hi]
                                           and values[lo] <= max(other_values))
    return report


def monotonicity_table(isomers_by_n: Dict[int, Sequence[RotationSystem]],
                       alpha: Optional[float] = None, beta: Optional[float] = None) -> pd.DataFrame:
    """Does max over C_n stay below min over C_{n+2}? One row per consecutive pair"""
    extremes = {}
    for n, isomers in sorted(isomers_by_n.items()):
        values = characters(isomers, alpha, beta)
        if values:
            extremes[n] = (min(values), max(values))
    rows = []
    for n in sorted(extremes):
        if n + 2 in extremes:
            rows.append({
                'n': n,
                'max': extremes[n][1],
                'next_min': extremes[n + 2][0],
                'passes': extremes[n][1] < extremes[n + 2][0],
            })
    return pd.DataFrame(rows, columns=['n', 'max', 'next_min', 'passes'])


def character_gaps(graphs: Sequence[RotationSystem], alpha: Optional[float] = None,
                   beta: Optional[float] = None, tolerance: float = 1e-6) -> Dict:
    """Smallest pairwise character gap; collisions must be isomorphic pairs"""
    values = characters(graphs, alpha, beta)
    order = np.argsort(values)
    min_gap = float('inf')
    pair = None
    collisions = []
    for a, b in zip(order, order[1:]):
        gap = values[b] - values[a]
        if gap < min_gap:
            min_gap, pair = gap, (int(a), int(b))
    for a, b in combinations(range(len(graphs)), 2):
        if abs(values[a] - values[b]) <= tolerance:
            collisions.append((a, b))
    isomorphic = all(canonical_code(graphs[a]) == canonical_code(graphs[b]) for a, b in collisions)
    return {
        'count': len(graphs),
        'min_gap': min_gap,
        'pair': pair,
        'collisions': collisions,
        'collisions_isomorphic': isomorphic,
    }


def to_csv(df: pd.DataFrame, path) -> None:
    df.to_csv(path, index=False, float_format='%.17g', lineterminator='\n')
