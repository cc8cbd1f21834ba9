"""
Fullab Sampling
Uniform random isomers by spiral acceptance-rejection, and the pSW flip chain
started from the bipyramid
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from math import comb, exp
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.stats import chisquare

from constructions import bipyramid
from errors import BudgetExceeded, NoSpiralExists, NotFound, ValidationError
from graph_core import build
from models import (
    PENTAGONS,
    DualFullerene,
    PentagonVector,
    RotationSystem,
    SampleReport,
    SamplerConfig,
)
from spiral import (
    accept_canonical,
    canonical_pentagon_vector,
    check_feasible,
    enumerate_isomers,
    unrank_combination,
)
from sw_ops import MutableTriangulation

logger = logging.getLogger(__name__)

CACHE_LIMIT = 10000


def make_rng(seed: int, worker: int = 0) -> np.random.Generator:
    """Counter-based stream for (seed, worker); worker 0 is the single-stream default"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, worker])))


def degree_energy(degrees: Sequence[int]) -> float:
    """Example energy hook: squared distance of every degree from 6"""
    return float(sum((6 - d) ** 2 for d in degrees))


# ============================================================================
# Spiral acceptance-rejection
# ============================================================================

def spiral_ar_sample(config: SamplerConfig, rng: Optional[np.random.Generator] = None,
                     report: Optional[SampleReport] = None) -> DualFullerene:
    """Draw uniform pentagon vectors until one is the canonical spiral of its graph.

    Every isomer owns exactly one canonical vector, so accepted graphs are
    uniform over isomorphism classes.
    """
    m = check_feasible(config.n)
    rng = rng if rng is not None else make_rng(config.seed)
    total = comb(m, PENTAGONS)
    attempts = 0
    while config.max_attempts is None or attempts < config.max_attempts:
        attempts += 1
        rank = int(rng.integers(0, total))
        pv = PentagonVector(config.n, unrank_combination(rank, m))
        g = accept_canonical(pv)
        if report is not None:
            report.attempted += 1
        if g is not None:
            if report is not None:
                report.record(pv)
            return g
    raise BudgetExceeded(f"no acceptance within {config.max_attempts} draws", n=config.n)


def _spiral_ar_stream(config: SamplerConfig, worker: int, count: int) -> Tuple[List[tuple], SampleReport]:
    rng = make_rng(config.seed, worker)
    report = SampleReport(config.n)
    graphs = [spiral_ar_sample(config, rng, report).neighbors for _ in range(count)]
    return graphs, report


def spiral_ar_samples(config: SamplerConfig, count: int) -> Tuple[List[DualFullerene], SampleReport]:
    """count accepted draws; worker streams are merged in worker order"""
    workers = max(1, config.workers)
    shares = [count // workers + (1 if w < count % workers else 0) for w in range(workers)]
    if workers == 1:
        results = [_spiral_ar_stream(config, 0, count)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_spiral_ar_stream, config, w, share)
                       for w, share in enumerate(shares)]
            results = [f.result() for f in futures]

    report = SampleReport(config.n)
    graphs = []
    for neighbors, part in results:
        graphs.extend(DualFullerene(nbrs) for nbrs in neighbors)
        report.merge(part)
    logger.info(f"Spiral sampler n={config.n}: {report.accepted}/{report.attempted} accepted")
    return graphs, report


# ============================================================================
# pSW chain
# ============================================================================

class ChainVisit:
    """A fullerene state met by the flip chain"""

    def __init__(self, step: int, key: PentagonVector):
        self.step = step
        self.key = key

    def to_dict(self) -> Dict:
        return {'step': self.step, 'pentagons': self.key.to_line()}


def psw_chain(config: SamplerConfig, rng: Optional[np.random.Generator] = None,
              energy: Optional[Callable[[Sequence[int]], float]] = None
              ) -> Tuple[List[ChainVisit], SampleReport]:
    """Random edge flips on the (m-2)-gonal bipyramid, recording fullerene states.

    An invalid flip (multi-edge or degree below 3) leaves the state unchanged
    and still counts as a step. Under the energy policy a valid flip is accepted
    with the Metropolis probability at config.temperature.
    """
    m = check_feasible(config.n)
    rng = rng if rng is not None else make_rng(config.seed)
    energy = energy or config.energy
    state = MutableTriangulation(bipyramid(m))
    degrees = state.degrees()
    count5 = sum(1 for d in degrees if d == 5)
    count6 = sum(1 for d in degrees if d == 6)
    current_energy = energy(degrees) if config.policy == 'energy' else 0.0

    report = SampleReport(config.n)
    visits: List[ChainVisit] = []
    cache: Dict[tuple, PentagonVector] = {}
    rejected = 0

    for step in range(config.steps):
        if config.validate_every and step and step % config.validate_every == 0:
            build(state.freeze(), strict=False)

        v1, v2 = state.edges[int(rng.integers(0, len(state.edges)))]
        site = state.site(v1, v2)
        try:
            state.check(site)
        except ValidationError:
            rejected += 1
            site = None

        if site is not None and config.policy == 'energy':
            trial = list(degrees)
            for v, delta in ((site.v1, -1), (site.v2, -1), (site.v3, 1), (site.v4, 1)):
                trial[v] += delta
            new_energy = energy(trial)
            dE = new_energy - current_energy
            if dE > 0 and rng.random() >= exp(-dE / config.temperature):
                site = None
            else:
                current_energy = new_energy

        if site is not None:
            for v, delta in ((site.v1, -1), (site.v2, -1), (site.v3, 1), (site.v4, 1)):
                old = degrees[v]
                degrees[v] = old + delta
                count5 += (degrees[v] == 5) - (old == 5)
                count6 += (degrees[v] == 6) - (old == 6)
            state.flip(site)

        if step >= config.burn_in:
            report.attempted += 1
            if count5 == PENTAGONS and count6 == m - PENTAGONS:
                rot = state.freeze()
                key = cache.get(rot.neighbors)
                if key is None:
                    if len(cache) >= CACHE_LIMIT:
                        cache.clear()
                    try:
                        key = canonical_pentagon_vector(rot)
                    except NoSpiralExists:
                        logger.warning(f"Step {step}: fullerene state without a spiral, not recorded")
                        continue
                    cache[rot.neighbors] = key
                report.record(key)
                visits.append(ChainVisit(step, key))

    logger.info(f"pSW chain n={config.n}: {config.steps} steps, {rejected} invalid proposals, "
                f"{report.accepted} fullerene visits, {len(report.counts)} distinct isomers")
    return visits, report


# ============================================================================
# Uniformity
# ============================================================================

def uniformity_report(samples: Sequence[Union[RotationSystem, PentagonVector]], n: int,
                      isomers: Optional[Sequence[RotationSystem]] = None,
                      budget: Optional[int] = None) -> Dict:
    """Chi-square of the empirical isomer distribution against uniform over C_n"""
    isomers = enumerate_isomers(n, budget=budget) if isomers is None else isomers
    vectors = [canonical_pentagon_vector(g) for g in isomers]
    index = {pv: j for j, pv in enumerate(vectors)}
    report = SampleReport(n)
    observed = np.zeros(len(vectors), dtype=int)
    for sample in samples:
        key = sample if isinstance(sample, PentagonVector) else canonical_pentagon_vector(sample)
        if key not in index:
            raise NotFound(f"{key.to_line()} is not an isomer of C_{n}")
        observed[index[key]] += 1
        report.attempted += 1
        report.record(key)

    if len(vectors) <= 1:
        statistic, p_value = 0.0, 1.0
    else:
        result = chisquare(observed)
        statistic, p_value = float(result.statistic), float(result.pvalue)
    return {
        'report': report,
        'observed': observed.tolist(),
        'chi_square': statistic,
        'p_value': p_value,
    }
