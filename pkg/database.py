"""
Fullab Isomer Database
Per-n sorted spiral files with a canonical-code index, for C_{n,j} lookups
"""

import json
import logging
from bisect import bisect_left
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import config
from errors import FormatError, NotFound, OutOfRange
from formats import read_spirals, write_spirals
from graph_core import canonical_code
from models import DualFullerene, PentagonVector, RotationSystem
from spiral import canonical_pentagon_vector, check_feasible, enumerate_isomers, windup

logger = logging.getLogger(__name__)


def _code_key(g: RotationSystem) -> str:
    return ' '.join(str(x) for x in canonical_code(g))


class IsomerDb:
    """Directory of C{n}.spiral files (one canonical vector per line, sorted)
    and C{n}.index.json files mapping canonical codes to 1-based j
    """

    def __init__(self, directory: Optional[str] = None):
        self.directory = Path(directory or config.DB_DIR)
        self._vectors: Dict[int, List[PentagonVector]] = {}
        self._index: Dict[int, Dict[str, int]] = {}

    def spiral_path(self, n: int) -> Path:
        return self.directory / f"C{n}.spiral"

    def index_path(self, n: int) -> Path:
        return self.directory / f"C{n}.index.json"

    def has(self, n: int) -> bool:
        return self.spiral_path(n).exists() and self.index_path(n).exists()

    # Build
    def build(self, n: int, budget: Optional[int] = None,
              workers: Optional[int] = None) -> List[PentagonVector]:
        """Enumerate C_n and persist it; returns the sorted canonical vectors"""
        check_feasible(n)
        isomers = enumerate_isomers(n, budget=budget, workers=workers)
        pairs = sorted((canonical_pentagon_vector(g), _code_key(g)) for g in isomers)
        vectors = [pv for pv, _ in pairs]
        index = {code: j for j, (_, code) in enumerate(pairs, start=1)}
        if len(index) != len(vectors):
            raise FormatError(f"duplicate canonical codes while building C_{n}")

        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            write_spirals(vectors, self.spiral_path(n))
            self.index_path(n).write_text(json.dumps({'n': n, 'codes': index}, sort_keys=True),
                                          encoding='ascii', newline='\n')
        except OSError as e:
            raise FormatError(f"cannot write database files for C_{n}: {e}") from e

        self._vectors[n] = vectors
        self._index[n] = index
        logger.info(f"Database C_{n}: {len(vectors)} isomers written to {self.spiral_path(n)}")
        return vectors

    # Load
    def vectors(self, n: int) -> List[PentagonVector]:
        if n not in self._vectors:
            if not self.spiral_path(n).exists():
                raise NotFound(f"no database file for C_{n}", path=str(self.spiral_path(n)))
            vectors = read_spirals(self.spiral_path(n))
            if any(pv.n != n for pv in vectors):
                raise FormatError(f"{self.spiral_path(n)} mixes vertex counts")
            self._vectors[n] = vectors
        return self._vectors[n]

    def index(self, n: int) -> Dict[str, int]:
        if n not in self._index:
            try:
                data = json.loads(self.index_path(n).read_text(encoding='ascii'))
            except FileNotFoundError:
                raise NotFound(f"no index file for C_{n}", path=str(self.index_path(n)))
            except (OSError, ValueError) as e:
                raise FormatError(f"cannot read {self.index_path(n)}: {e}") from e
            self._index[n] = {code: int(j) for code, j in data['codes'].items()}
        return self._index[n]

    # Lookups
    def lookup(self, pv: PentagonVector) -> Tuple[int, int]:
        """(n, j) of a canonical pentagon vector by binary search"""
        vectors = self.vectors(pv.n)
        i = bisect_left(vectors, pv)
        if i == len(vectors) or vectors[i] != pv:
            raise NotFound(f"{pv.to_line()} is not a canonical spiral of C_{pv.n}")
        return pv.n, i + 1

    def lookup_graph(self, g: RotationSystem) -> Tuple[int, int]:
        n = 2 * (g.m - 2)
        j = self.index(n).get(_code_key(g))
        if j is None:
            raise NotFound(f"graph is not in the C_{n} database")
        return n, j

    def graph(self, n: int, j: int) -> DualFullerene:
        vectors = self.vectors(n)
        if not 1 <= j <= len(vectors):
            raise OutOfRange(f"C_{n} has {len(vectors)} isomers, asked for j={j}", n=n, j=j)
        return windup(vectors[j - 1])


def db_build(n: int, directory: Optional[str] = None, budget: Optional[int] = None,
             workers: Optional[int] = None) -> List[PentagonVector]:
    return IsomerDb(directory).build(n, budget=budget, workers=workers)


def db_lookup(pv: PentagonVector, directory: Optional[str] = None) -> Tuple[int, int]:
    return IsomerDb(directory).lookup(pv)
