"""
Fullab Formats
planar_code binary files and spiral text files
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from errors import (
    BadHeader,
    FormatError,
    TruncatedRecord,
    ValidationError,
    ValidationFailed,
)
from graph_core import build
from models import PentagonVector, RotationSystem
from spiral import canonical_pentagon_vector, windup

logger = logging.getLogger(__name__)

PLANAR_CODE_HEADER = b'>>planar_code<<'
FORMATS = ('planar_code', 'spiral')

PathLike = Union[str, Path]


# ============================================================================
# planar_code
# ============================================================================

def encode_planar_code(graphs: Iterable[RotationSystem]) -> bytes:
    """Header, then per graph: m, and for each vertex its 1-based neighbours
    clockwise followed by 0. Rotation lists are stored counter-clockwise in
    memory, so they are reversed on the wire.
    """
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        if g.m > 255:
            raise FormatError(f"planar_code with one-byte entries holds m <= 255, got {g.m}")
        out.append(g.m)
        for nbrs in g.neighbors:
            out.extend(v + 1 for v in reversed(nbrs))
            out.append(0)
    return bytes(out)


def decode_planar_code(data: bytes, strict: bool = True) -> List[RotationSystem]:
    """Parse planar_code bytes; every record goes through build.

    strict=True demands fullerene duals, strict=False accepts any sphere
    triangulation (flip-chain states).
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader(f"expected {PLANAR_CODE_HEADER!r}", found=data[:len(PLANAR_CODE_HEADER)])
    graphs = []
    pos = len(PLANAR_CODE_HEADER)
    index = 0
    while pos < len(data):
        m = data[pos]
        pos += 1
        neighbors = []
        for v in range(m):
            end = data.find(0, pos)
            if end < 0:
                raise TruncatedRecord(f"record {index} ends inside vertex {v + 1}", record_index=index)
            row = [b - 1 for b in reversed(data[pos:end])]
            pos = end + 1
            if any(u >= m for u in row):
                raise ValidationFailed(index, ValidationError(f"vertex {v + 1} names a neighbour above {m}"))
            neighbors.append(row)
        try:
            graphs.append(build(neighbors, strict=strict))
        except ValidationError as e:
            raise ValidationFailed(index, e) from e
        index += 1
    return graphs


def write_planar_code(graphs: Iterable[RotationSystem], path: PathLike) -> None:
    data = encode_planar_code(graphs)
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e}") from e


def read_planar_code(path: PathLike, strict: bool = True) -> List[RotationSystem]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    graphs = decode_planar_code(data, strict=strict)
    logger.debug(f"Read {len(graphs)} graphs from {path}")
    return graphs


# ============================================================================
# Spiral text
# ============================================================================

def spiral_lines(vectors: Iterable[PentagonVector]) -> List[str]:
    return [pv.to_line() for pv in vectors]


def parse_spiral_lines(lines: Iterable[str]) -> List[PentagonVector]:
    vectors = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            vectors.append(PentagonVector.from_line(line))
        except (ValueError, IndexError) as e:
            raise FormatError(f"line {number}: {e}", line=number) from e
    return vectors


def write_spirals(vectors: Iterable[PentagonVector], path: PathLike) -> None:
    text = ''.join(line + '\n' for line in spiral_lines(vectors))
    try:
        Path(path).write_text(text, encoding='ascii', newline='\n')
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e}") from e


def read_spirals(path: PathLike) -> List[PentagonVector]:
    try:
        text = Path(path).read_text(encoding='ascii')
    except (OSError, UnicodeDecodeError) as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    return parse_spiral_lines(text.splitlines())


# ============================================================================
# Dispatch on format name
# ============================================================================

def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format: {fmt}")


def write_graphs(graphs: Sequence[RotationSystem], path: PathLike, fmt: str = 'planar_code') -> None:
    """Spiral output stores each graph's canonical pentagon vector"""
    _check_format(fmt)
    if fmt == 'planar_code':
        write_planar_code(graphs, path)
    else:
        write_spirals([canonical_pentagon_vector(g) for g in graphs], path)


def read_graphs(path: PathLike, fmt: Optional[str] = None, strict: bool = True) -> List[RotationSystem]:
    """Read graphs in the given format, or sniff the planar_code header when fmt is None"""
    if fmt is None:
        try:
            with open(path, 'rb') as f:
                head = f.read(len(PLANAR_CODE_HEADER))
        except OSError as e:
            raise FormatError(f"cannot read {path}: {e}") from e
        fmt = 'planar_code' if head == PLANAR_CODE_HEADER else 'spiral'
    _check_format(fmt)
    if fmt == 'planar_code':
        return read_planar_code(path, strict=strict)
    return [windup(pv) for pv in read_spirals(path)]
