"""Перепись вычетов #{1 <= n <= X : a(n) ≡ r (mod M)}."""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import floor
from typing import List, Sequence, Tuple

import numpy as np

from arith import validate_modulus
from core.exceptions import ArithmeticDomainError, PrecisionExhaustedError
from core.limits import DEFAULT_MEM_CAP, check_capacity
from qseries.kernels import as_residues

logger = logging.getLogger(__name__)

DEFAULT_RATIO = 2
MIN_CHECKPOINT = 16


@dataclass(frozen=True, eq=False)
class CensusTable:
    """counts[r] для n <= X и снимки counts в контрольных точках X_i."""

    modulus: int
    xmax: int
    counts: np.ndarray
    checkpoints: Tuple[Tuple[int, np.ndarray], ...]

    def unhit(self) -> List[int]:
        """Классы вычетов, не встретившиеся до X."""
        return np.flatnonzero(self.counts == 0).tolist()


def checkpoint_grid(
        xmax: int, ratio: float = DEFAULT_RATIO, minimum: int = MIN_CHECKPOINT
) -> List[int]:
    """Точки X·ratio^{-k} >= minimum и сама X, по возрастанию."""
    if ratio <= 1:
        raise ArithmeticDomainError(
            f"Шаг контрольных точек должен быть > 1: {ratio}."
        )
    points = {xmax}
    k = 1
    while True:
        point = floor(xmax / ratio ** k)
        if point < minimum:
            break
        points.add(point)
        k += 1
    return sorted(points)


def count_residues(
        residues: np.ndarray, modulus: int, start: int, stop: int
) -> np.ndarray:
    """Число n из [start, stop) в каждом классе вычетов."""
    return np.bincount(residues[start:stop], minlength=modulus).astype(
        np.int64
    )


def merge_counts(*parts: np.ndarray) -> np.ndarray:
    """Слияние переписей непересекающихся диапазонов сложением."""
    return np.sum(parts, axis=0, dtype=np.int64)


def _split(start: int, stop: int, pieces: int) -> List[Tuple[int, int]]:
    edges = np.linspace(start, stop, pieces + 1).astype(np.int64).tolist()
    return [(lo, hi) for lo, hi in zip(edges, edges[1:]) if lo < hi]


def census(
        values: Sequence[int],
        modulus: int,
        xmax: int,
        ratio: float = DEFAULT_RATIO,
        *,
        minimum: int = MIN_CHECKPOINT,
        workers: int = 1,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> CensusTable:
    """Перепись a(1..X) по модулю M; values[0] не учитывается.

    Диапазоны между контрольными точками считаются независимо (при
    workers > 1 в пуле потоков) и складываются, так что результат не
    зависит от разбиения.
    """
    modulus = validate_modulus(modulus)
    check_capacity(modulus, mem_cap)
    if xmax < 0:
        raise ArithmeticDomainError(f"X должен быть >= 0: {xmax}.")
    if len(values) < xmax + 1:
        raise PrecisionExhaustedError(
            f"Известно {len(values)} значений, нужно a(1..{xmax})."
        )
    started = time.perf_counter()
    residues = as_residues(values, modulus, xmax + 1)
    grid = checkpoint_grid(xmax, ratio, minimum) if xmax else [0]

    segments = []
    lower = 1
    for point in grid:
        segments.append(_split(lower, point + 1, max(1, workers)))
        lower = point + 1

    def count(bounds):
        return count_residues(residues, modulus, *bounds)

    tasks = [bounds for pieces in segments for bounds in pieces]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = iter(list(pool.map(count, tasks)))
    else:
        results = iter([count(bounds) for bounds in tasks])

    running = np.zeros(modulus, dtype=np.int64)
    checkpoints = []
    for point, pieces in zip(grid, segments):
        for _ in pieces:
            running = merge_counts(running, next(results))
        snapshot = running.copy()
        snapshot.setflags(write=False)
        checkpoints.append((point, snapshot))
    logger.info(
        "Перепись mod %d до X=%d: %d контрольных точек за %.2f с",
        modulus, xmax, len(checkpoints), time.perf_counter() - started,
    )
    return CensusTable(modulus, xmax, checkpoints[-1][1], tuple(checkpoints))
