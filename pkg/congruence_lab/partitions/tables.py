"""Таблицы p(n) mod M и b_{p^a}(n) mod M."""

import logging
import time
from dataclasses import dataclass

import numpy as np

from arith import is_prime, validate_modulus
from core.exceptions import ArithmeticDomainError
from core.limits import DEFAULT_MEM_CAP, check_capacity
from qseries import EtaProductSpec, QSeries, eta_product, inverse_pentagonal

logger = logging.getLogger(__name__)

P_EXACT_LIMIT = 120


@dataclass(frozen=True, eq=False)
class PartitionTable:
    """values[n] = p(n) mod M для 0 <= n <= xmax."""

    modulus: int
    xmax: int
    values: np.ndarray

    def __getitem__(self, n: int) -> int:
        return int(self.values[n])

    def as_series(self) -> QSeries:
        return QSeries(self.modulus, self.xmax, self.values)


def p_table(
        modulus: int, xmax: int, *, mem_cap: int = DEFAULT_MEM_CAP
) -> PartitionTable:
    """p(n) mod M по пентагональной рекурсии Эйлера."""
    modulus = validate_modulus(modulus)
    if xmax < 0:
        raise ArithmeticDomainError(f"xmax должен быть >= 0: {xmax}.")
    check_capacity(xmax + 1, mem_cap)
    started = time.perf_counter()
    values = inverse_pentagonal(modulus, xmax)
    values.setflags(write=False)
    logger.info(
        "Таблица p(n) mod %d до n=%d за %.2f с",
        modulus, xmax, time.perf_counter() - started,
    )
    return PartitionTable(modulus, xmax, values)


def p_exact_small(n: int) -> int:
    """Точное p(n) динамикой по слагаемым, 0 <= n <= 120."""
    if not 0 <= n <= P_EXACT_LIMIT:
        raise ArithmeticDomainError(
            f"p_exact_small поддерживает 0 <= n <= {P_EXACT_LIMIT}: {n}."
        )
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def check_odd_prime(p: int) -> None:
    """ArithmeticDomainError, если p не нечётное простое."""
    if p == 2 or not is_prime(p):
        raise ArithmeticDomainError(f"Нужно нечётное простое: {p}.")


def regular_table(
        p: int,
        a: int,
        modulus: int,
        xmax: int,
        *,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> np.ndarray:
    """b_{p^a}(n) mod M: разложение ∏(1 - q^{p^a n})/(1 - q^n)."""
    check_odd_prime(p)
    if a < 1:
        raise ArithmeticDomainError(f"Показатель a должен быть >= 1: {a}.")
    check_capacity(xmax + 1, mem_cap)
    spec = EtaProductSpec(((1, -1), (p ** a, 1)))
    return eta_product(spec, modulus, xmax).coeffs
