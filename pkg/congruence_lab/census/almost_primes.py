"""Подсчёт π_s: числа n <= X, равные произведению s простых из множества."""

import logging
from bisect import bisect_right
from math import factorial, log
from typing import Callable, Iterable, List, Union

from arith import is_prime, prime_sieve
from core.exceptions import ArithmeticDomainError
from core.limits import DEFAULT_MEM_CAP

logger = logging.getLogger(__name__)

PrimeSet = Union[Iterable[int], Callable[[int], bool]]


def _materialize(
        prime_set: PrimeSet, s: int, bound: int, mem_cap: int
) -> List[int]:
    # наибольший нужный простой: X / 2^{s-1}
    top = bound // 2 ** (s - 1)
    if callable(prime_set):
        candidates = prime_sieve(top, mem_cap=mem_cap).tolist()
        return [p for p in candidates if prime_set(p)]
    primes = sorted({int(p) for p in prime_set if p <= top})
    for p in primes:
        if not is_prime(p):
            raise ArithmeticDomainError(f"{p} не является простым.")
    return primes


def _count(
        primes: List[int], start: int, s: int, limit: int, distinct: bool
) -> int:
    if s == 1:
        return max(0, bisect_right(primes, limit, start) - start)
    total = 0
    for index in range(start, len(primes)):
        p = primes[index]
        # оставшиеся s множителей не меньше p
        if p ** s > limit:
            break
        total += _count(
            primes,
            index + 1 if distinct else index,
            s - 1,
            limit // p,
            distinct,
        )
    return total


def pi_s(
        prime_set: PrimeSet,
        s: int,
        bound: int,
        *,
        distinct: bool = True,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> int:
    """Число n <= X вида p_1·…·p_s с p_i из множества.

    По умолчанию простые попарно различны (p_1 < … < p_s); при
    distinct=False допускаются повторы (p_1 <= … <= p_s).
    """
    if s < 1:
        raise ArithmeticDomainError(f"s должно быть >= 1: {s}.")
    if bound < 2:
        return 0
    primes = _materialize(prime_set, s, bound, mem_cap)
    total = _count(primes, 0, s, bound, distinct)
    logger.debug(
        "π_%d(X=%d) по %d простым: %d", s, bound, len(primes), total
    )
    return total


def landau_estimate(delta: float, s: int, bound: float) -> float:
    """δ^s/(s-1)!·X/log X·(log log X)^{s-1}."""
    if s < 1:
        raise ArithmeticDomainError(f"s должно быть >= 1: {s}.")
    if bound <= 3:
        raise ArithmeticDomainError(f"Нужно X > 3 для log log X: {bound}.")
    return (
        delta ** s / factorial(s - 1)
        * bound / log(bound) * log(log(bound)) ** (s - 1)
    )
