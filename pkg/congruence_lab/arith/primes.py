"""Простые числа: тест Миллера-Рабина, решето, простые в классе."""

import logging
from math import gcd, isqrt
from typing import List

import numpy as np

from core.exceptions import ArithmeticDomainError
from core.limits import DEFAULT_MEM_CAP, check_capacity

logger = logging.getLogger(__name__)

# Детерминированный набор свидетелей для всех n < 3.3 * 10**24
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Проверяет простоту n детерминированным тестом Миллера-Рабина."""
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_sieve(bound: int, *, mem_cap: int = DEFAULT_MEM_CAP) -> np.ndarray:
    """Возвращает возрастающий массив простых p <= bound."""
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    check_capacity(bound + 1, mem_cap)
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.flatnonzero(flags).astype(np.int64)


def prime_pi(bound: int, *, mem_cap: int = DEFAULT_MEM_CAP) -> int:
    """Количество простых, не превосходящих bound."""
    return int(prime_sieve(bound, mem_cap=mem_cap).size)


def primes_in_class(
        a: int, m: int, bound: int, *, mem_cap: int = DEFAULT_MEM_CAP
) -> List[int]:
    """Простые p <= bound с p ≡ a (mod m) в порядке возрастания."""
    if m < 1:
        raise ArithmeticDomainError(f"Модуль класса должен быть >= 1: {m}.")
    if gcd(a, m) != 1:
        raise ArithmeticDomainError(
            f"Класс {a} mod {m} не взаимно прост с модулем."
        )
    primes = prime_sieve(bound, mem_cap=mem_cap)
    selected = primes[primes % m == a % m]
    logger.debug(
        "Простых p <= %d в классе %d mod %d: %d", bound, a, m, selected.size
    )
    return selected.tolist()
