"""Разложение на простые множители и бесквадратные ядра."""

from collections import Counter
from dataclasses import dataclass
from itertools import count
from math import gcd, isqrt, prod
from typing import Tuple

import numpy as np

from core.exceptions import ArithmeticDomainError
from core.limits import DEFAULT_MEM_CAP, check_capacity

from .primes import is_prime, prime_sieve

TRIAL_DIVISION_BOUND = 1000
_SMALL_PRIMES = prime_sieve(TRIAL_DIVISION_BOUND).tolist()


@dataclass(frozen=True)
class Factorization:
    """Каноническое разложение n = ∏ p^e."""

    n: int
    factors: Tuple[Tuple[int, int], ...]

    @property
    def kernel(self) -> int:
        """Произведение простых, входящих в n в нечётной степени."""
        return prod(p for p, e in self.factors if e % 2)

    @property
    def omega(self) -> int:
        return len(self.factors)

    def value(self) -> int:
        return prod(p ** e for p, e in self.factors)


def _pollard_brent(n: int) -> int:
    """Находит нетривиальный делитель составного нечётного n."""
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise AssertionError("unreachable")


def _split(n: int, found: Counter) -> None:
    if n == 1:
        return
    if is_prime(n):
        found[n] += 1
        return
    divisor = _pollard_brent(n)
    _split(divisor, found)
    _split(n // divisor, found)


def factorize(n: int) -> Factorization:
    """Полное разложение n >= 1 на простые множители."""
    if n < 1:
        raise ArithmeticDomainError(f"Раскладываются только n >= 1: {n}.")
    original = n
    found: Counter = Counter()
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            n //= p
            found[p] += 1
    _split(n, found)
    return Factorization(original, tuple(sorted(found.items())))


def squarefree_kernels(
        bound: int, *, mem_cap: int = DEFAULT_MEM_CAP
) -> np.ndarray:
    """Массив k, где k[n] равно бесквадратному ядру n (k[0] = 0)."""
    check_capacity(bound + 1, mem_cap)
    kernels = np.arange(bound + 1, dtype=np.int64)
    for p in prime_sieve(isqrt(bound)).tolist():
        square = p * p
        step = square
        while step <= bound:
            kernels[::step] //= square
            step *= square
    return kernels
