"""Ряды-мишени сравнений для p(n) и b_{p^a}(n)."""

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Dict, Tuple

import numpy as np

from arith import is_prime, jacobi
from core.exceptions import ArithmeticDomainError
from qseries import QSeries

from .tables import DEFAULT_MEM_CAP, check_odd_prime, p_table, regular_table

G_TARGET_PRIMES = (5, 7, 11)


class TargetKind(str, enum.Enum):
    F_TARGET = "F-target"
    G_TARGET = "G-target"
    REGULAR = "regular"


@dataclass(frozen=True)
class RestrictedSeries:
    """Ряд-мишень вместе с описанием того, что он приближает."""

    series: QSeries
    kind: TargetKind
    params: Tuple[int, ...]
    metadata: Dict[str, Any] = field(default_factory=dict)


def _check_level(j: int, precision: int) -> None:
    if j < 1:
        raise ArithmeticDomainError(f"Показатель j должен быть >= 1: {j}.")
    if precision < 0:
        raise ArithmeticDomainError(f"Точность должна быть >= 0: {precision}.")


def f_target(
        ell: int, j: int, precision: int, *, mem_cap: int = DEFAULT_MEM_CAP
) -> RestrictedSeries:
    """Σ p((ℓn+1)/24) q^n mod ℓ^j, нули при 24 ∤ ℓn+1."""
    if ell < 13 or not is_prime(ell):
        raise ArithmeticDomainError(f"Нужно простое ℓ >= 13: {ell}.")
    _check_level(j, precision)
    modulus = ell ** j
    table = p_table(modulus, (ell * precision + 1) // 24, mem_cap=mem_cap)
    exponents = np.arange(precision + 1, dtype=np.int64)
    hit = (ell * exponents + 1) % 24 == 0
    values = np.zeros(precision + 1, dtype=np.int64)
    values[hit] = table.values[(ell * exponents[hit] + 1) // 24]
    # вес (ℓ^j - ℓ^{j-1} - 1)/2 = λ + 1/2; форма лишь записывается
    metadata = {
        "lambda": (ell ** j - ell ** (j - 1) - 2) // 2,
        "level": 576 * ell,
        "character": "kron:12",
    }
    return RestrictedSeries(
        QSeries(modulus, precision, values),
        TargetKind.F_TARGET,
        (ell, j),
        metadata,
    )


def g_target(
        ell: int, j: int, precision: int, *, mem_cap: int = DEFAULT_MEM_CAP
) -> RestrictedSeries:
    """Σ p((n+1)/24) q^n по n с 24 | n+1 и (-n/ℓ) = -1, mod ℓ^j."""
    if ell not in G_TARGET_PRIMES:
        raise ArithmeticDomainError(
            f"G-мишень строится для ℓ из {G_TARGET_PRIMES}: {ell}."
        )
    _check_level(j, precision)
    modulus = ell ** j
    table = p_table(modulus, (precision + 1) // 24, mem_cap=mem_cap)
    legendre = np.array([jacobi(-r, ell) for r in range(ell)])
    exponents = np.arange(precision + 1, dtype=np.int64)
    hit = ((exponents + 1) % 24 == 0) & (legendre[exponents % ell] == -1)
    values = np.zeros(precision + 1, dtype=np.int64)
    values[hit] = table.values[(exponents[hit] + 1) // 24]
    # вес, уровень и характер G_{ℓ,j} здесь не вычисляются
    metadata = {"lambda": None, "level": None, "character": None}
    return RestrictedSeries(
        QSeries(modulus, precision, values),
        TargetKind.G_TARGET,
        (ell, j),
        metadata,
    )


def regular_target(
        p: int,
        a: int,
        j: int,
        precision: int,
        *,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> RestrictedSeries:
    """Σ b_{p^a}(n) q^{(24n + p^a - 1)/t} mod p^j, t = gcd(p^a - 1, 24)."""
    check_odd_prime(p)
    if a < 1:
        raise ArithmeticDomainError(f"Показатель a должен быть >= 1: {a}.")
    _check_level(j, precision)
    modulus = p ** j
    t = gcd(p ** a - 1, 24)
    top = (precision * t - p ** a + 1) // 24
    values = np.zeros(precision + 1, dtype=np.int64)
    if top >= 0:
        counts = regular_table(p, a, modulus, top, mem_cap=mem_cap)
        indices = np.arange(top + 1, dtype=np.int64)
        values[(24 * indices + p ** a - 1) // t] = counts
    return RestrictedSeries(
        QSeries(modulus, precision, values),
        TargetKind.REGULAR,
        (p, a, j),
        {"t": t},
    )
