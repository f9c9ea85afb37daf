"""Операторы Гекке на усечённых q-разложениях.

Целый вес: T_p делит точность на p; полуцелый: T_{p²} делит на p².
Коэффициенты внутри новой точности не зависят от лишних коэффициентов
входа.
"""

import logging
from math import prod
from typing import Sequence

import numpy as np

from arith import char_eval, is_prime, jacobi, validate_modulus
from core.exceptions import (
    ArithmeticDomainError,
    PrecisionExhaustedError,
    WeightError,
)
from qseries import QSeries
from qseries.kernels import add_mod, scale_mod

from .meta import FormMeta, chi_star, power_mod

logger = logging.getLogger(__name__)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ArithmeticDomainError(f"Оператор Гекке задан для простых: {p}.")


def _warn_level(meta: FormMeta, p: int) -> None:
    if meta.level % p == 0:
        logger.warning(
            "p=%d делит уровень %d: формулы применяются без поправок",
            p, meta.level,
        )


def hecke_int(f: QSeries, meta: FormMeta, p: int) -> QSeries:
    """b(n) = a(pn) + χ(p)p^{k-1}a(n/p)."""
    if meta.half_integral:
        raise WeightError("hecke_int применяется к формам целого веса.")
    _check_prime(p)
    _warn_level(meta, p)
    modulus = f.modulus
    precision = f.precision // p
    values = f.coeffs[::p][:precision + 1].copy()
    scalar = (
        char_eval(meta.character, p)
        * power_mod(p, meta.weight - 1, modulus)
    )
    tail = values[::p]
    values[::p] = add_mod(
        tail, scale_mod(f.coeffs[:tail.size], scalar, modulus), modulus
    )
    return QSeries(modulus, precision, values)


def legendre_vector(p: int, count: int) -> np.ndarray:
    """(n/p) для n = 0..count-1."""
    table = np.array(
        [jacobi(r, p) for r in range(min(p, count))], dtype=np.int64
    )
    return table[np.arange(count) % p] if count else table


def hecke_half(f: QSeries, meta: FormMeta, p: int) -> QSeries:
    """b(n) = a(p²n) + χ*(p)(n/p)p^{λ-1}a(n) + χ*(p²)p^{2λ-1}a(n/p²)."""
    if not meta.half_integral:
        raise WeightError("hecke_half применяется к формам полуцелого веса.")
    if p == 2:
        raise ArithmeticDomainError("T_{p²} полуцелого веса: p = 2 исключено.")
    _check_prime(p)
    validate_modulus(f.modulus, odd=True)
    _warn_level(meta, p)
    modulus = f.modulus
    square = p * p
    precision = f.precision // square
    values = f.coeffs[::square][:precision + 1].copy()

    middle = scale_mod(
        f.coeffs[:precision + 1],
        chi_star(meta, p) * power_mod(p, meta.weight - 1, modulus),
        modulus,
    )
    legendre = legendre_vector(p, precision + 1)
    middle = np.where(
        legendre == 1, middle, np.where(legendre == -1, (-middle) % modulus, 0)
    )
    values = add_mod(values, middle, modulus)

    scalar = chi_star(meta, square) * power_mod(
        p, 2 * meta.weight - 1, modulus
    )
    tail = values[::square]
    values[::square] = add_mod(
        tail, scale_mod(f.coeffs[:tail.size], scalar, modulus), modulus
    )
    return QSeries(modulus, precision, values)


def hecke_apply(f: QSeries, meta: FormMeta, p: int) -> QSeries:
    if meta.half_integral:
        return hecke_half(f, meta, p)
    return hecke_int(f, meta, p)


def iterated_precision(precision: int, meta: FormMeta, ps: Sequence[int]):
    step = 2 if meta.half_integral else 1
    return precision // prod(p ** step for p in ps)


def hecke_iterate(f: QSeries, meta: FormMeta, ps: Sequence[int]) -> QSeries:
    """f|T_{p_1}|T_{p_2}... слева направо."""
    if ps and iterated_precision(f.precision, meta, ps) < 1:
        raise PrecisionExhaustedError(
            f"Точности {f.precision} не хватает для p={list(ps)}."
        )
    result = f
    for p in ps:
        result = hecke_apply(result, meta, p)
    return result
