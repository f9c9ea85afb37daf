"""Разложение эта-произведений ∏_δ ∏_{n>=1} (1 - q^{δn})^{e_δ}."""

import logging
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from core.exceptions import ArithmeticDomainError

from . import kernels
from .series import QSeries, mul, power, shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EtaProductSpec:
    """Набор пар (δ, e) с попарно различными δ > 0."""

    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        scales = [scale for scale, _ in self.factors]
        if any(scale < 1 for scale in scales):
            raise ArithmeticDomainError(
                f"Масштабы эта-множителей должны быть > 0: {scales}."
            )
        if len(set(scales)) != len(scales):
            raise ArithmeticDomainError(
                f"Масштабы эта-множителей повторяются: {scales}."
            )

    def __str__(self):
        return " ".join(f"({scale},{exp})" for scale, exp in self.factors)


def pentagonal_terms(
        precision: int, scale: int = 1
) -> Iterator[Tuple[int, int]]:
    """Пары (показатель, знак) ряда ∏(1 - q^{δn}) по теореме Эйлера."""
    yield 0, 1
    k = 1
    while scale * k * (3 * k - 1) // 2 <= precision:
        sign = -1 if k % 2 else 1
        yield scale * k * (3 * k - 1) // 2, sign
        if scale * k * (3 * k + 1) // 2 <= precision:
            yield scale * k * (3 * k + 1) // 2, sign
        k += 1


def pentagonal_series(modulus: int, precision: int, scale: int = 1) -> QSeries:
    """∏(1 - q^{δn}) по теореме Эйлера о пятиугольных числах."""
    values = np.zeros(precision + 1, dtype=np.int64)
    for exponent, sign in pentagonal_terms(precision, scale):
        values[exponent] = sign % modulus
    return QSeries(modulus, precision, values)


def inverse_pentagonal(
        modulus: int, precision: int, scale: int = 1
) -> np.ndarray:
    """Коэффициенты 1/∏(1 - q^{δn}); при δ = 1 это p(n) mod M."""
    terms = list(pentagonal_terms(precision, scale))[1:]
    support = np.array([exponent for exponent, _ in terms], dtype=np.int64)
    # b[n] = -Σ sign_k b[n - g_k]
    weights = np.array([-sign for _, sign in terms], dtype=np.int64)
    return kernels.sparse_recurrence(support, weights, 1, modulus, precision)


def eta_product(spec: EtaProductSpec, modulus: int, precision: int) -> QSeries:
    """q-разложение эта-произведения до q^precision."""
    result = QSeries.one(modulus, precision)
    for scale, exponent in spec.factors:
        if exponent == 0:
            continue
        if exponent < 0:
            base = QSeries(
                modulus, precision,
                inverse_pentagonal(modulus, precision, scale),
            )
        else:
            base = pentagonal_series(modulus, precision, scale)
        result = mul(result, power(base, abs(exponent)))
    logger.debug(
        "Эта-произведение %s mod %d до q^%d", spec, modulus, precision
    )
    return result


def delta_series(modulus: int, precision: int) -> QSeries:
    """Δ = q∏(1 - q^n)^24."""
    if precision == 0:
        return QSeries.zero(modulus, 0)
    body = eta_product(EtaProductSpec(((1, 24),)), modulus, precision - 1)
    return shift(body, 1)


def theta_series(modulus: int, precision: int) -> QSeries:
    """Σ_{m>=1} q^{m²}."""
    values = np.zeros(precision + 1, dtype=np.int64)
    squares = np.arange(1, int(np.sqrt(precision)) + 2, dtype=np.int64) ** 2
    values[squares[squares <= precision]] = 1
    return QSeries(modulus, precision, values)
