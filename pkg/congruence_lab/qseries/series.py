"""Усечённые q-разложения над Z/MZ."""

import numbers
from typing import Dict, Iterable, List, Optional

import numpy as np

from arith import validate_modulus
from core.exceptions import (
    ArithmeticDomainError,
    ModulusMismatchError,
    NonUnitError,
    PrecisionExhaustedError,
)

from . import kernels


class QSeries:
    """Ряд Σ a(n)q^n mod M, коэффициенты a(0)..a(N) известны.

    Значения хранятся каноническими вычетами [0, M) в неизменяемом
    массиве numpy длины N + 1.
    """

    __slots__ = ("modulus", "precision", "_coeffs")

    def __init__(self, modulus: int, precision: int, coeffs: Iterable = ()):
        modulus = validate_modulus(modulus)
        if precision < 0:
            raise PrecisionExhaustedError(
                f"Точность ряда должна быть >= 0: {precision}."
            )
        values = kernels.as_residues(coeffs, modulus, precision + 1)
        values.setflags(write=False)
        self.modulus = modulus
        self.precision = int(precision)
        self._coeffs = values

    @classmethod
    def zero(cls, modulus: int, precision: int) -> "QSeries":
        return cls(modulus, precision)

    @classmethod
    def one(cls, modulus: int, precision: int) -> "QSeries":
        return cls.monomial(modulus, precision, 0)

    @classmethod
    def monomial(
            cls, modulus: int, precision: int, exponent: int, coeff: int = 1
    ) -> "QSeries":
        values = np.zeros(precision + 1, dtype=np.int64)
        if exponent <= precision:
            values[exponent] = coeff % modulus
        return cls(modulus, precision, values)

    @classmethod
    def from_dict(
            cls, modulus: int, precision: int, terms: Dict[int, int]
    ) -> "QSeries":
        values = np.zeros(precision + 1, dtype=np.int64)
        for exponent, coeff in terms.items():
            if not 0 <= exponent <= precision:
                raise PrecisionExhaustedError(
                    f"Показатель {exponent} вне точности {precision}."
                )
            values[exponent] = int(coeff) % modulus
        return cls(modulus, precision, values)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.precision:
            raise PrecisionExhaustedError(
                f"Коэффициент a({n}) вне точности {self.precision}."
            )
        return int(self._coeffs[n])

    def support(self) -> List[int]:
        """Показатели с ненулевыми коэффициентами."""
        return np.flatnonzero(self._coeffs).tolist()

    def valuation(self) -> Optional[int]:
        support = np.flatnonzero(self._coeffs)
        return int(support[0]) if support.size else None

    def is_zero(self) -> bool:
        return not self._coeffs.any()

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.precision == other.precision
            and np.array_equal(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash((self.modulus, self.precision, self._coeffs.tobytes()))

    def __repr__(self):
        head = ", ".join(
            f"{n}:{self._coeffs[n]}" for n in self.support()[:6]
        )
        return (
            f"QSeries(modulus={self.modulus}, prec={self.precision}, "
            f"{{{head}}})"
        )

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            return scale(self, int(other))
        return mul(self, other)

    __rmul__ = __mul__


def _common(f: QSeries, g: QSeries) -> int:
    if f.modulus != g.modulus:
        raise ModulusMismatchError(
            f"Модули рядов различаются: {f.modulus} и {g.modulus}."
        )
    return min(f.precision, g.precision)


def add(f: QSeries, g: QSeries) -> QSeries:
    """f + g на общей точности."""
    precision = _common(f, g)
    values = kernels.add_mod(
        f.coeffs[:precision + 1], g.coeffs[:precision + 1], f.modulus
    )
    return QSeries(f.modulus, precision, values)


def neg(f: QSeries) -> QSeries:
    """-f."""
    return QSeries(f.modulus, f.precision, (-f.coeffs) % f.modulus)


def sub(f: QSeries, g: QSeries) -> QSeries:
    """f - g на общей точности."""
    return add(f, neg(g))


def scale(f: QSeries, c: int) -> QSeries:
    """c·f для целого c."""
    return QSeries(
        f.modulus, f.precision, kernels.scale_mod(f.coeffs, c, f.modulus)
    )


def mul(f: QSeries, g: QSeries) -> QSeries:
    """Произведение Коши f·g на общей точности."""
    precision = _common(f, g)
    values = kernels.convolve_mod(f.coeffs, g.coeffs, f.modulus, precision)
    return QSeries(f.modulus, precision, values)


def truncate(f: QSeries, precision: int) -> QSeries:
    """Отбрасывает коэффициенты выше q^precision."""
    if precision > f.precision:
        raise PrecisionExhaustedError(
            f"Нельзя повысить точность {f.precision} до {precision}."
        )
    return QSeries(f.modulus, precision, f.coeffs[:precision + 1])


def shift(f: QSeries, k: int) -> QSeries:
    """Умножение на q^k: точность растёт на k."""
    if k < 0:
        raise ArithmeticDomainError(f"Сдвиг должен быть >= 0: {k}.")
    values = np.zeros(f.precision + k + 1, dtype=np.int64)
    values[k:] = f.coeffs
    return QSeries(f.modulus, f.precision + k, values)


def reduce(f: QSeries, modulus: int) -> QSeries:
    """Редукция по делителю текущего модуля."""
    if f.modulus % modulus:
        raise ModulusMismatchError(
            f"{modulus} не делит модуль ряда {f.modulus}."
        )
    return QSeries(modulus, f.precision, f.coeffs % modulus)


def inverse(f: QSeries) -> QSeries:
    """1/f для ряда с обратимым свободным членом."""
    try:
        head = pow(f.coefficient(0), -1, f.modulus)
    except ValueError:
        raise NonUnitError(
            f"Свободный член {f.coefficient(0)} необратим "
            f"по модулю {f.modulus}."
        )
    support = np.flatnonzero(f.coeffs[1:]) + 1
    weights = kernels.signed(
        kernels.scale_mod(f.coeffs[support], -head, f.modulus), f.modulus
    )
    values = kernels.sparse_recurrence(
        support, weights, head, f.modulus, f.precision
    )
    return QSeries(f.modulus, f.precision, values)


def power(f: QSeries, exponent: int) -> QSeries:
    """f^e; отрицательная степень через inverse."""
    if exponent < 0:
        return power(inverse(f), -exponent)
    result = QSeries.one(f.modulus, f.precision)
    base = f
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def congruent(f: QSeries, g: QSeries) -> bool:
    """f ≡ g mod M на общей точности."""
    precision = _common(f, g)
    return np.array_equal(
        f.coeffs[:precision + 1], g.coeffs[:precision + 1]
    )
