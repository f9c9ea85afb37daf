"""Вес, уровень и характер модулярной формы."""

from dataclasses import dataclass, field

from arith import RealCharacter, char_eval, kronecker
from core.exceptions import ArithmeticDomainError, WeightError

INTEGRAL_PREFIX = "int"
HALF_PREFIX = "half"


@dataclass(frozen=True)
class FormMeta:
    """Вес k (целый) или λ + 1/2 (полуцелый), уровень N и характер χ."""

    weight: int
    level: int = 1
    character: RealCharacter = field(default_factory=RealCharacter.trivial)
    half_integral: bool = False

    def __post_init__(self):
        if self.level < 1:
            raise ArithmeticDomainError(
                f"Уровень должен быть >= 1: {self.level}."
            )
        if self.half_integral:
            if self.level % 4:
                raise WeightError(
                    f"Полуцелый вес требует 4 | N, получено N={self.level}."
                )
            if self.weight < 0:
                raise WeightError(f"λ должно быть >= 0: {self.weight}.")
        elif self.weight < 1:
            raise WeightError(f"Целый вес должен быть >= 1: {self.weight}.")

    @classmethod
    def integral(cls, k, level=1, character=None) -> "FormMeta":
        return cls(k, level, character or RealCharacter.trivial())

    @classmethod
    def half(cls, lam, level=4, character=None) -> "FormMeta":
        return cls(lam, level, character or RealCharacter.trivial(), True)

    @classmethod
    def parse(cls, weight: str, level: int, character: str) -> "FormMeta":
        """Разбирает вес `int:k` или `half:λ` и характер."""
        prefix, _, value = weight.strip().partition(":")
        if prefix not in (INTEGRAL_PREFIX, HALF_PREFIX) or not value:
            raise WeightError(f"Некорректный вес: {weight!r}.")
        try:
            number = int(value)
        except ValueError:
            raise WeightError(f"Некорректный вес: {weight!r}.")
        return cls(
            number,
            level,
            RealCharacter.parse(character),
            prefix == HALF_PREFIX,
        )

    def __str__(self):
        prefix = HALF_PREFIX if self.half_integral else INTEGRAL_PREFIX
        return f"{prefix}:{self.weight}"


def power_mod(p: int, exponent: int, modulus: int) -> int:
    """p^exponent mod M; отрицательная степень через обратный элемент."""
    try:
        return pow(p, exponent, modulus)
    except ValueError:
        raise ArithmeticDomainError(
            f"{p} необратимо по модулю {modulus}: нужна степень {exponent}."
        )


def chi_star(meta: FormMeta, n: int) -> int:
    """χ*(n) = ((-1)^λ / n)·χ(n)."""
    if not meta.half_integral:
        raise WeightError("χ* определён только для полуцелого веса.")
    return kronecker((-1) ** meta.weight, n) * char_eval(meta.character, n)


def eigen_scalar(meta: FormMeta, p: int, modulus: int) -> int:
    """χ*(p)p^{λ-1} (полуцелый вес) или χ(p)p^{k-1} (целый) mod M."""
    if meta.half_integral:
        value = chi_star(meta, p)
    else:
        value = char_eval(meta.character, p)
    return value * power_mod(p, meta.weight - 1, modulus) % modulus


def eigen_scalar_is_one(meta: FormMeta, p: int, modulus: int) -> bool:
    return eigen_scalar(meta, p, modulus) == 1 % modulus
