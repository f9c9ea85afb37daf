"""Вещественные характеры Дирихле."""

import enum
from dataclasses import dataclass
from math import gcd

from core.exceptions import ArithmeticDomainError

from .symbols import kronecker


class CharacterKind(str, enum.Enum):
    TRIVIAL = "trivial"
    KRONECKER = "kron"


@dataclass(frozen=True)
class RealCharacter:
    """Тривиальный характер по модулю N или символ Кронекера (d/·)."""

    kind: CharacterKind
    modulus: int = 1
    d: int = 1

    @classmethod
    def trivial(cls, modulus: int = 1) -> "RealCharacter":
        if modulus < 1:
            raise ArithmeticDomainError(
                f"Модуль характера должен быть >= 1: {modulus}."
            )
        return cls(CharacterKind.TRIVIAL, modulus=modulus)

    @classmethod
    def kronecker(cls, d: int) -> "RealCharacter":
        if d == 0:
            raise ArithmeticDomainError("Символ Кронекера (0/·) не характер.")
        # модуль определения: |d| для дискриминантов, иначе 4|d|
        modulus = abs(d) if d % 4 in (0, 1) else 4 * abs(d)
        return cls(CharacterKind.KRONECKER, modulus=modulus, d=d)

    @classmethod
    def parse(cls, text: str) -> "RealCharacter":
        """Разбирает `trivial`, `trivial:N` или `kron:d`."""
        name, _, arg = text.strip().partition(":")
        try:
            if name == CharacterKind.TRIVIAL.value:
                return cls.trivial(int(arg) if arg else 1)
            if name == CharacterKind.KRONECKER.value and arg:
                return cls.kronecker(int(arg))
        except ValueError as exc:
            if isinstance(exc, ArithmeticDomainError):
                raise
            raise ArithmeticDomainError(
                f"Некорректный характер: {text!r}."
            ) from exc
        raise ArithmeticDomainError(f"Некорректный характер: {text!r}.")

    def __str__(self):
        if self.kind is CharacterKind.TRIVIAL:
            if self.modulus == 1:
                return "trivial"
            return f"trivial:{self.modulus}"
        return f"kron:{self.d}"


def char_eval(chi: RealCharacter, n: int) -> int:
    """Значение χ(n) ∈ {-1, 0, 1}."""
    if chi.kind is CharacterKind.TRIVIAL:
        return 1 if gcd(n, chi.modulus) == 1 else 0
    return kronecker(chi.d, n)
