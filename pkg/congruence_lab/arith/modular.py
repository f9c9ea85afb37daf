"""Проверка модулей сравнений."""

from core.exceptions import ArithmeticDomainError

MAX_MODULUS = 2 ** 63 - 1


def validate_modulus(value: int, *, odd: bool = False) -> int:
    """Возвращает модуль M, если 1 <= M < 2**63 (и M нечётен при odd)."""
    if isinstance(value, bool) or int(value) != value:
        raise ArithmeticDomainError(f"Модуль должен быть целым: {value!r}.")
    value = int(value)
    if not 1 <= value <= MAX_MODULUS:
        raise ArithmeticDomainError(
            f"Модуль должен лежать в [1, 2**63): {value}."
        )
    if odd and value % 2 == 0:
        raise ArithmeticDomainError(
            f"Для полуцелого веса нужен нечётный модуль: {value}."
        )
    return value
