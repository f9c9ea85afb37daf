"""Ограничения на объём таблиц."""

from .exceptions import ResourceLimitError

# Предел по умолчанию: 10**7 записей по 8 байт
DEFAULT_MEM_CAP = 10 ** 7


def check_capacity(entries: int, mem_cap: int = DEFAULT_MEM_CAP) -> None:
    """Бросает ResourceLimitError, если таблица больше mem_cap записей."""
    if entries > mem_cap:
        raise ResourceLimitError(
            f"Таблица на {entries} записей превышает предел {mem_cap} "
            "(CONGRUENCE_LAB_MEM_CAP)."
        )
