"""Исключения, общие для всех пакетов лаборатории."""

# Коды выхода CLI
EXIT_USAGE = 2
EXIT_UNHIT_CLASS = 3
EXIT_RESOURCE = 4
EXIT_PRECISION = 5


class LabError(Exception):
    """Базовая ошибка лаборатории."""

    exit_code = EXIT_USAGE


class ArithmeticDomainError(LabError, ValueError):
    """Аргумент вне области определения арифметической функции."""


class ModulusMismatchError(LabError, ValueError):
    """Ряды заданы по разным модулям."""


class NonUnitError(LabError, ArithmeticError):
    """Свободный член ряда не обратим по модулю."""


class SeriesFormatError(LabError, ValueError):
    """Некорректный текст в формате QS1."""


class WeightError(LabError, ValueError):
    """Оператор применён к форме неподходящего веса."""


class PrecisionExhaustedError(LabError):
    """Точности разложения не хватает для вычисления."""

    exit_code = EXIT_PRECISION


class ResourceLimitError(LabError, MemoryError):
    """Таблица превысила допустимый объём памяти."""

    exit_code = EXIT_RESOURCE
