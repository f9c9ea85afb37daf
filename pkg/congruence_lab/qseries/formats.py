"""Текстовый формат QS1.

Первая строка `QS1 modulus=<M> prec=<N>`, далее строки `<n> <c>` с
0 <= c < M и строго возрастающими n <= N. Пропущенные показатели
означают нулевой коэффициент. Разделитель строк: LF.
"""

import re
from pathlib import Path
from typing import Union

import numpy as np

from core.exceptions import LabError, SeriesFormatError

from .series import QSeries

HEADER_RE = re.compile(r"QS1 modulus=([1-9]\d*) prec=(0|[1-9]\d*)")
TERM_RE = re.compile(r"(0|[1-9]\d*) (0|[1-9]\d*)")


def serialize(f: QSeries) -> str:
    """Текст QS1: заголовок и ненулевые коэффициенты."""
    lines = [f"QS1 modulus={f.modulus} prec={f.precision}"]
    lines.extend(f"{n} {f.coeffs[n]}" for n in f.support())
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> QSeries:
    """Разбирает QS1; любая неточность формата даёт SeriesFormatError."""
    if "\r" in text:
        raise SeriesFormatError("QS1 допускает только окончания строк LF.")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise SeriesFormatError("Пустой текст вместо ряда QS1.")
    header = HEADER_RE.fullmatch(lines[0])
    if header is None:
        raise SeriesFormatError(f"Некорректный заголовок: {lines[0]!r}.")
    modulus, precision = int(header.group(1)), int(header.group(2))
    values = np.zeros(precision + 1, dtype=np.int64)
    previous = -1
    for number, line in enumerate(lines[1:], start=2):
        term = TERM_RE.fullmatch(line)
        if term is None:
            raise SeriesFormatError(f"Строка {number}: {line!r}.")
        exponent, coeff = int(term.group(1)), int(term.group(2))
        if exponent <= previous:
            raise SeriesFormatError(
                f"Строка {number}: показатели должны строго возрастать."
            )
        if exponent > precision:
            raise SeriesFormatError(
                f"Строка {number}: показатель {exponent} больше "
                f"точности {precision}."
            )
        if coeff >= modulus:
            raise SeriesFormatError(
                f"Строка {number}: коэффициент {coeff} не меньше "
                f"модуля {modulus}."
            )
        values[exponent] = coeff
        previous = exponent
    try:
        return QSeries(modulus, precision, values)
    except LabError as exc:
        raise SeriesFormatError(str(exc)) from exc


def read_series(path: Union[str, Path]) -> QSeries:
    """Читает ряд из файла QS1."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise SeriesFormatError(f"{path}: не ASCII-текст.") from exc
    return deserialize(text)


def write_series(f: QSeries, path: Union[str, Path]) -> None:
    """Записывает ряд в файл QS1 с окончаниями строк LF."""
    with open(path, "w", encoding="ascii", newline="\n") as stream:
        stream.write(serialize(f))
