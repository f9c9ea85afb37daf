"""Векторные ядра арифметики по модулю M на массивах numpy.

Пока произведения помещаются в int64, считаем в numpy; иначе переходим
на массивы Python-целых (dtype=object).
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

INT64_LIMIT = 2 ** 63 - 1
# целые до 2**53 точны в float64
FLOAT_EXACT_LIMIT = 2 ** 53
RECURRENCE_BLOCK = 1024


def as_residues(values, modulus: int, length: int) -> np.ndarray:
    """Приводит values к массиву вычетов [0, M) длины length."""
    result = np.zeros(length, dtype=np.int64)
    if isinstance(values, np.ndarray) and values.dtype.kind == "i":
        chunk = values[:length].astype(np.int64) % modulus
    else:
        chunk = np.array(
            [int(v) % modulus for v in list(values)[:length]], dtype=np.int64
        )
    result[:chunk.size] = chunk
    return result


def signed(values: np.ndarray, modulus: int) -> np.ndarray:
    """Симметричные представители вычетов: (-M/2, M/2]."""
    return np.where(values > modulus // 2, values - modulus, values)


def scale_mod(values: np.ndarray, scalar: int, modulus: int) -> np.ndarray:
    """values * scalar mod M."""
    scalar %= modulus
    if values.size == 0 or scalar * (modulus - 1) <= INT64_LIMIT:
        return values * scalar % modulus
    return (values.astype(object) * scalar % modulus).astype(np.int64)


def add_mod(left: np.ndarray, right: np.ndarray, modulus: int) -> np.ndarray:
    """left + right mod M."""
    if 2 * (modulus - 1) <= INT64_LIMIT:
        return (left + right) % modulus
    total = left.astype(object) + right.astype(object)
    return (total % modulus).astype(np.int64)


def dot_mod(weights: np.ndarray, values: np.ndarray, modulus: int) -> int:
    """Σ weights[k]·values[k] mod M без переполнения int64."""
    if weights.size == 0:
        return 0
    bound = int(np.abs(weights).max()) * (modulus - 1) * weights.size
    if bound <= INT64_LIMIT:
        return int(np.dot(weights, values)) % modulus
    return sum(int(w) * int(v) for w, v in zip(weights, values)) % modulus


def convolve_mod(
        left: np.ndarray, right: np.ndarray, modulus: int, precision: int
) -> np.ndarray:
    """Произведение Коши, усечённое до q^precision (школьный алгоритм)."""
    left = left[:precision + 1]
    right = right[:precision + 1]
    # внешний цикл идёт по более разреженному множителю
    if np.count_nonzero(left) > np.count_nonzero(right):
        left, right = right, left
    out = np.zeros(precision + 1, dtype=np.int64)
    right_support = np.flatnonzero(right)
    if right_support.size == 0:
        return out
    right_valuation = int(right_support[0])
    for i in np.flatnonzero(left).tolist():
        if i + right_valuation > precision:
            break
        width = precision + 1 - i
        term = scale_mod(right[:width], int(left[i]), modulus)
        out[i:] = add_mod(out[i:], term, modulus)
    return out


def _serial_recurrence(
        support: np.ndarray,
        weights: np.ndarray,
        head: int,
        modulus: int,
        precision: int,
) -> np.ndarray:
    values = np.zeros(precision + 1, dtype=np.int64)
    values[0] = head % modulus
    for n in range(1, precision + 1):
        k = int(np.searchsorted(support, n, side="right"))
        if k:
            values[n] = dot_mod(
                weights[:k], values[n - support[:k]], modulus
            )
    return values


def _lower_toeplitz(column: np.ndarray, dtype) -> np.ndarray:
    """Нижнетреугольная матрица T[i, j] = column[i - j]."""
    size = column.size
    padded = np.concatenate([np.zeros(size - 1, dtype=np.int64), column])
    return sliding_window_view(padded, size)[:, ::-1].astype(dtype)


def _blocked_recurrence(
        support: np.ndarray,
        weights: np.ndarray,
        head: int,
        modulus: int,
        precision: int,
        block: int,
        dtype,
) -> np.ndarray:
    # внутри блока действуют только сдвиги < block; их вклад снимает
    # треугольная матрица обращённого ряда
    small = int(np.searchsorted(support, block))
    column = _serial_recurrence(
        support[:small], weights[:small], 1, modulus, block - 1
    )
    solve = _lower_toeplitz(column, dtype)
    shifts = list(zip(support.tolist(), weights.tolist()))

    values = np.zeros(precision + 1, dtype=np.int64)
    for start in range(0, precision + 1, block):
        stop = min(start + block, precision + 1)
        rhs = np.zeros(stop - start, dtype=np.int64)
        if start == 0:
            rhs[0] = head % modulus
        for shift, weight in shifts:
            if shift >= stop:
                break
            lo, hi = max(start, shift), min(stop, start + shift)
            if lo >= hi:
                continue
            source = values[lo - shift:hi - shift]
            target = rhs[lo - start:hi - start]
            if weight == 1:
                target += source
            elif weight == -1:
                target -= source
            else:
                target += weight * source
        rhs %= modulus
        width = stop - start
        product = solve[:width, :width] @ rhs.astype(dtype)
        if dtype is np.float64:
            product = np.rint(product).astype(np.int64)
        values[start:stop] = product % modulus
    return values


def sparse_recurrence(
        support: np.ndarray,
        weights: np.ndarray,
        head: int,
        modulus: int,
        precision: int,
) -> np.ndarray:
    """b[0] = head, b[n] = Σ_k weights[k]·b[n - support[k]] mod M.

    support строго возрастает и начинается с 1 или больше; именно так
    обращается ряд с разреженной частью, например пентагональный.
    Значения считаются блоками по RECURRENCE_BLOCK; если суммы блока не
    помещаются в int64, остаётся поэлементный проход.
    """
    support = np.asarray(support, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    block = min(RECURRENCE_BLOCK, precision + 1)
    top = int(np.abs(weights).max()) if weights.size else 0
    if top * (modulus - 1) * max(1, support.size) > INT64_LIMIT:
        return _serial_recurrence(support, weights, head, modulus, precision)
    bound = block * (modulus - 1) ** 2
    if bound < FLOAT_EXACT_LIMIT:
        dtype = np.float64
    elif bound <= INT64_LIMIT:
        dtype = np.int64
    else:
        return _serial_recurrence(support, weights, head, modulus, precision)
    return _blocked_recurrence(
        support, weights, head, modulus, precision, block, dtype
    )
