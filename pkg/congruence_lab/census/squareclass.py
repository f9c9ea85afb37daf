"""Бесквадратные ядра показателей, на которых f mod ℓ не равен нулю."""

from typing import Iterable, List, Set, Tuple

import numpy as np

from arith import is_prime, squarefree_kernels
from core.exceptions import ArithmeticDomainError
from qseries import QSeries, reduce, truncate


def square_class_support(f: QSeries, ell: int) -> Set[int]:
    """Множество ядер n <= prec(f), n >= 1, с a(n) ≢ 0 (mod ℓ)."""
    if ell == 2 or not is_prime(ell):
        raise ArithmeticDomainError(f"Нужно нечётное простое ℓ: {ell}.")
    residues = reduce(f, ell).coeffs
    support = np.flatnonzero(residues[1:]) + 1
    if support.size == 0:
        return set()
    kernels = squarefree_kernels(int(support[-1]))
    return set(np.unique(kernels[support]).tolist())


def support_growth(
        f: QSeries, ell: int, precisions: Iterable[int]
) -> List[Tuple[int, int]]:
    """Число ядер в зависимости от точности."""
    return [
        (precision, len(square_class_support(truncate(f, precision), ell)))
        for precision in precisions
    ]
