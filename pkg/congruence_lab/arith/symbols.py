"""Символы Якоби и Кронекера."""

from core.exceptions import ArithmeticDomainError


def jacobi(a: int, n: int) -> int:
    """Символ Якоби (a/n) для нечётного n >= 1."""
    if n <= 0 or n % 2 == 0:
        raise ArithmeticDomainError(
            f"Символ Якоби определён для нечётного n >= 1, получено n={n}."
        )
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        # квадратичный закон взаимности
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(d: int, n: int) -> int:
    """Символ Кронекера (d/n) для любых целых d и n."""
    if n == 0:
        return 1 if d in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if d % 2 == 0:
            return 0
        if twos % 2 and d % 8 in (3, 5):
            result = -result
    return result * jacobi(d, n)
