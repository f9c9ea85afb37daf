from .characters import CharacterKind, RealCharacter, char_eval
from .factor import Factorization, factorize, squarefree_kernels
from .modular import MAX_MODULUS, validate_modulus
from .primes import (
    is_prime,
    prime_pi,
    prime_sieve,
    primes_in_class,
)
from .symbols import jacobi, kronecker

__all__ = [
    "CharacterKind",
    "Factorization",
    "MAX_MODULUS",
    "RealCharacter",
    "char_eval",
    "factorize",
    "is_prime",
    "jacobi",
    "kronecker",
    "prime_pi",
    "prime_sieve",
    "primes_in_class",
    "squarefree_kernels",
    "validate_modulus",
]
