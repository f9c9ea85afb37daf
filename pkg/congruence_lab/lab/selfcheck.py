"""Случайные проверки законов кольца рядов и свойств операторов Гекке."""

from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List

import numpy as np

from hecke import FormMeta, hecke_apply, hecke_iterate
from qseries import (
    QSeries,
    add,
    deserialize,
    inverse,
    inverse_pentagonal,
    mul,
    pentagonal_series,
    scale,
    serialize,
    sub,
)

RING_MODULI = (5, 25, 9, 121)
HECKE_MODULI = (5, 121)
HECKE_PAIRS = ((3, 5), (3, 7))
MAX_PRECISION = 64
HECKE_PRECISION = 2000


@dataclass(frozen=True)
class SuiteResult:
    name: str
    trials: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def __str__(self):
        status = "ok" if self.ok else f"FAILED {self.failures}"
        return f"{self.name}: {status} ({self.trials} trials)"


def random_series(rng, modulus: int, precision: int) -> QSeries:
    return QSeries(
        modulus, precision, rng.integers(0, modulus, precision + 1)
    )


def ring_laws(rng) -> bool:
    modulus = int(rng.choice(RING_MODULI))
    precision = int(rng.integers(0, MAX_PRECISION + 1))
    f, g, h = (random_series(rng, modulus, precision) for _ in range(3))
    checks = [
        mul(mul(f, g), h) == mul(f, mul(g, h)),
        mul(f, g) == mul(g, f),
        mul(f, add(g, h)) == add(mul(f, g), mul(f, h)),
        sub(add(f, g), g) == f,
    ]
    if gcd(f.coefficient(0), modulus) == 1:
        checks.append(mul(f, inverse(f)) == QSeries.one(modulus, precision))
    return all(checks)


def eta_inverse(rng) -> bool:
    modulus = int(rng.choice(RING_MODULI))
    precision = int(rng.integers(0, 4 * MAX_PRECISION))
    product = mul(
        pentagonal_series(modulus, precision),
        QSeries(modulus, precision, inverse_pentagonal(modulus, precision)),
    )
    return product == QSeries.one(modulus, precision)


def qs1_roundtrip(rng) -> bool:
    modulus = int(rng.choice(RING_MODULI))
    f = random_series(rng, modulus, int(rng.integers(0, MAX_PRECISION + 1)))
    return deserialize(serialize(f)) == f


def hecke_linearity(rng) -> bool:
    modulus = int(rng.choice(HECKE_MODULI))
    meta = FormMeta.half(int(rng.integers(1, 6)))
    f, g = (random_series(rng, modulus, HECKE_PRECISION) for _ in range(2))
    a, b = (int(c) for c in rng.integers(0, modulus, 2))
    p = int(rng.choice([3, 7, 11]))
    left = hecke_apply(add(scale(f, a), scale(g, b)), meta, p)
    right = add(
        scale(hecke_apply(f, meta, p), a), scale(hecke_apply(g, meta, p), b)
    )
    return left == right


def hecke_commute(rng) -> bool:
    modulus = int(rng.choice(HECKE_MODULI))
    meta = FormMeta.half(int(rng.integers(1, 6)))
    f = random_series(rng, modulus, HECKE_PRECISION)
    p, q = HECKE_PAIRS[int(rng.integers(0, len(HECKE_PAIRS)))]
    return hecke_iterate(f, meta, (p, q)) == hecke_iterate(f, meta, (q, p))


SUITES: Dict[str, Callable] = {
    "ring-laws": ring_laws,
    "eta-inverse": eta_inverse,
    "qs1-roundtrip": qs1_roundtrip,
    "hecke-linearity": hecke_linearity,
    "hecke-commute": hecke_commute,
}


def run_suites(seed: int, trials: int) -> List[SuiteResult]:
    """Каждый набор получает собственный генератор от общего зерна."""
    results = []
    for index, (name, check) in enumerate(SUITES.items()):
        rng = np.random.default_rng([seed, index])
        failures = sum(not check(rng) for _ in range(trials))
        results.append(SuiteResult(name, trials, failures))
    return results
