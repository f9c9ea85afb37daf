"""Поиск простых p с f|T ≡ c·f (mod M) и проверка цепочек сравнений.

Все вердикты относятся к известной точности разложения: «verified»
означает совпадение всех коэффициентов в пределах новой точности.
"""

import enum
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from arith import factorize, primes_in_class, validate_modulus
from core.exceptions import (
    ArithmeticDomainError,
    PrecisionExhaustedError,
    WeightError,
)
from core.limits import DEFAULT_MEM_CAP
from hecke import FormMeta, hecke_apply, hecke_iterate, legendre_vector
from qseries import QSeries, congruent, scale

logger = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    INSUFFICIENT = "insufficient-precision"


class ProbeKind(str, enum.Enum):
    HECKE = "hecke"
    POWER = "power"


@dataclass(frozen=True)
class ProbeReport:
    """Результат проверки одного простого p."""

    p: int
    residue_class: Tuple[int, int]
    scalar: int
    precision: int
    verdict: Verdict
    proportion: float
    kind: ProbeKind = ProbeKind.HECKE
    level_divides: bool = False

    def to_json(self) -> str:
        return json.dumps({
            "p": self.p,
            "class": list(self.residue_class),
            "scalar": self.scalar,
            "precision": self.precision,
            "verdict": self.verdict.value,
            "proportion": self.proportion,
            "kind": self.kind.value,
            "level_divides": self.level_divides,
        })

    @classmethod
    def from_json(cls, line: str) -> "ProbeReport":
        data = json.loads(line)
        return cls(
            data["p"],
            tuple(data["class"]),
            data["scalar"],
            data["precision"],
            Verdict(data["verdict"]),
            data["proportion"],
            ProbeKind(data.get("kind", ProbeKind.HECKE.value)),
            bool(data.get("level_divides", False)),
        )


@dataclass(frozen=True)
class DensityEstimate:
    """Эмпирическая доля простых и оценка их натуральной плотности."""

    descriptor: str
    bound: int
    density: float
    relative: float


@dataclass(frozen=True)
class ChainResult:
    verdict: Verdict
    n: int
    primes: Tuple[int, ...]
    chain_holds: bool
    four_term_holds: Optional[bool] = None
    image_holds: Optional[bool] = None


def _with_proportions(
        raw: List[Tuple[int, Verdict, int]],
        residue_class: Tuple[int, int],
        scalar: int,
        kind: ProbeKind,
        meta: FormMeta,
) -> List[ProbeReport]:
    reports = []
    tested = verified = 0
    for p, verdict, precision in raw:
        if verdict is not Verdict.INSUFFICIENT:
            tested += 1
            verified += verdict is Verdict.VERIFIED
        reports.append(ProbeReport(
            p,
            residue_class,
            scalar,
            precision,
            verdict,
            verified / tested if tested else 0.0,
            kind,
            meta.level % p == 0,
        ))
    return reports


def _run(check, primes: Sequence[int], workers: int) -> list:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(check, primes))
    return [check(p) for p in primes]


def probe_eigen(
        f: QSeries,
        meta: FormMeta,
        residue_class: Tuple[int, int],
        scalar: int,
        budget: int,
        *,
        min_precision: int = 1,
        workers: int = 1,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> List[ProbeReport]:
    """Проверяет f|T ≡ c·f (mod M) для первых budget простых из класса."""
    if meta.half_integral:
        validate_modulus(f.modulus, odd=True)
    a, m = residue_class
    bound = isqrt(f.precision) if meta.half_integral else f.precision
    candidates = primes_in_class(a, m, bound, mem_cap=mem_cap)
    if meta.half_integral:
        candidates = [p for p in candidates if p != 2]
    candidates = candidates[:max(0, budget)]
    if not candidates:
        raise PrecisionExhaustedError(
            f"Ни одно простое из класса {a} mod {m} не проверяемо "
            f"при точности {f.precision}."
        )
    target = scale(f, scalar)

    def check(p):
        image = hecke_apply(f, meta, p)
        if image.precision < min_precision:
            return p, Verdict.INSUFFICIENT, image.precision
        if congruent(image, target):
            return p, Verdict.VERIFIED, image.precision
        return p, Verdict.REFUTED, image.precision

    reports = _with_proportions(
        _run(check, candidates, workers),
        (a, m),
        scalar,
        ProbeKind.HECKE,
        meta,
    )
    logger.info(
        "Проверено %d простых класса %d mod %d, подтверждено %d",
        len(reports), a, m,
        sum(r.verdict is Verdict.VERIFIED for r in reports),
    )
    return reports


def _integer_root(value: int, k: int) -> int:
    """Наибольшее r с r^k <= value."""
    root = int(round(value ** (1.0 / k)))
    while root ** k > value:
        root -= 1
    while (root + 1) ** k <= value:
        root += 1
    return root


def probe_integer(
        f: QSeries,
        meta: FormMeta,
        n0: int,
        i: int,
        budget: int,
        *,
        residue_class: Tuple[int, int] = (1, 1),
        hecke_class: Optional[Tuple[int, int]] = None,
        workers: int = 1,
        mem_cap: int = DEFAULT_MEM_CAP,
) -> List[ProbeReport]:
    """Простые ℓ с a(n0·ℓ^i) ≡ (i+1)a(n0) и простые из T(f, M).

    Первые находятся прямым просмотром коэффициентов (kind=power), вторые
    проверкой f|T_p ≡ 2f (kind=hecke) в классе p ≡ 1 (mod N·M).
    """
    if meta.half_integral:
        raise WeightError("probe_integer работает с формами целого веса.")
    if n0 < 1 or i < 0:
        raise ArithmeticDomainError(f"Нужно n0 >= 1 и i >= 0: {n0}, {i}.")
    modulus = f.modulus
    if n0 > f.precision:
        raise PrecisionExhaustedError(
            f"a({n0}) вне точности {f.precision}."
        )
    limit = f.precision // n0
    bound = f.precision if i == 0 else _integer_root(limit, i)
    candidates = primes_in_class(
        *residue_class, bound, mem_cap=mem_cap
    )[:max(0, budget)]
    if not candidates:
        raise PrecisionExhaustedError(
            f"Нет простых ℓ с {n0}·ℓ^{i} <= {f.precision}."
        )
    expected = (i + 1) * f.coefficient(n0) % modulus

    def check(p):
        if f.coefficient(n0 * p ** i) == expected:
            return p, Verdict.VERIFIED, f.precision
        return p, Verdict.REFUTED, f.precision

    reports = _with_proportions(
        _run(check, candidates, workers),
        residue_class,
        i + 1,
        ProbeKind.POWER,
        meta,
    )
    hecke_class = hecke_class or (1, meta.level * modulus)
    try:
        reports += probe_eigen(
            f, meta, hecke_class, 2, budget,
            workers=workers, mem_cap=mem_cap,
        )
    except PrecisionExhaustedError:
        logger.warning(
            "Класс %d mod %d не проверен: не хватает точности",
            *hecke_class,
        )
    return reports


def _chain_primes(
        items: Sequence[Union[int, ProbeReport]], modulus: int
) -> Tuple[int, ...]:
    primes = []
    for item in items:
        if isinstance(item, ProbeReport):
            if (
                item.verdict is not Verdict.VERIFIED
                or item.kind is not ProbeKind.HECKE
                or (item.scalar - 2) % modulus
            ):
                raise ArithmeticDomainError(
                    f"p={item.p} не подтверждён для скаляра 2."
                )
            primes.append(item.p)
        else:
            primes.append(int(item))
    if len(set(primes)) != len(primes):
        raise ArithmeticDomainError(f"Простые должны различаться: {primes}.")
    return tuple(primes)


def verify_chain(
        f: QSeries,
        meta: FormMeta,
        n: int,
        probes: Sequence[Union[int, ProbeReport]],
) -> ChainResult:
    """a(p_s²…p_1²·n) ≡ a(n) (mod M) по коэффициентам f.

    При s >= 2 проверяется и тождество
    a(p_2²p_1²n) + a(p_1²n) + a(p_2²n) + a(n) ≡ 4a(n), а при s >= 1 также
    что коэффициент при q^n в f|T_{p_1²}…|T_{p_s²} равен 2^s·a(n).
    """
    if not meta.half_integral:
        raise WeightError("verify_chain относится к полуцелому весу.")
    validate_modulus(f.modulus, odd=True)
    modulus = f.modulus
    primes = _chain_primes(probes, modulus)
    squares = prod(p * p for p in primes)
    if n < 1 or n * squares > f.precision:
        raise PrecisionExhaustedError(
            f"Нужна точность {n * squares}, есть {f.precision}."
        )
    base = f.coefficient(n)
    chain_holds = f.coefficient(n * squares) == base

    four_term = None
    if len(primes) >= 2:
        p1, p2 = primes[0] ** 2, primes[1] ** 2
        total = (
            f.coefficient(p2 * p1 * n)
            + f.coefficient(p1 * n)
            + f.coefficient(p2 * n)
            + base
        )
        four_term = (total - 4 * base) % modulus == 0

    image = None
    if primes:
        image_coeff = hecke_iterate(f, meta, primes).coefficient(n)
        image = (image_coeff - 2 ** len(primes) * base) % modulus == 0

    holds = chain_holds and four_term is not False and image is not False
    return ChainResult(
        Verdict.VERIFIED if holds else Verdict.REFUTED,
        n,
        primes,
        chain_holds,
        four_term,
        image,
    )


def verify_integer_chain(
        f: QSeries, n0: int, ell: int, i: int, primes: Sequence[int]
) -> ChainResult:
    """a(p_s…p_1·ℓ^i·n0) ≡ 2^s(i+1)a(n0) (mod M)."""
    primes = _chain_primes(primes, f.modulus)
    core_index = ell ** i * n0
    if gcd(prod(primes), core_index) != 1:
        raise ArithmeticDomainError(
            f"Простые {list(primes)} не взаимно просты с {core_index}."
        )
    index = prod(primes) * core_index
    if index > f.precision:
        raise PrecisionExhaustedError(
            f"Нужна точность {index}, есть {f.precision}."
        )
    expected = 2 ** len(primes) * (i + 1) * f.coefficient(n0)
    holds = (f.coefficient(index) - expected) % f.modulus == 0
    return ChainResult(
        Verdict.VERIFIED if holds else Verdict.REFUTED,
        n0,
        primes,
        holds,
    )


def residue_exponents(a_n0: int, modulus: int, s: int) -> Dict[int, int]:
    """Для каждого r наименьшее i_r >= 0 с 2^s(i_r + 1)a(n0) ≡ r (mod M)."""
    if gcd(2 * a_n0, modulus) != 1:
        raise ArithmeticDomainError(
            f"Нужно (2a(n0), M) = 1: a(n0)={a_n0}, M={modulus}."
        )
    inverse = pow(2 ** s * a_n0, -1, modulus)
    return {r: (r * inverse - 1) % modulus for r in range(modulus)}


def zero_class_spot_check(
        f: QSeries, p0: int, bound: Optional[int] = None
) -> Tuple[Verdict, int]:
    """a(p0³m) ≡ 0 (mod M) для всех m, не делящихся на p0.

    Возвращает вердикт и число проверенных m.
    """
    cube = p0 ** 3
    top = f.precision // cube
    if bound is not None:
        top = min(top, bound)
    multipliers = np.arange(1, top + 1, dtype=np.int64)
    multipliers = multipliers[multipliers % p0 != 0]
    if multipliers.size == 0:
        return Verdict.INSUFFICIENT, 0
    hits = f.coeffs[cube * multipliers]
    verdict = Verdict.REFUTED if hits.any() else Verdict.VERIFIED
    return verdict, int(multipliers.size)


def nonresidue_witness(
        f: QSeries, primes: Sequence[int]
) -> Optional[Tuple[int, int]]:
    """Первая пара (p, n) с a(n) ≢ 0 (mod M) и (n/p) = -1."""
    support = np.flatnonzero(f.coeffs)
    if support.size == 0:
        return None
    for p in primes:
        if p == 2:
            continue
        legendre = legendre_vector(p, f.precision + 1)[support]
        found = np.flatnonzero(legendre == -1)
        if found.size:
            return p, int(support[found[0]])
    return None


def euler_phi(m: int) -> int:
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(m).factors)


def density_from_reports(
        reports: Sequence[ProbeReport], descriptor: str = ""
) -> DensityEstimate:
    """Доля подтверждённых среди проверенных и плотность среди всех простых.

    Для класса a mod m по теореме Дирихле вторая равна первой,
    делённой на φ(m).
    """
    tested = [r for r in reports if r.verdict is not Verdict.INSUFFICIENT]
    if not tested:
        raise PrecisionExhaustedError("Нет проверенных простых.")
    share = sum(r.verdict is Verdict.VERIFIED for r in tested) / len(tested)
    a, m = tested[0].residue_class
    return DensityEstimate(
        descriptor or f"{a} mod {m}",
        max(r.p for r in tested),
        share / euler_phi(m),
        share,
    )


def reports_to_jsonl(reports: Sequence[ProbeReport]) -> str:
    return "".join(report.to_json() + "\n" for report in reports)


def jsonl_to_reports(text: str) -> List[ProbeReport]:
    return [ProbeReport.from_json(line) for line in text.splitlines() if line]
