"""Сравнение переписи с кривой √X/log X·(log log X)^s."""

import csv
import enum
import io
from dataclasses import dataclass
from math import log, sqrt
from typing import Dict, List, Optional, Tuple

from core.exceptions import ArithmeticDomainError

from .tables import MIN_CHECKPOINT, CensusTable

CSV_HEADER = ("r", "X", "count", "curve", "fitted_C")


class CurveScale(str, enum.Enum):
    HALF = "half"
    FULL = "full"


def comparison_curve(x: int, s: int, scale: CurveScale = CurveScale.HALF):
    """√X/log X·(log log X)^s, либо X/log X·(log log X)^s."""
    base = sqrt(x) if scale is CurveScale.HALF else x
    return base / log(x) * log(log(x)) ** s


@dataclass(frozen=True)
class ReportRow:
    residue: int
    x: int
    count: int
    curve: Optional[float]
    fitted: Optional[float]


@dataclass(frozen=True)
class WellDistributionReport:
    modulus: int
    s: int
    scale: CurveScale
    rows: Tuple[ReportRow, ...]
    fitted: Dict[int, Optional[float]]
    unhit: Tuple[int, ...]

    def flags(self) -> List[str]:
        return [f"residue class unhit: {r}" for r in self.unhit]


def wd_report(
        table: CensusTable,
        s: int,
        *,
        scale: CurveScale = CurveScale.HALF,
        linear_zero: bool = False,
        minimum: int = MIN_CHECKPOINT,
) -> WellDistributionReport:
    """Подгоняет C = min_i count_r(X_i)/curve(X_i) для каждого вычета r.

    Точки X_i < minimum остаются в таблице без кривой: там log log X
    не определён или не положителен. При linear_zero класс r = 0
    сравнивается с линейной кривой X.
    """
    if s < 0:
        raise ArithmeticDomainError(f"s должно быть >= 0: {s}.")
    rows = []
    fitted = {}
    for residue in range(table.modulus):
        best = None
        for x, counts in table.checkpoints:
            count = int(counts[residue])
            curve = None
            if x >= minimum:
                if linear_zero and residue == 0:
                    curve = float(x)
                else:
                    curve = comparison_curve(x, s, scale)
                ratio = count / curve
                best = ratio if best is None else min(best, ratio)
            rows.append(ReportRow(residue, x, count, curve, best))
        fitted[residue] = best
    return WellDistributionReport(
        table.modulus,
        s,
        scale,
        tuple(rows),
        fitted,
        tuple(table.unhit()),
    )


def _number(value: Optional[float]) -> str:
    return "" if value is None else format(value, ".10g")


def report_to_csv(report: WellDistributionReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow((
            row.residue,
            row.x,
            row.count,
            _number(row.curve),
            _number(row.fitted),
        ))
    return buffer.getvalue()


def csv_to_rows(text: str) -> List[ReportRow]:
    """Обратное чтение CSV отчёта."""

    def optional(value: str) -> Optional[float]:
        return float(value) if value else None

    return [
        ReportRow(
            int(row["r"]),
            int(row["X"]),
            int(row["count"]),
            optional(row["curve"]),
            optional(row["fitted_C"]),
        )
        for row in csv.DictReader(io.StringIO(text))
    ]
