from django.conf import settings
from django.core.management.base import CommandError

from census import CurveScale, census, report_to_csv, wd_report
from core.exceptions import (
    EXIT_UNHIT_CLASS,
    ModulusMismatchError,
    PrecisionExhaustedError,
)
from lab.forms import CensusForm
from lab.management.base import LabCommand
from partitions import p_table, regular_table
from qseries import read_series, reduce


class Command(LabCommand):
    help = "Перепись вычетов a(n) mod M с отчётом о равномерности."
    form_class = CensusForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--sequence", help="partition | regular:p,a | file:PATH"
        )
        parser.add_argument("--modulus")
        parser.add_argument("--xmax")
        parser.add_argument("--s", default="1")
        parser.add_argument("--ratio")
        parser.add_argument("--scale", choices=("half", "full"))
        parser.add_argument("--linear-zero", action="store_true")
        parser.add_argument("--workers")

    def values(self, config, kind, args, mem_cap):
        if kind == "partition":
            return p_table(config.modulus, config.xmax, mem_cap=mem_cap).values
        if kind == "regular":
            p, a = args
            return regular_table(
                p, a, config.modulus, config.xmax, mem_cap=mem_cap
            )
        series = read_series(args[0])
        if series.modulus % config.modulus:
            raise ModulusMismatchError(
                f"Ряд задан mod {series.modulus}, нельзя свести к "
                f"mod {config.modulus}."
            )
        if series.precision < config.xmax:
            raise PrecisionExhaustedError(
                f"Точность ряда {series.precision} меньше X={config.xmax}."
            )
        return reduce(series, config.modulus).coeffs

    def run(self, config, data):
        mem_cap = settings.CONGRUENCE_LAB_MEM_CAP
        minimum = settings.CONGRUENCE_LAB_MIN_CHECKPOINT
        kind, args = data["sequence"]
        table = census(
            self.values(config, kind, args, mem_cap),
            config.modulus,
            config.xmax,
            config.ratio,
            minimum=minimum,
            workers=self.setting(data, "workers", "CONGRUENCE_LAB_WORKERS"),
            mem_cap=mem_cap,
        )
        report = wd_report(
            table,
            data["s"] if data["s"] is not None else 1,
            scale=CurveScale(data["scale"] or CurveScale.HALF.value),
            linear_zero=data["linear_zero"],
            minimum=minimum,
        )
        self.emit(config, report_to_csv(report))
        if report.unhit:
            raise CommandError(
                "; ".join(report.flags()), returncode=EXIT_UNHIT_CLASS
            )
