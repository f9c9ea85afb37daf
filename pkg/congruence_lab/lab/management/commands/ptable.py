from django.conf import settings

from lab.forms import PTableForm
from lab.management.base import LabCommand
from partitions import (
    f_target,
    g_target,
    p_table,
    regular_table,
    regular_target,
    table_to_csv,
)
from qseries import QSeries, reduce, serialize

TARGETS = {
    "ftarget": f_target,
    "gtarget": g_target,
    "rtarget": regular_target,
}


class Command(LabCommand):
    help = "Выгружает таблицы p(n), b_{p^a}(n) и ряды-мишени."
    form_class = PTableForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--kind",
            help="partition | regular:p,a | ftarget:l,j | gtarget:l,j "
                 "| rtarget:p,a,j",
        )
        parser.add_argument("--modulus")
        parser.add_argument("--xmax")
        parser.add_argument("--format", choices=("qs1", "csv"), default="qs1")

    def series(self, config, kind, args) -> QSeries:
        mem_cap = settings.CONGRUENCE_LAB_MEM_CAP
        if kind == "partition":
            return p_table(
                config.modulus, config.xmax, mem_cap=mem_cap
            ).as_series()
        if kind == "regular":
            values = regular_table(
                *args, config.modulus, config.xmax, mem_cap=mem_cap
            )
            return QSeries(config.modulus, config.xmax, values)
        target = TARGETS[kind](*args, config.xmax, mem_cap=mem_cap).series
        if config.modulus:
            return reduce(target, config.modulus)
        return target

    def run(self, config, data):
        kind, args = data["kind"]
        series = self.series(config, kind, args)
        if data["format"] == "csv":
            self.emit(config, table_to_csv(series.coeffs))
        else:
            self.emit(config, serialize(series))
