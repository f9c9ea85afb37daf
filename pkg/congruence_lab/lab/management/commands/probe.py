from django.conf import settings

from census import probe_eigen, probe_integer, reports_to_jsonl
from lab.forms import ProbeForm
from lab.management.base import LabCommand

DEFAULT_BUDGET = 50


class Command(LabCommand):
    help = "Ищет простые p с f|T ≡ c·f (mod M); выводит JSON lines."
    form_class = ProbeForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--input")
        parser.add_argument("--weight", help="int:k | half:λ")
        parser.add_argument("--level")
        parser.add_argument("--char", default="trivial")
        parser.add_argument("--scalar", default="2")
        parser.add_argument("--class", dest="residue_class", help="a,m")
        parser.add_argument("--budget", default=str(DEFAULT_BUDGET))
        parser.add_argument("--min-precision", default="1")
        parser.add_argument("--n0", help="Целый вес: a(n0·ℓ^i).")
        parser.add_argument("--power", help="Показатель i для --n0.")
        parser.add_argument("--workers")

    def run(self, config, data):
        f = data["series"]
        meta = data["meta"]
        workers = self.setting(data, "workers", "CONGRUENCE_LAB_WORKERS")
        residue_class = data["residue_class"]
        mem_cap = settings.CONGRUENCE_LAB_MEM_CAP
        if data["n0"] is not None:
            reports = probe_integer(
                f,
                meta,
                data["n0"],
                data["power"],
                config.budget,
                residue_class=residue_class or (1, 1),
                workers=workers,
                mem_cap=mem_cap,
            )
        else:
            reports = probe_eigen(
                f,
                meta,
                residue_class or (1, meta.level * f.modulus),
                data["scalar"] if data["scalar"] is not None else 2,
                config.budget,
                min_precision=data["min_precision"] or 1,
                workers=workers,
                mem_cap=mem_cap,
            )
        reports.sort(key=lambda report: (report.kind.value, report.p))
        self.emit(config, reports_to_jsonl(reports))
