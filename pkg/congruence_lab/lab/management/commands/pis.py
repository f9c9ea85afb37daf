import logging
import re
import time

from django.conf import settings

from arith import is_prime, primes_in_class
from census import pi_s
from core.exceptions import ArithmeticDomainError
from lab.forms import PiSForm
from lab.management.base import LabCommand

logger = logging.getLogger(__name__)


def read_primes(path):
    """Простые из файла через пробелы, переводы строк или запятые."""
    with open(path, encoding="utf-8") as file:
        tokens = [token for token in re.split(r"[\s,]+", file.read()) if token]
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise ArithmeticDomainError(f"Некорректный файл простых {path}: {exc}")


class Command(LabCommand):
    help = "Печатает π_s(X) для множества простых."
    form_class = PiSForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--set", dest="prime_set", help="file:PATH | class:a,m | all"
        )
        parser.add_argument("--s")
        parser.add_argument("--x")
        parser.add_argument(
            "--repeat",
            action="store_true",
            help="Разрешить повторяющиеся простые множители.",
        )

    def run(self, config, data):
        kind, args = data["prime_set"]
        bound = data["x"]
        mem_cap = settings.CONGRUENCE_LAB_MEM_CAP
        if kind == "file":
            primes = read_primes(args[0])
        elif kind == "class":
            primes = primes_in_class(*args, bound, mem_cap=mem_cap)
        else:
            primes = is_prime
        started = time.perf_counter()
        total = pi_s(
            primes,
            data["s"],
            bound,
            distinct=not data["repeat"],
            mem_cap=mem_cap,
        )
        logger.info(
            "π_%d(%d) = %d за %.2f с",
            data["s"], bound, total, time.perf_counter() - started,
        )
        self.emit(config, f"{total}\n")
