from django.core.management.base import CommandError

from lab.forms import SelfCheckForm
from lab.management.base import LabCommand
from lab.selfcheck import run_suites

DEFAULT_TRIALS = 20


class Command(LabCommand):
    help = "Случайные проверки законов кольца и операторов Гекке."
    form_class = SelfCheckForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--trials", default=str(DEFAULT_TRIALS))

    def run(self, config, data):
        results = run_suites(config.seed, data["trials"] or DEFAULT_TRIALS)
        self.emit(config, "".join(f"{result}\n" for result in results))
        failed = [result.name for result in results if not result.ok]
        if failed:
            raise CommandError(
                f"Не пройдены наборы: {', '.join(failed)}", returncode=1
            )
