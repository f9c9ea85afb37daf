from census import square_class_support, support_growth
from lab.forms import SquareClassForm
from lab.management.base import LabCommand


class Command(LabCommand):
    help = "Бесквадратные ядра показателей с a(n) ≢ 0 (mod ℓ)."
    form_class = SquareClassForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--input")
        parser.add_argument("--ell")
        parser.add_argument(
            "--growth", help="Точности через запятую: число ядер на каждой."
        )

    def run(self, config, data):
        f = data["series"]
        if data["growth"]:
            lines = [
                f"{precision},{count}"
                for precision, count in support_growth(
                    f, data["ell"], data["growth"]
                )
            ]
        else:
            kernels = square_class_support(f, data["ell"])
            lines = [str(n) for n in sorted(kernels)]
        self.emit(config, "".join(line + "\n" for line in lines))
