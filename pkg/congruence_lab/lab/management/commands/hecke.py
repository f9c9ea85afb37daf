from hecke import hecke_iterate
from lab.forms import HeckeForm
from lab.management.base import LabCommand
from qseries import serialize


class Command(LabCommand):
    help = "Применяет операторы Гекке T_p (или T_{p²}) к ряду в формате QS1."
    form_class = HeckeForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--input")
        parser.add_argument("--weight", help="int:k | half:λ")
        parser.add_argument("--level")
        parser.add_argument("--char", default="trivial")
        parser.add_argument("--p", action="append")

    def run(self, config, data):
        if data["p"]:
            image = hecke_iterate(data["series"], data["meta"], data["p"])
            self.emit(config, serialize(image))
            return
        # пустая композиция: вход копируется байт в байт
        raw = config.input.read_bytes()
        if config.out is None:
            self.stdout.write(raw.decode("utf-8"), ending="")
        else:
            config.out.write_bytes(raw)
