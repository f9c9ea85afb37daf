"""Общая часть подкоманд лаборатории."""

import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import EXIT_USAGE, LabError

logger = logging.getLogger(__name__)

VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class LabCommand(BaseCommand):
    """Флаги разбираются формой, LabError превращается в код выхода."""

    requires_system_checks = []
    form_class = None

    def add_arguments(self, parser):
        parser.add_argument("--out", help="Файл результата, иначе stdout.")
        parser.add_argument("--seed", help="Зерно генератора.")

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options["verbosity"], logging.DEBUG)
        for name in settings.LAB_LOGGERS:
            logging.getLogger(name).setLevel(level)

        form = self.form_class(data=options)
        if not form.is_valid():
            raise CommandError(
                form.errors.as_text(), returncode=EXIT_USAGE
            )
        config = form.run_config()
        logger.debug("%s: %s", config.subcommand, config)
        try:
            self.run(config, form.cleaned_data)
        except LabError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)

    def run(self, config, data):
        raise NotImplementedError

    def emit(self, config, text: str) -> None:
        """Пишет результат в --out или в stdout."""
        if config.out is None:
            self.stdout.write(text, ending="")
            return
        with open(config.out, "w", encoding="utf-8", newline="\n") as file:
            file.write(text)

    @staticmethod
    def setting(data, key, name):
        value = data.get(key)
        return getattr(settings, name) if value is None else value
