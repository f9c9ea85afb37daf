import sys
from io import StringIO
from pathlib import Path
from typing import Iterable, List, NamedTuple, Optional

import pytest
from django.core.management import call_command, execute_from_command_line
from django.core.management.base import CommandError
from django.test import override_settings

N_TRIALS = 200
SEED = 20240521

CommandResult = NamedTuple(
    "CommandResult",
    [("code", int), ("stdout", str), ("error", Optional[CommandError])],
)


class SafeImportFromContextManager:
    def __init__(
            self,
            import_path: str,
            import_names: Iterable[str],
            import_of: str = "",
    ):
        self._import_path: str = import_path
        self._import_names: Iterable[str] = import_names
        self._import_of = f"{import_of} " if import_of else ""

    def __enter__(self):
        pass

    def __exit__(self, exc_type, exc_value, traceback):
        if exc_type is ImportError:
            disp_imp_names = "`, ".join(self._import_names)
            raise AssertionError(
                f"Убедитесь, что в файле `{self._import_path}` нет ошибок. "
                f"При импорте из него {self._import_of}"
                f"`{disp_imp_names}` возникла ошибка:\n"
                f"{exc_type.__name__}: {exc_value}"
            )


with SafeImportFromContextManager(
        "qseries/series.py", ["QSeries"], import_of="типа ряда"
):
    from qseries import QSeries  # noqa:F401

pytest_plugins = [
    "fixtures.series",
    "fixtures.files",
]


@pytest.fixture(autouse=True)
def lab_settings():
    with override_settings(
            CONGRUENCE_LAB_MEM_CAP=10 ** 7,
            CONGRUENCE_LAB_WORKERS=1,
    ):
        yield


def run_command(name: str, *args: str) -> CommandResult:
    """call_command с перехватом CommandError и stdout."""
    stdout = StringIO()
    try:
        call_command(name, *args, stdout=stdout)
    except CommandError as error:
        return CommandResult(error.returncode, stdout.getvalue(), error)
    return CommandResult(0, stdout.getvalue(), None)


def run_cli(argv: List[str], capsys) -> CommandResult:
    """Запуск как из командной строки: код выхода argparse и SystemExit."""
    code = 0
    try:
        execute_from_command_line(["manage.py", *argv])
    except SystemExit as exit_:
        code = exit_.code or 0
    finally:
        sys.stdout.flush()
    return CommandResult(code, capsys.readouterr().out, None)


def series_path(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_bytes(text.encode("ascii"))
    return path
