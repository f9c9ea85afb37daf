"""Выгрузка таблиц в CSV `n,value`."""

import csv
import io
from typing import Iterable


def table_to_csv(values: Iterable[int]) -> str:
    """CSV с заголовком n,value и строкой на каждый n."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("n", "value"))
    writer.writerows((n, int(value)) for n, value in enumerate(values))
    return buffer.getvalue()


def csv_to_table(text: str) -> list:
    """Значения из CSV, записанного table_to_csv."""
    reader = csv.DictReader(io.StringIO(text))
    return [int(row["value"]) for row in reader]
