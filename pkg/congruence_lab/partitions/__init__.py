from .exports import csv_to_table, table_to_csv
from .tables import (
    DEFAULT_MEM_CAP,
    PartitionTable,
    check_capacity,
    p_exact_small,
    p_table,
    regular_table,
)
from .targets import (
    RestrictedSeries,
    TargetKind,
    f_target,
    g_target,
    regular_target,
)

__all__ = [
    "DEFAULT_MEM_CAP",
    "PartitionTable",
    "RestrictedSeries",
    "TargetKind",
    "check_capacity",
    "csv_to_table",
    "f_target",
    "g_target",
    "p_exact_small",
    "p_table",
    "regular_table",
    "regular_target",
    "table_to_csv",
]
