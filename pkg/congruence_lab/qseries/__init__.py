from .eta import (
    EtaProductSpec,
    delta_series,
    eta_product,
    inverse_pentagonal,
    pentagonal_series,
    theta_series,
)
from .formats import deserialize, read_series, serialize, write_series
from .series import (
    QSeries,
    add,
    congruent,
    inverse,
    mul,
    neg,
    power,
    reduce,
    scale,
    shift,
    sub,
    truncate,
)

__all__ = [
    "EtaProductSpec",
    "QSeries",
    "add",
    "congruent",
    "delta_series",
    "deserialize",
    "eta_product",
    "inverse",
    "inverse_pentagonal",
    "mul",
    "neg",
    "pentagonal_series",
    "power",
    "read_series",
    "reduce",
    "scale",
    "serialize",
    "shift",
    "sub",
    "theta_series",
    "truncate",
    "write_series",
]
