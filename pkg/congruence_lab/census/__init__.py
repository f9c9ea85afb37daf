from .almost_primes import landau_estimate, pi_s
from .probes import (
    ChainResult,
    DensityEstimate,
    ProbeKind,
    ProbeReport,
    Verdict,
    density_from_reports,
    jsonl_to_reports,
    nonresidue_witness,
    probe_eigen,
    probe_integer,
    reports_to_jsonl,
    residue_exponents,
    verify_chain,
    verify_integer_chain,
    zero_class_spot_check,
)
from .report import (
    CurveScale,
    ReportRow,
    WellDistributionReport,
    comparison_curve,
    csv_to_rows,
    report_to_csv,
    wd_report,
)
from .squareclass import square_class_support, support_growth
from .tables import (
    CensusTable,
    census,
    checkpoint_grid,
    count_residues,
    merge_counts,
)

__all__ = [
    "CensusTable",
    "ChainResult",
    "CurveScale",
    "DensityEstimate",
    "ProbeKind",
    "ProbeReport",
    "ReportRow",
    "Verdict",
    "WellDistributionReport",
    "census",
    "checkpoint_grid",
    "comparison_curve",
    "count_residues",
    "csv_to_rows",
    "density_from_reports",
    "jsonl_to_reports",
    "landau_estimate",
    "merge_counts",
    "nonresidue_witness",
    "pi_s",
    "probe_eigen",
    "probe_integer",
    "report_to_csv",
    "reports_to_jsonl",
    "residue_exponents",
    "square_class_support",
    "support_growth",
    "verify_chain",
    "verify_integer_chain",
    "wd_report",
    "zero_class_spot_check",
]
