"""Exact arithmetic for unlimited parity alternating partitions.

A partition is parity alternating when its distinct part values alternate
between odd and even as they decrease.  This package enumerates and counts
such partitions, verifies the sum-raising injection behind the strict
monotonicity of the counting sequence, expands three independent generating
functions (one over the field Q(sqrt 5)), checks the underlying Heine
transformation identity exactly, and probes the exponential growth rate
numerically.
"""

from .exactarith import (
    PHI,
    PHI_INV,
    Quad5,
    TruncatedSeries,
    geom_factor,
    geometric_tail,
    pochhammer,
    quad5_arith,
    series_mul,
)
from .genfunc import (
    ChainReport,
    IntegralityError,
    PipelineResult,
    heine_check,
    pa_series_identity_chain,
    series_G1,
    series_G2,
    series_pa_o,
)
from .monotone import (
    CaseId,
    InjectionReport,
    classify_case,
    phi,
    verify_injection,
    witness_partition,
)
from .partitions import (
    DistinctProfile,
    Partition,
    ResourceLimitError,
    conjugate,
    count_pa_dp,
    distinct_profile,
    enumerate_pa,
    is_pa,
    is_pa_smallest_odd,
    is_postar,
    partitions_of,
)

__version__ = "0.1.0"

__all__ = [
    "PHI",
    "PHI_INV",
    "Quad5",
    "TruncatedSeries",
    "geom_factor",
    "geometric_tail",
    "pochhammer",
    "quad5_arith",
    "series_mul",
    "ChainReport",
    "IntegralityError",
    "PipelineResult",
    "heine_check",
    "pa_series_identity_chain",
    "series_G1",
    "series_G2",
    "series_pa_o",
    "CaseId",
    "InjectionReport",
    "classify_case",
    "phi",
    "verify_injection",
    "witness_partition",
    "DistinctProfile",
    "Partition",
    "ResourceLimitError",
    "conjugate",
    "count_pa_dp",
    "distinct_profile",
    "enumerate_pa",
    "is_pa",
    "is_pa_smallest_odd",
    "is_postar",
    "partitions_of",
    "__version__",
]
