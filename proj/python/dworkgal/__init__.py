"""Exact verification of the Galois action on the Neron-Severi group of
Dwork quartic surfaces.

The heavy lifting lives in the C++ extension module ``dworkgal._core``;
this package re-exports its functions.
"""

from dworkgal._core import (  # noqa: F401
    DworkgalError,
    admissible,
    character_table,
    chi_pr_row,
    class_sizes,
    count,
    crosscheck_trace,
    curve_counts,
    decompose_chipr,
    eigen_report,
    frobenius_trace,
    galois_line_permutation,
    irreducible_modulus,
    legendre,
    lines,
    matrices,
    squarefree_part,
    t_ns_predicted,
    trace_identity,
    verify_mod3q,
    verify_wan,
)

__all__ = [
    "DworkgalError",
    "admissible",
    "character_table",
    "chi_pr_row",
    "class_sizes",
    "count",
    "crosscheck_trace",
    "curve_counts",
    "decompose_chipr",
    "eigen_report",
    "frobenius_trace",
    "galois_line_permutation",
    "irreducible_modulus",
    "legendre",
    "lines",
    "matrices",
    "squarefree_part",
    "t_ns_predicted",
    "trace_identity",
    "verify_mod3q",
    "verify_wan",
]

__version__ = "0.1.0"
