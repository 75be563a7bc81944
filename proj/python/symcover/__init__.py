"""Nonexistence checks for symmetric (v, k, lambda)-coverings with 2-regular excess."""

from ._symcover import (
    DegenerateMatrix,
    ExcessNotTwoRegular,
    InvalidParameters,
    NonSquareDeterminant,
    NotACovering,
    ads_scan,
    analyze,
    count_feasible,
    cp_x,
    cyclic_scan,
    det_B,
    det_x,
    enumerate_feasible,
    g_values,
    hilbert,
    is_prime,
    legendre,
    params_for,
    parse_cycle_type,
    reproduce_table,
    sample_feasible,
    scan,
    verify_covering,
    verify_covering_file,
)

__all__ = [
    "DegenerateMatrix",
    "ExcessNotTwoRegular",
    "InvalidParameters",
    "NonSquareDeterminant",
    "NotACovering",
    "ads_scan",
    "analyze",
    "count_feasible",
    "cp_x",
    "cyclic_scan",
    "det_B",
    "det_x",
    "enumerate_feasible",
    "g_values",
    "hilbert",
    "is_prime",
    "legendre",
    "params_for",
    "parse_cycle_type",
    "reproduce_table",
    "sample_feasible",
    "scan",
    "verify_covering",
    "verify_covering_file",
]
