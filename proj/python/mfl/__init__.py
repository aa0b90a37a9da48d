"""Matching-field ideals of Schubert varieties in the flag variety."""

from ._mfl import (
    CapabilityError,
    build_T,
    classify,
    classify_combinatorial,
    count_table,
    gamma,
    in_P,
    is_312_free,
    is_standard,
    quadratic_relations,
    run_cli,
    verify_bijection,
    z_count,
    z_family,
)

__all__ = [
    "CapabilityError",
    "build_T",
    "classify",
    "classify_combinatorial",
    "count_table",
    "gamma",
    "in_P",
    "is_312_free",
    "is_standard",
    "quadratic_relations",
    "run_cli",
    "verify_bijection",
    "z_count",
    "z_family",
]
