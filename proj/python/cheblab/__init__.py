"""Python access to the cheblab C++ core."""

from ._cheblab import (
    F,
    base_change,
    best_subgroup,
    census,
    character_table,
    coefficient_sweep,
    conductor_discriminant,
    cyclotomic_bounds,
    group_info,
    least_prime,
    phi1,
    phi2,
    section2_table,
    selberg,
    verify_all,
    weight_check,
)

__all__ = [
    "F",
    "base_change",
    "best_subgroup",
    "census",
    "character_table",
    "coefficient_sweep",
    "conductor_discriminant",
    "cyclotomic_bounds",
    "group_info",
    "least_prime",
    "phi1",
    "phi2",
    "section2_table",
    "selberg",
    "verify_all",
    "weight_check",
]
