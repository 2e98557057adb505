"""Exact arithmetic for Borwein-type products T_{p,s,n}(q).

Wraps the C++ core: dense big-integer expansion, progression sums by
direct summation and by the character-sum formula, sign/bound
verification, the cycle-type sieve identities, and unit-circle sup-norm
sampling.
"""

from ._core import (
    BudgetError,
    CheckError,
    SpecError,
    borw1,
    borw2,
    check_recursions,
    cyclotomic,
    degree,
    error_bound_holds,
    expand,
    f_psi_bruteforce,
    f_psi_closed,
    m_charsum,
    m_direct,
    main_term,
    max_abs_coeff,
    named_parts,
    partition_parity,
    progression_sum,
    ramanujan_sum,
    ratio_trend,
    sign_threshold,
    supnorm,
    verify,
    z_poly,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CheckError",
    "SpecError",
    "borw1",
    "borw2",
    "check_recursions",
    "cyclotomic",
    "degree",
    "error_bound_holds",
    "expand",
    "f_psi_bruteforce",
    "f_psi_closed",
    "m_charsum",
    "m_direct",
    "main_term",
    "max_abs_coeff",
    "named_parts",
    "partition_parity",
    "progression_sum",
    "ramanujan_sum",
    "ratio_trend",
    "sign_threshold",
    "supnorm",
    "verify",
    "z_poly",
]
