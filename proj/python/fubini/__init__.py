"""Exact Fubini-polynomial computations and mod-p congruence verification.

Thin Python surface over the C++ core: polynomial families as coefficient
lists of Python ints (low to high), checks and sweeps as plain dicts, and
exact rationals passed as "NUM" or "NUM/DEN" strings.
"""

from fubini._core import (
    binomial,
    check_ids,
    derivative_identity_check,
    egf_matches,
    factorial,
    falling,
    fubini,
    fubini_multi,
    fubini_rs,
    log_egf_matches,
    mod_inv,
    ordered_partition_oracle,
    p_poly,
    real_roots_certify,
    reduce_mod,
    rising,
    run_check,
    series_eval,
    stirling1_r_unsigned,
    stirling2,
    stirling2_r,
    sturm_count_nonpositive,
    sweep,
    t_poly,
    umbral_eval_poly,
)

__all__ = [
    "binomial",
    "check_ids",
    "derivative_identity_check",
    "egf_matches",
    "factorial",
    "falling",
    "fubini",
    "fubini_multi",
    "fubini_rs",
    "log_egf_matches",
    "mod_inv",
    "ordered_partition_oracle",
    "p_poly",
    "real_roots_certify",
    "reduce_mod",
    "rising",
    "run_check",
    "series_eval",
    "stirling1_r_unsigned",
    "stirling2",
    "stirling2_r",
    "sturm_count_nonpositive",
    "sweep",
    "t_poly",
    "umbral_eval_poly",
]

__version__ = "0.1.0"
