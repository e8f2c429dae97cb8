"""Desk-scale power sieve for s-th powers and its application to counting
consecutive s-free numbers, with brute-force oracles for every identity and
bound the machinery relies on."""

from .arithmetic import (
    Factorization,
    SfreeSegment,
    WordSizeError,
    count_squarefull,
    divisor_count,
    factorize,
    mobius,
    sfree_segment,
    squarefull_decompose,
)
from .characters import (
    Character,
    InadmissiblePrimeError,
    char_eval,
    find_primitive_root,
    gauss_sum,
    order_s_character,
    pair_char_sum,
)
from .expsums import (
    ExpSumParams,
    chalk_smith_check,
    completion_sum,
    crt_cd,
    s1,
    s2,
    s2_bound_grid,
    s_full,
    verify_factorization,
)
from .sieve import (
    SievePrimeSet,
    Weights,
    admissible_primes,
    inner_count_identity,
    support_cap_counterexample,
    sieve_lhs,
    sieve_rhs,
    sigma_quantity,
    twin_pair_weight,
    v_bounds,
)
from .twins import (
    ExponentTable,
    QuadrupleQuery,
    TwinScanRow,
    count_N,
    count_twin_sfree,
    cs_constant,
    error_scan,
    exponent_table,
    hensel_count,
    hensel_solutions,
    q_choice,
    quadruple_count,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "ExpSumParams",
    "ExponentTable",
    "Factorization",
    "InadmissiblePrimeError",
    "QuadrupleQuery",
    "SfreeSegment",
    "SievePrimeSet",
    "TwinScanRow",
    "Weights",
    "WordSizeError",
    "admissible_primes",
    "chalk_smith_check",
    "char_eval",
    "completion_sum",
    "count_N",
    "count_squarefull",
    "count_twin_sfree",
    "crt_cd",
    "cs_constant",
    "divisor_count",
    "error_scan",
    "exponent_table",
    "factorize",
    "find_primitive_root",
    "gauss_sum",
    "hensel_count",
    "hensel_solutions",
    "inner_count_identity",
    "mobius",
    "order_s_character",
    "pair_char_sum",
    "q_choice",
    "quadruple_count",
    "support_cap_counterexample",
    "s1",
    "s2",
    "s2_bound_grid",
    "s_full",
    "sfree_segment",
    "sieve_lhs",
    "sieve_rhs",
    "sigma_quantity",
    "squarefull_decompose",
    "twin_pair_weight",
    "v_bounds",
    "verify_factorization",
]
