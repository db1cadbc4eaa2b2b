"""primelab: prime pairs, constellations, and the numbers they predict.

Segmented sieving with exact censuses of twin and patterned primes,
high-precision Hardy-Littlewood constants, Brun-sum accumulation with
conditional extrapolation, Goldbach verification and representation
counts, and prime-gap statistics. Everything is deterministic and
resumable; see the `cli` module for the command-line entry point.
"""
from .brun import (
    BrunAccumulator,
    BrunRow,
    brun_extrapolate,
    brun_partial,
    brun_table_report,
    format_longdouble,
    parse_longdouble,
)
from .census import (
    CountTable,
    admissible,
    count_pairs_2k,
    count_pattern,
    count_square_plus_one,
    count_twin_almost_primes,
    isolated_progression_witnesses,
    non_twin_prime_run,
    perfect_half_sum_scan,
    twin_form_search,
)
from .config import Config, from_file, resolve
from .constants import (
    HighPrecisionValue,
    Prediction,
    historical_bounds,
    li2,
    li2_precise,
    pattern_constant,
    predict,
    prime_zeta,
    quad_constant,
    twin_constant,
    zeta,
)
from .errors import CheckpointError, MathViolationError, ResourceLimitError
from .gaps import (
    GapRecord,
    GapScan,
    first_occurrence,
    hunt_gap,
    interval_prime_count,
    missing_gaps,
    normalized_gap_extremes,
    primes_between_squares,
    scan_gaps,
    short_interval_above_square,
)
from .goldbach import (
    chen_comparison,
    count_representations,
    euler_variant_check,
    euler_variant_witness,
    exceptional_count,
    representation_report,
    three_primes,
    verify_goldbach,
)
from .sieve import (
    Factorization,
    factorize_64,
    fill_segment,
    is_prime_64,
    iter_primes,
    iter_segments,
    odd_prime_flags,
    primes_array,
    prp_test,
    small_primes,
)

__version__ = "0.1.0"

__all__ = [
    "BrunAccumulator",
    "BrunRow",
    "CheckpointError",
    "Config",
    "CountTable",
    "Factorization",
    "GapRecord",
    "GapScan",
    "HighPrecisionValue",
    "MathViolationError",
    "Prediction",
    "ResourceLimitError",
    "admissible",
    "brun_extrapolate",
    "brun_partial",
    "brun_table_report",
    "chen_comparison",
    "count_pairs_2k",
    "count_pattern",
    "count_representations",
    "count_square_plus_one",
    "count_twin_almost_primes",
    "euler_variant_check",
    "euler_variant_witness",
    "exceptional_count",
    "factorize_64",
    "fill_segment",
    "first_occurrence",
    "format_longdouble",
    "from_file",
    "historical_bounds",
    "hunt_gap",
    "interval_prime_count",
    "is_prime_64",
    "isolated_progression_witnesses",
    "iter_primes",
    "iter_segments",
    "li2",
    "li2_precise",
    "missing_gaps",
    "non_twin_prime_run",
    "normalized_gap_extremes",
    "odd_prime_flags",
    "parse_longdouble",
    "pattern_constant",
    "perfect_half_sum_scan",
    "predict",
    "prime_zeta",
    "primes_array",
    "primes_between_squares",
    "prp_test",
    "quad_constant",
    "representation_report",
    "resolve",
    "scan_gaps",
    "short_interval_above_square",
    "small_primes",
    "three_primes",
    "twin_constant",
    "twin_form_search",
    "verify_goldbach",
    "zeta",
]
