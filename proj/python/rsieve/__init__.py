"""Rolling, segmented and incremental prime sieves."""

from ._core import (
    AtkinInterval,
    IncrementalSieve,
    InvariantViolation,
    RollingSieve,
    base_primes,
    chebyshev_check,
    count,
    count_rolling_work,
    decode_bitmap,
    encode_bitmap,
    expected_pushes,
    incremental_profile,
    mertens_check,
    pnt_check,
    primes,
    segmented_sieve,
    sieve_segment,
    simple_sieve,
    trial_division_is_prime,
)

__all__ = [
    "AtkinInterval",
    "IncrementalSieve",
    "InvariantViolation",
    "RollingSieve",
    "base_primes",
    "chebyshev_check",
    "count",
    "count_rolling_work",
    "decode_bitmap",
    "encode_bitmap",
    "expected_pushes",
    "incremental_profile",
    "mertens_check",
    "pnt_check",
    "primes",
    "segmented_sieve",
    "sieve_segment",
    "simple_sieve",
    "trial_division_is_prime",
]
