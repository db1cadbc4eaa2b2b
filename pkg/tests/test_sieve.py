import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from primelab.config import Config
from primelab.sieve import (
    composite_run,
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

from conftest import naive_is_prime, naive_sieve


def test_small_primes_against_naive():
    assert list(small_primes(10**4)) == naive_sieve(10**4)


def test_small_primes_edges():
    assert list(small_primes(2)) == [2]
    assert list(small_primes(3)) == [2, 3]
    assert list(small_primes(1)) == []


def test_primes_array_vs_naive(primes_1e6):
    got = primes_array(10**6)
    assert got.tolist() == primes_1e6


def test_iter_primes_crosses_segments(primes_1e6):
    cfg = Config(segment_bytes=1 << 10)  # tiny segments, many boundaries
    assert list(iter_primes(3 * 10**4, cfg)) == [p for p in primes_1e6
                                                 if p <= 3 * 10**4]


def test_segment_counts_sum_to_pi(primes_1e6):
    cfg = Config(segment_bytes=1 << 12)
    total = sum(seg.count() for seg in iter_segments(10**6, cfg))
    assert total == len(primes_1e6)


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=1, max_value=3000))
def test_fill_segment_window_matches_naive(lo2, width):
    lo = 2 * (lo2 // 2) + 2  # even, >= 2
    hi = lo + width
    base = small_primes(max(3, int(hi**0.5) + 1))
    bits = fill_segment(lo, hi, base)
    odds = [n for n in range(lo + 1, hi, 2)]
    assert len(bits) == len(odds)
    for flag, n in zip(bits, odds):
        assert bool(flag) == naive_is_prime(n), n


def test_odd_prime_flags_layout(prime_set_1e6):
    flags = odd_prime_flags(10**5)
    for i in (0, 1, 2, 3, 17, 49999):
        n = 2 * i + 1
        assert bool(flags[i]) == (n in prime_set_1e6)


def test_is_prime_64_exhaustive_small(prime_set_1e6):
    for n in range(2 * 10**5):
        assert is_prime_64(n) == (n in prime_set_1e6), n


def test_is_prime_64_known_pseudoprimes():
    # strong-pseudoprime classics and Carmichael numbers
    for n in (341, 561, 1729, 25326001, 3215031751):
        assert not is_prime_64(n)
    assert is_prime_64(2**61 - 1)  # Mersenne prime
    with pytest.raises(ValueError):
        is_prime_64(2**64)  # out of the deterministic witness domain


@given(st.integers(min_value=2, max_value=2**64 - 1))
def test_is_prime_64_vs_sympy(n):
    assert is_prime_64(n) == sympy.isprime(n)


def test_prp_matches_deterministic_below_64():
    rnd = random.Random(7)
    for _ in range(300):
        n = rnd.randrange(3, 10**6) | 1
        assert prp_test(n) == is_prime_64(n)


def test_prp_large_known():
    assert prp_test(2**127 - 1)  # Lucas' Mersenne prime
    assert not prp_test(2**127 + 1)
    assert not prp_test(2**67 - 1)  # Cole's Mersenne composite
    assert prp_test(10**20 + 39)


@given(st.integers(min_value=2, max_value=2**40))
def test_factorize_recomposes(n):
    f = factorize_64(n)
    prod = 1
    for p, e in f.factors:
        assert is_prime_64(p)
        prod *= p**e
    assert prod == n
    assert list(f.factors) == sorted(f.factors)


def test_factorize_counts():
    f = factorize_64(2**5 * 3**2 * 97)
    assert f.as_dict() == {2: 5, 3: 2, 97: 1}
    assert f.big_omega == 8
    assert f.small_omega == 3


def test_factorize_semiprime_64():
    p, q = 4294967291, 4294967279  # both prime, product near 2**64
    f = factorize_64(p * q)
    assert f.as_dict() == {q: 1, p: 1}


def test_composite_run():
    run = composite_run(5)
    assert len(run) == 5
    assert run == list(range(run[0], run[0] + 5))
    for v in run:
        assert not is_prime_64(v)


def test_composite_run_big_guard():
    with pytest.raises(ValueError):
        composite_run(21)
    run = composite_run(25, allow_big=True)
    assert len(run) == 25 and all(not sympy.isprime(v) for v in run[:3])
