import pytest
from hypothesis import given
from hypothesis import strategies as st

from primelab.errors import MathViolationError
from primelab.goldbach import (
    chen_comparison,
    count_by_complement_scan,
    count_by_prime_lookup,
    count_representations,
    euler_variant_check,
    euler_variant_witness,
    exceptional_count,
    representation_report,
    three_primes,
    verify_goldbach,
)

from conftest import naive_is_prime, naive_sieve


def brute_unordered(n, prime_set, allow_one=False):
    count = 0
    for a in range(2, n // 2 + 1):
        if a in prime_set and (n - a) in prime_set:
            count += 1
    if allow_one and naive_is_prime(n - 1):
        count += 1
    return count


@pytest.fixture(scope="module")
def prime_set_2e4():
    return set(naive_sieve(2 * 10**4))


def test_small_table(prime_set_2e4):
    # classic opening table: 4=2+2, 6=3+3, 8=3+5, 10=3+7=5+5, ...
    want = {4: 1, 6: 1, 8: 1, 10: 2, 12: 1, 14: 2, 16: 2, 18: 2,
            20: 2, 22: 3, 24: 3, 26: 3, 28: 2, 30: 3}
    for n, w in want.items():
        assert count_representations(n) == w
        assert brute_unordered(n, prime_set_2e4) == w


def test_both_methods_vs_brute_force(prime_set_2e4, rng):
    ns = [4, 6, 8, 10, 12] + [rng.randrange(3, 10**4) * 2 for _ in range(60)]
    for n in ns:
        want = brute_unordered(n, prime_set_2e4)
        assert count_by_prime_lookup(n) == want, n
        assert count_by_complement_scan(n) == want, n


@given(st.integers(min_value=2, max_value=5000))
def test_ordered_identity(half):
    n = 2 * half
    u = count_representations(n, "unordered")
    o = count_representations(n, "ordered")
    assert o == 2 * u - (1 if naive_is_prime(half) else 0)


def test_allow_one_convention(prime_set_2e4):
    # 6 = 1+5 under the historical reading that treats 1 as a unit summand
    assert count_representations(6, allow_one=True) == 2
    assert count_representations(6, allow_one=False) == 1
    for n in (8, 12, 14, 30, 102):
        want = brute_unordered(n, prime_set_2e4, allow_one=True)
        assert count_representations(n, allow_one=True) == want


def test_domain_validation():
    for bad in (3, 2, -4, 7):
        with pytest.raises(ValueError):
            count_representations(bad)
    with pytest.raises(ValueError):
        count_representations(10, "sideways")
    with pytest.raises(ValueError):
        verify_goldbach(10, 4)


def test_verify_range_clean():
    assert verify_goldbach(4, 10**6) is None
    assert verify_goldbach(4, 4) is None
    assert verify_goldbach(10**6, 2 * 10**6) is None


def test_exceptional_count_zero():
    res = exceptional_count(10**6)
    assert res.count == 0 and res.ratio == 0.0
    assert exceptional_count(4).count == 0


def test_representation_report_agrees():
    rep = representation_report(10**4)
    assert rep["methods_agree"]
    assert rep["unordered"] == 127
    assert rep["ordered"] == 2 * 127  # 5000 is not prime
    assert rep["unordered_allow_one"] == 127  # 9999 = 3*3*11*101


def test_report_detects_divergence(monkeypatch):
    import primelab.goldbach as g
    monkeypatch.setattr(g, "count_by_complement_scan", lambda n: 0)
    with pytest.raises(MathViolationError):
        representation_report(100)


def test_euler_variant_clean_and_witness():
    assert euler_variant_check(10**5) == []
    assert euler_variant_witness(6) == (1, 5)
    # 30 = 13 + 17 with both parts allowed; smallest-a witness is (1, 29)
    a, b = euler_variant_witness(30)
    assert (a, b) == (1, 29)
    allowed = lambda v: v == 1 or (naive_is_prime(v) and v % 4 == 1)
    assert allowed(a) and naive_is_prime(b)
    with pytest.raises(ValueError):
        euler_variant_witness(8)  # 8 % 4 == 0 is out of scope


def test_three_primes_known():
    assert three_primes(9) == (3, 3, 3)
    assert three_primes(21) == (3, 5, 13)
    assert three_primes(27) == (3, 5, 19)


def test_three_primes_exhaustive_small():
    for n in range(9, 2001, 2):
        a, b, c = three_primes(n)
        assert a + b + c == n
        assert a == 3
        for part in (a, b, c):
            assert part > 2 and naive_is_prime(part)


def test_three_primes_domain():
    with pytest.raises(ValueError):
        three_primes(8)
    with pytest.raises(ValueError):
        three_primes(7)


def test_chen_comparison_shape():
    rep = chen_comparison(10**5)
    assert rep["pi12"] >= rep["pi2"]
    assert rep["ratio_pi12_vs_2alpha_li2"] > 0
    assert rep["chen_expression_value"] > 0
    assert rep["wu_coefficient"] == 1.104
    with pytest.raises(ValueError):
        chen_comparison(100)
