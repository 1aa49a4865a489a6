from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.numtheory import sieve_primes
from dseq.sequence import (
    PRIME_CAP,
    DigitHistogram,
    ReciprocalSpec,
    digit_at,
    digit_prefix,
    digit_stream,
    histogram,
    l_multiplier,
    long_division_digits,
)

SMALL_PRIMES = [p for p in sieve_primes(2_000) if p not in (2, 5)]
prime_st = st.sampled_from(SMALL_PRIMES)


def test_l_multiplier_examples():
    assert l_multiplier(7) == 7
    assert l_multiplier(13) == 3
    assert l_multiplier(19) == 1
    assert l_multiplier(601) == 9
    with pytest.raises(ValueError):
        l_multiplier(2)
    with pytest.raises(ValueError):
        l_multiplier(5)
    with pytest.raises(ValueError):
        l_multiplier(9)


@given(prime_st)
def test_l_multiplier_identity(p):
    assert (l_multiplier(p) * p) % 10 == 9


def test_spec_for_prime():
    spec = ReciprocalSpec.for_prime(7)
    assert (spec.p, spec.l, spec.period) == (7, 7, 6)
    spec = ReciprocalSpec.for_prime(601)
    assert (spec.p, spec.l, spec.period) == (601, 9, 300)
    with pytest.raises(ValueError):
        ReciprocalSpec.for_prime(91)  # 7 * 13
    with pytest.raises(ValueError):
        ReciprocalSpec.for_prime(PRIME_CAP + 2)


def test_spec_validates_fields():
    with pytest.raises(ValueError):
        ReciprocalSpec(7, 3, 6)
    with pytest.raises(ValueError):
        ReciprocalSpec(7, 7, 4)


def test_digit_stream_examples():
    assert list(digit_stream(ReciprocalSpec.for_prime(7))) == [1, 4, 2, 8, 5, 7]
    assert list(digit_stream(ReciprocalSpec.for_prime(3))) == [3]
    assert list(digit_stream(ReciprocalSpec.for_prime(13))) == [0, 7, 6, 9, 2, 3]


def test_digit_at_examples():
    spec = ReciprocalSpec.for_prime(7)
    assert [digit_at(spec, i) for i in range(1, 7)] == [1, 4, 2, 8, 5, 7]
    assert digit_at(spec, 7) == 1  # wraps around the period
    with pytest.raises(ValueError):
        digit_at(spec, 0)


def test_digit_prefix_examples():
    spec = ReciprocalSpec.for_prime(7)
    assert list(digit_prefix(spec, 0)) == []
    assert list(digit_prefix(spec, 8)) == [1, 4, 2, 8, 5, 7, 1, 4]
    with pytest.raises(ValueError):
        list(digit_prefix(spec, -1))


def test_long_division_examples():
    assert long_division_digits(7, 6) == [1, 4, 2, 8, 5, 7]
    assert long_division_digits(3, 4) == [3, 3, 3, 3]
    assert long_division_digits(601, 4) == [0, 0, 1, 6]


def test_histogram_examples():
    assert histogram(ReciprocalSpec.for_prime(601)).counts == (
        35, 28, 28, 31, 28, 28, 31, 28, 28, 35)
    assert histogram(ReciprocalSpec.for_prime(7)).counts == (
        0, 1, 1, 0, 1, 1, 0, 1, 1, 0)
    # period 455 exercises the vectorized path's first block boundary
    assert histogram(ReciprocalSpec.for_prime(911)).total == 455


def test_histogram_paths_agree():
    # periods straddling the scalar/vector cutoff must agree with counting
    for p in [1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069]:
        spec = ReciprocalSpec.for_prime(p)
        assert histogram(spec).counts == _counted(spec)


def _counted(spec):
    c = Counter(digit_stream(spec))
    return tuple(c.get(d, 0) for d in range(10))


@given(prime_st)
def test_histogram_matches_stream(p):
    spec = ReciprocalSpec.for_prime(p)
    assert histogram(spec).counts == _counted(spec)


@given(prime_st)
def test_histogram_covers_one_period(p):
    spec = ReciprocalSpec.for_prime(p)
    assert histogram(spec).total == spec.period


@settings(max_examples=30)
@given(prime_st, st.integers(1, 50))
def test_stream_is_periodic(p, i):
    spec = ReciprocalSpec.for_prime(p)
    assert digit_at(spec, i) == digit_at(spec, i + spec.period)


@settings(max_examples=30)
@given(prime_st)
def test_formula_equals_long_division(p):
    spec = ReciprocalSpec.for_prime(p)
    n = min(spec.period, 200)
    assert list(digit_prefix(spec, n)) == long_division_digits(p, n)


def test_histogram_type():
    with pytest.raises(ValueError):
        DigitHistogram((1, 2, 3))
    with pytest.raises(ValueError):
        DigitHistogram((0,) * 9 + (-1,))
    a = DigitHistogram((1,) * 10)
    b = DigitHistogram(tuple(range(10)))
    assert (a + b).counts == tuple(d + 1 for d in range(10))
    assert DigitHistogram.zero().total == 0
    assert a.total == 10
