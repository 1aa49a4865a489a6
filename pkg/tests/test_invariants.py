from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.census import classify
from dseq.invariants import (
    RULE_IDS,
    applicable_rule,
    check_histogram,
    verify_range,
)
from dseq.numtheory import sieve_primes
from dseq.sequence import (
    DigitHistogram,
    ReciprocalSpec,
    histogram,
    long_division_digits,
)

from conftest import golden_rows


def _oracle_hist(p: int) -> DigitHistogram:
    spec = ReciprocalSpec.for_prime(p)
    c = Counter(long_division_digits(p, spec.period))
    return DigitHistogram(tuple(c.get(d, 0) for d in range(10)))


def test_rule_ids():
    assert len(RULE_IDS) == 12
    assert set(RULE_IDS) == {
        "FL1", "FL3", "FL7", "FL9",
        "HL1E", "HL1O", "HL3E", "HL3O", "HL7E", "HL7O", "HL9E", "HL9O",
    }


def test_applicable_rule_examples():
    assert applicable_rule(classify(601)) == "HL1E"
    assert applicable_rule(classify(7)) == "FL7"
    assert applicable_rule(classify(2203)) == "HL3E"
    assert applicable_rule(classify(919)) == "HL9O"
    assert applicable_rule(classify(11)) is None


def test_check_601_golden_row():
    prof = classify(601)
    hist = DigitHistogram(dict(golden_rows(1))[601])
    report = check_histogram(prof, hist)
    assert report.rule == "HL1E"
    assert report.hard_passed and report.strong_passed
    assert report.details == ()
    assert set(report.soft_outcomes) == {"max_group", "min_group"}


def test_check_2203_pair36_is_m_plus_1():
    # m = 220 and the (3,6) pair sums to 221: the off-by-one pair
    prof = classify(2203)
    counts = dict(golden_rows(3))[2203]
    assert counts[3] + counts[6] == 221 == 2203 // 10 + 1
    report = check_histogram(prof, DigitHistogram(counts))
    assert report.hard_passed and report.strong_passed


def test_check_perturbed_601_fails_hard():
    prof = classify(601)
    counts = list(dict(golden_rows(1))[601])
    counts[0] += 1
    report = check_histogram(prof, DigitHistogram(tuple(counts)))
    assert not report.hard_passed
    assert not report.strong_passed
    assert any("total_5m" in d for d in report.details)
    assert any("f0_f9" in d for d in report.details)


def test_check_rejects_other_class():
    with pytest.raises(ValueError):
        check_histogram(classify(11), histogram(ReciprocalSpec.for_prime(11)))


def test_full_length_closed_forms_small():
    # expected counts re-derived from the closed forms, data from the oracle
    cases = {
        7: (0, 1, 1, 0, 1, 1, 0, 1, 1, 0),
        19: (1, 2, 2, 2, 2, 2, 2, 2, 2, 1),
        23: (2, 2, 2, 3, 2, 2, 3, 2, 2, 2),
        61: (6, 6, 6, 6, 6, 6, 6, 6, 6, 6),
    }
    for p, expected in cases.items():
        assert _oracle_hist(p).counts == expected
        report = check_histogram(classify(p), _oracle_hist(p))
        assert report.rule == f"FL{p % 10}"
        assert report.hard_passed


def test_extremal_checks_skipped_for_tiny_primes():
    # p = 3 is HL3E with a one-digit period; unique-max/min would be vacuous
    report = check_histogram(classify(3), histogram(ReciprocalSpec.for_prime(3)))
    assert report.hard_passed and report.strong_passed
    report = check_histogram(classify(13), histogram(ReciprocalSpec.for_prime(13)))
    assert report.rule == "HL3O"
    assert report.hard_passed and report.strong_passed


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([p for p in sieve_primes(20_000) if p not in (2, 5)]))
def test_rules_hold_on_real_histograms(p):
    prof = classify(p)
    rule = applicable_rule(prof)
    if rule is None:
        return
    report = check_histogram(prof, histogram(ReciprocalSpec.for_prime(p)))
    assert report.hard_passed, report.details
    assert report.strong_passed, report.details


def test_verify_range_small(session_cache):
    summary = verify_range(1000, cache=session_cache)
    assert summary.limit == 1000
    assert summary.hard_failures == 0
    assert summary.strong_failures == 0
    assert summary.violations == []
    assert set(summary.rules) == set(RULE_IDS)
    # primes <= 1000 excluding 2, 5: 166, of which 52 are neither full nor half
    assert sum(st.checked for st in summary.rules.values()) == 114
    assert summary.rules["FL7"].checked == 16
    assert summary.rules["HL1E"].checked == 4  # 401, 601, 761, 881


def test_verify_range_ten():
    summary = verify_range(10)
    assert summary.hard_failures == 0
    assert sum(st.checked for st in summary.rules.values()) == 2  # 3 and 7
    assert summary.rules["FL7"].checked == 1
    assert summary.rules["HL3E"].checked == 1


def test_verify_range_two():
    summary = verify_range(2)
    assert all(st.checked == 0 for st in summary.rules.values())
    assert summary.violations == []


def test_verify_range_soft_rates(session_cache):
    summary = verify_range(5000, cache=session_cache)
    st_ = summary.rules["HL1E"]
    assert st_.soft_checked["max_group"] == st_.checked
    assert 0 <= st_.soft_passed["max_group"] <= st_.soft_checked["max_group"]
    # soft outcomes never appear in violations
    assert summary.hard_failures == 0 and summary.strong_failures == 0
