"""Structural digit-frequency rules for full- and half-length reciprocals.

Twelve rules, one per (length class, last digit[, tens-digit parity]) cell:
FL1/FL3/FL7/FL9 for full-length primes and HL1E/HL1O/.../HL9O for
half-length ones.  Writing f(d) for the period count of digit d and
m = p // 10, the catalog is:

  FL1   f(d) = (p-1)/10 for every d
  FL3   f(3) = f(6) = (p-3)/10 + 1, every other digit (p-3)/10
  FL7   f(0) = f(3) = f(6) = f(9) = (p+3)/10 - 1, every other digit (p+3)/10
  FL9   f(0) = f(9) = (p+1)/10 - 1, every other digit (p+1)/10
  HL1E  f(0)=f(9), f(3)=f(6), f(1)=f(2)=f(4)=f(5)=f(7)=f(8)
  HL1O  f(d)+f(9-d) = m for all d; f(1)=f(5)=f(6); f(3)=f(4)=f(8);
        max digit in {0,2}, min digit in {7,9}
  HL3E  f(d)+f(9-d) = m except f(3)+f(6) = m+1; f(0)=f(9); f(1)=f(4)=f(7);
        f(2)=f(5)=f(8); 3 uniquely max, 6 uniquely min
  HL3O  f(d) = f(9-d) for all d
  HL7E  f(0)+f(9) = f(3)+f(6) = m, other pairs m+1; f(1)=f(4)=f(7);
        f(2)=f(5)=f(8); 3 uniquely max, 6 uniquely min
  HL7O  f(d) = f(9-d) for all d
  HL9E  f(d) = f(9-d) for all d; f(1)=f(2)=f(4); f(5)=f(7)=f(8)
  HL9O  f(0)+f(9) = m, other pairs m+1; f(1)=f(5)=f(6); f(3)=f(4)=f(8);
        max digit in {0,2}, min digit in {7,9}

Each sub-check carries an enforcement level.  HARD checks are algebraic
identities (period totals, full-length closed forms) and must always hold.
STRONG checks are observed to hold universally over every range verified so
far but carry no proof; a violation is reported as data, never an abort.
SOFT checks are frequency observations ("usually the maximum"); only pass
rates are reported.  Max/min checks are skipped for p <= 10, where one-digit
periods make ties meaningless.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .census import FULL, HALF, PrimeProfile, batch_records, census_primes, classify
from .sequence import DigitHistogram
from .store import ResultCache

__all__ = [
    "HARD",
    "STRONG",
    "SOFT",
    "RULE_IDS",
    "RuleReport",
    "RuleStats",
    "VerificationSummary",
    "applicable_rule",
    "check_histogram",
    "verify_range",
]

HARD = "hard"
STRONG = "strong"
SOFT = "soft"

RULE_IDS = (
    "FL1", "FL3", "FL7", "FL9",
    "HL1E", "HL1O", "HL3E", "HL3O",
    "HL7E", "HL7O", "HL9E", "HL9O",
)

# Below this, max/min sub-checks are skipped (degenerate periods are all ties).
_EXTREMES_MIN_P = 10

Counts = tuple[int, ...]


@dataclass(frozen=True)
class SubCheck:
    name: str
    level: str
    run: Callable[[int, int, Counts], tuple[bool, str]]
    extremal: bool = False


def _fmt(f: Counts, digits) -> str:
    return " ".join(f"f({d})={f[d]}" for d in digits)


def _equal_group(name: str, level: str, digits: tuple[int, ...]) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        return len({f[d] for d in digits}) == 1, _fmt(f, digits)

    return SubCheck(name, level, run)


def _comp_sums(name: str, level: str, digits: tuple[int, ...], offset: int) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        ok = all(f[d] + f[9 - d] == m + offset for d in digits)
        obs = " ".join(f"f({d})+f({9-d})={f[d]+f[9-d]}" for d in digits)
        return ok, f"{obs} expected {m + offset}"

    return SubCheck(name, level, run)


def _mirror(name: str, level: str) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        bad = [d for d in range(5) if f[d] != f[9 - d]]
        return not bad, _fmt(f, [x for d in bad for x in (d, 9 - d)] or range(10))

    return SubCheck(name, level, run)


def _period_total(name: str, offset: int) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        return sum(f) == 5 * m + offset, f"total={sum(f)} expected {5 * m + offset}"

    return SubCheck(name, HARD, run)


def _closed_form(name: str, expected_of: Callable[[int], Counts]) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        expected = expected_of(p)
        return f == expected, f"counts={f} expected {expected}"

    return SubCheck(name, HARD, run)


def _extreme_set(f: Counts, kind: str) -> set[int]:
    target = max(f) if kind == "max" else min(f)
    return {d for d in range(10) if f[d] == target}


def _extreme_in(name: str, level: str, kind: str, allowed: tuple[frozenset, ...]) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        got = _extreme_set(f, kind)
        ok = any(got <= a for a in allowed)
        return ok, f"{kind} digits {sorted(got)}"

    return SubCheck(name, level, run, extremal=True)


def _extreme_unique(name: str, level: str, kind: str, digit: int) -> SubCheck:
    def run(p: int, m: int, f: Counts) -> tuple[bool, str]:
        got = _extreme_set(f, kind)
        obs = f"{kind} digits {sorted(got)}"
        if len(got) > 1:
            obs += " (tie)"
        return got == {digit}, obs

    return SubCheck(name, level, run, extremal=True)


def _fl_counts(p: int, low_digits: tuple[int, ...], shift: int, delta: int) -> Counts:
    base = (p + shift) // 10
    return tuple(base + delta if d in low_digits else base for d in range(10))


_SIX = (1, 2, 4, 5, 7, 8)
_PAIRS_SOFT_MAX = (frozenset({1, 8}), frozenset({2, 7}), frozenset({0, 9}))
_PAIRS_SOFT_MIN = (frozenset({3, 6}), frozenset({4, 5}), frozenset({1, 8}))
_GROUPS_09_SIX = (frozenset({0, 9}), frozenset(_SIX))
_GROUPS_36_SIX = (frozenset({3, 6}), frozenset(_SIX))

RULES: dict[str, tuple[SubCheck, ...]] = {
    "FL1": (_closed_form("closed_form", lambda p: _fl_counts(p, (), -1, 0)),),
    "FL3": (_closed_form("closed_form", lambda p: _fl_counts(p, (3, 6), -3, 1)),),
    "FL7": (_closed_form("closed_form", lambda p: _fl_counts(p, (0, 3, 6, 9), 3, -1)),),
    "FL9": (_closed_form("closed_form", lambda p: _fl_counts(p, (0, 9), 1, -1)),),
    "HL1E": (
        _period_total("total_5m", 0),
        _equal_group("f0_f9", STRONG, (0, 9)),
        _equal_group("f124578", STRONG, _SIX),
        _equal_group("f3_f6", STRONG, (3, 6)),
        _extreme_in("max_group", SOFT, "max", _GROUPS_09_SIX),
        _extreme_in("min_group", SOFT, "min", _GROUPS_36_SIX),
    ),
    "HL1O": (
        _period_total("total_5m", 0),
        _comp_sums("pair_sums_m", STRONG, (0, 1, 2, 3, 4), 0),
        _equal_group("f1_f5_f6", STRONG, (1, 5, 6)),
        _equal_group("f3_f4_f8", STRONG, (3, 4, 8)),
        _extreme_in("max_in_02", STRONG, "max", (frozenset({0, 2}),)),
        _extreme_in("min_in_79", STRONG, "min", (frozenset({7, 9}),)),
    ),
    "HL3E": (
        _period_total("total_5m_plus_1", 1),
        _comp_sums("pair_sums_m", STRONG, (0, 1, 2, 4), 0),
        _comp_sums("pair36_sum_m_plus_1", STRONG, (3,), 1),
        _equal_group("f0_f9", STRONG, (0, 9)),
        _equal_group("f1_f4_f7", STRONG, (1, 4, 7)),
        _equal_group("f2_f5_f8", STRONG, (2, 5, 8)),
        _extreme_unique("max_is_3", STRONG, "max", 3),
        _extreme_unique("min_is_6", STRONG, "min", 6),
    ),
    "HL3O": (
        _period_total("total_5m_plus_1", 1),
        _mirror("mirror", STRONG),
        _extreme_in("max_pair", SOFT, "max", _PAIRS_SOFT_MAX),
        _extreme_in("min_pair", SOFT, "min", _PAIRS_SOFT_MIN),
    ),
    "HL7E": (
        _period_total("total_5m_plus_3", 3),
        _comp_sums("pair09_sum_m", STRONG, (0,), 0),
        _comp_sums("pair36_sum_m", STRONG, (3,), 0),
        _comp_sums("pair_sums_m_plus_1", STRONG, (1, 2, 4), 1),
        _equal_group("f1_f4_f7", STRONG, (1, 4, 7)),
        _equal_group("f2_f5_f8", STRONG, (2, 5, 8)),
        _extreme_unique("max_is_3", STRONG, "max", 3),
        _extreme_unique("min_is_6", STRONG, "min", 6),
    ),
    "HL7O": (
        _period_total("total_5m_plus_3", 3),
        _mirror("mirror", STRONG),
        _extreme_in("max_pair", SOFT, "max", _PAIRS_SOFT_MAX),
        _extreme_in("min_pair", SOFT, "min", _PAIRS_SOFT_MIN),
    ),
    "HL9E": (
        _period_total("total_5m_plus_4", 4),
        _mirror("mirror", STRONG),
        _equal_group("f1_f2_f4", STRONG, (1, 2, 4)),
        _equal_group("f5_f7_f8", STRONG, (5, 7, 8)),
        _extreme_in("max_group", SOFT, "max", _GROUPS_09_SIX),
        _extreme_in("min_group", SOFT, "min", _GROUPS_36_SIX),
    ),
    "HL9O": (
        _period_total("total_5m_plus_4", 4),
        _comp_sums("pair09_sum_m", STRONG, (0,), 0),
        _comp_sums("pair_sums_m_plus_1", STRONG, (1, 2, 3, 4), 1),
        _equal_group("f1_f5_f6", STRONG, (1, 5, 6)),
        _equal_group("f3_f4_f8", STRONG, (3, 4, 8)),
        _extreme_in("max_in_02", STRONG, "max", (frozenset({0, 2}),)),
        _extreme_in("min_in_79", STRONG, "min", (frozenset({7, 9}),)),
    ),
}


def applicable_rule(profile: PrimeProfile) -> str | None:
    """Rule id for a full- or half-length profile, None for the rest."""
    key = profile.key
    if key.length_class == FULL:
        return f"FL{key.lsd}"
    if key.length_class == HALF:
        return f"HL{key.lsd}{'E' if key.second_parity == 'even' else 'O'}"
    return None


@dataclass(frozen=True)
class RuleReport:
    """Outcome of every sub-check of one rule against one prime's histogram."""

    p: int
    rule: str
    hard_passed: bool
    strong_passed: bool
    soft_outcomes: dict[str, bool]
    details: tuple[str, ...]


def check_histogram(profile: PrimeProfile, hist: DigitHistogram) -> RuleReport:
    """Evaluate the applicable rule on a full-period histogram of profile.p."""
    rule = applicable_rule(profile)
    if rule is None:
        raise ValueError(
            f"no rule applies to {profile.p} (cofactor {profile.cofactor})"
        )
    p, m, f = profile.p, profile.p // 10, hist.counts
    hard = strong = True
    soft: dict[str, bool] = {}
    details: list[str] = []
    for chk in RULES[rule]:
        if chk.extremal and p <= _EXTREMES_MIN_P:
            continue
        ok, observed = chk.run(p, m, f)
        if chk.level == SOFT:
            soft[chk.name] = ok
        elif not ok:
            if chk.level == HARD:
                hard = False
            else:
                strong = False
            details.append(f"{chk.level} {chk.name}: {observed}")
    return RuleReport(p, rule, hard, strong, soft, tuple(details))


@dataclass
class RuleStats:
    """Aggregate tallies for one rule over a verified range."""

    checked: int = 0
    hard_failures: int = 0
    strong_failures: int = 0
    soft_passed: dict[str, int] = field(default_factory=dict)
    soft_checked: dict[str, int] = field(default_factory=dict)


@dataclass
class VerificationSummary:
    """Range-level outcome: per-rule tallies plus every failing report."""

    limit: int
    rules: dict[str, RuleStats]
    violations: list[RuleReport]

    @property
    def hard_failures(self) -> int:
        return sum(s.hard_failures for s in self.rules.values())

    @property
    def strong_failures(self) -> int:
        return sum(s.strong_failures for s in self.rules.values())


def verify_range(
    limit: int,
    *,
    jobs: int = 1,
    cache: ResultCache | None = None,
) -> VerificationSummary:
    """Check every full- and half-length prime <= limit against its rule."""
    profiles = [
        prof
        for p in census_primes(limit)
        if (prof := classify(p, cache=cache)).cofactor in (1, 2)
    ]
    records = batch_records([prof.p for prof in profiles], jobs=jobs, cache=cache)
    stats = {rule: RuleStats() for rule in RULE_IDS}
    violations: list[RuleReport] = []
    for prof, rec in zip(profiles, records):
        report = check_histogram(prof, DigitHistogram(rec.counts))
        st = stats[report.rule]
        st.checked += 1
        st.hard_failures += not report.hard_passed
        st.strong_failures += not report.strong_passed
        for name, ok in report.soft_outcomes.items():
            st.soft_checked[name] = st.soft_checked.get(name, 0) + 1
            st.soft_passed[name] = st.soft_passed.get(name, 0) + ok
        if not (report.hard_passed and report.strong_passed):
            violations.append(report)
    return VerificationSummary(limit, stats, violations)
