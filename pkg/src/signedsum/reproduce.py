"""Named verification targets: canned sweeps with fixed parameters.

Each target re-runs one headline verification at its default desk-scale
parameters and reports one pass/fail row per checked fact. The CLI prints
these rows; the test suite asserts them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import bounds
from .engine import Operator, compute_sumset, sumset_cardinality
from .search import Family, SearchSpace, sweep
from .sets import IntegerSet
from .verify import check_ap_iff, check_prefix_decomposition

LEMMA_AUDIT_SEED = 1842


@dataclass(frozen=True)
class TargetRow:
    label: str
    passed: bool
    detail: str


def thm_h4_positive() -> list[TargetRow]:
    """k=5, h=4 over all 5-subsets of [1, 20]: bound 25, two extremal sets."""
    summary = sweep(SearchSpace(k=5, h=4, max_element=20, family=Family.POSITIVE))
    eq = {r.set.elements for r in summary.equality_sets}
    expected = {(1, 3, 5, 7, 9), (2, 6, 10, 14, 18)}
    return [
        TargetRow("visited all 5-subsets of [1,20]", summary.visited == 15504,
                  f"visited={summary.visited}"),
        TargetRow("no bound violations", summary.violation_count == 0,
                  f"violations={summary.violation_count}"),
        TargetRow("minimum cardinality is 25", summary.min_cardinality == 25,
                  f"min={summary.min_cardinality}"),
        TargetRow("equality cases are exactly the odd-AP dilates",
                  eq == expected, f"equality_sets={sorted(eq)}"),
    ]


def thm_h4_zero() -> list[TargetRow]:
    """k=5, h=4 over {0} plus 4-subsets of [1, 16]: bound 21, dilates of [0,4]."""
    summary = sweep(SearchSpace(k=5, h=4, max_element=16, family=Family.ZERO_BASED))
    eq = {r.set.elements for r in summary.equality_sets}
    expected = {tuple(d * i for i in range(5)) for d in range(1, 5)}
    return [
        TargetRow("visited all zero-based candidates", summary.visited == 1820,
                  f"visited={summary.visited}"),
        TargetRow("no bound violations", summary.violation_count == 0,
                  f"violations={summary.violation_count}"),
        TargetRow("minimum cardinality is 21", summary.min_cardinality == 21,
                  f"min={summary.min_cardinality}"),
        TargetRow("equality cases are exactly d*[0,4] for d in [1,4]",
                  eq == expected, f"equality_sets={sorted(eq)}"),
    ]


def ap_iff() -> list[TargetRow]:
    """Exact cardinality on progressions iff d = 2*min, over a small grid."""
    rows = []
    failures = []
    for a1, d, h in itertools.product(range(1, 6), range(1, 13), range(3, 7)):
        report = check_ap_iff(a1, d, h)
        if not report.holds:
            failures.append((a1, d, h, report.cardinality))
    rows.append(TargetRow(
        "cardinality is (h+1)^2 iff d = 2*a1 on a1 in [1,5], d in [1,12], "
        "h in [3,6]", not failures, f"failures={failures}"))
    return rows


def interval() -> list[TargetRow]:
    """The sumset of [0, k-1] is exactly the predicted integer interval."""
    failures = []
    count = 0
    for k in range(5, 11):
        for h in range(4, k):
            count += 1
            lo, hi = bounds.zero_ap_interval(h, k)
            a = IntegerSet(tuple(range(k)))
            result = compute_sumset(a, h, Operator.RESTRICTED_SIGNED)
            if result.sums != tuple(range(lo, hi + 1)):
                failures.append((k, h))
    return [TargetRow(
        f"sumset of [0,k-1] equals its predicted interval on {count} (k,h) pairs",
        not failures, f"failures={failures}")]


def _random_audit_sets(rng: random.Random, zero_based: bool,
                       count: int) -> list[tuple[IntegerSet, int]]:
    out = []
    for _ in range(count):
        k = rng.randint(5, 8)
        h = rng.randint(3, k - 1)
        if zero_based:
            elements = (0,) + tuple(sorted(rng.sample(range(1, 41), k - 1)))
        else:
            elements = tuple(sorted(rng.sample(range(1, 41), k)))
        out.append((IntegerSet(elements), h))
    return out


def lemma_audit() -> list[TargetRow]:
    """Prefix-surplus inequality on 300 random positive and 300 zero-based sets."""
    rng = random.Random(LEMMA_AUDIT_SEED)
    rows = []
    for zero_based, label in ((False, "positive"), (True, "zero-based")):
        failures = []
        applicable = 0
        for a, h in _random_audit_sets(rng, zero_based, 300):
            report = check_prefix_decomposition(a, h)
            if report.applicable:
                applicable += 1
                if not report.holds:
                    failures.append((a.to_list(), h))
        rows.append(TargetRow(
            f"surplus inequality holds on 300 random {label} sets",
            not failures,
            f"applicable={applicable} failures={failures}"))
    return rows


def theorem11_small() -> list[TargetRow]:
    """General bounds at h in {1,2}: exhaustive over [1,12] and [0,11]."""
    rows = []
    for h in (1, 2):
        for k in range(h, 7):
            for zero_in_a in (False, True):
                bound = bounds.general_bound(h, k, zero_in_a).value
                violations = 0
                equalities = 0
                if zero_in_a:
                    candidates = ((0,) + rest for rest in
                                  itertools.combinations(range(1, 12), k - 1))
                else:
                    candidates = itertools.combinations(range(1, 13), k)
                for candidate in candidates:
                    card = sumset_cardinality(IntegerSet(candidate), h,
                                              Operator.RESTRICTED_SIGNED)
                    if card < bound:
                        violations += 1
                    elif card == bound:
                        equalities += 1
                branch = "0 in A" if zero_in_a else "0 not in A"
                rows.append(TargetRow(
                    f"h={h} k={k} ({branch}): no violations and equality attained",
                    violations == 0 and equalities >= 1,
                    f"violations={violations} equalities={equalities}"))
    return rows


TARGETS = {
    "thm-h4-positive": thm_h4_positive,
    "thm-h4-zero": thm_h4_zero,
    "ap-iff": ap_iff,
    "interval": interval,
    "lemma-audit": lemma_audit,
    "theorem11-small": theorem11_small,
}


def run_target(name: str) -> list[TargetRow]:
    if name not in TARGETS:
        raise ValueError(f"unknown target {name!r}")
    return TARGETS[name]()
