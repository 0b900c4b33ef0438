"""Executable checks for the direct and inverse cardinality theorems.

Each checker computes a restricted signed sumset, compares it against the
applicable closed-form bound, and reports slack, equality, and (for the
inverse direction) whether the set matches the extremal family. Hypothesis
violations are hard errors; conclusion failures are surfaced as
counterexample reports, never exceptions, so sweeps can log and continue.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds
from .engine import Operator, compute_sumset, sumset_cardinality
from .sets import (IntegerSet, StructureClass, StructureKind,
                   classify_structure, is_arithmetic_progression, make_set)

POSITIVE = "positive"
ZERO = "zero"


@dataclass(frozen=True)
class BoundReport:
    """One set measured against one lower bound.

    Negative slack means the bound was violated: a counterexample, which is
    reported as data rather than raised.
    """

    set: IntegerSet
    h: int
    operator: Operator
    cardinality: int
    bound_name: str
    bound_value: int
    slack: int
    equality: bool

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    def to_dict(self, structure: StructureClass | None = None) -> dict:
        return {
            "set": self.set.to_list(),
            "h": self.h,
            "operator": self.operator.value,
            "cardinality": self.cardinality,
            "bound_name": self.bound_name,
            "bound_value": self.bound_value,
            "slack": self.slack,
            "equality": self.equality,
            "structure": structure.to_dict() if structure else None,
        }


@dataclass(frozen=True)
class InverseVerdict:
    """Outcome of testing the inverse direction on a single set.

    ``structure_matches`` is defined only when the bound is attained.
    """

    equality_holds: bool
    predicted_structure: StructureClass
    structure_matches: bool | None

    def to_dict(self) -> dict:
        return {
            "equality_holds": self.equality_holds,
            "structure": self.predicted_structure.to_dict(),
            "structure_matches": self.structure_matches,
        }


@dataclass(frozen=True)
class PrefixDecompositionReport:
    """Audit of the prefix-surplus inequality.

    With t the surplus of the prefix sumset over its base cardinality, the
    inequality asserts |h^+-A| >= optimal_bound + t whenever t >= 0. A
    negative t makes the inequality inapplicable, not wrong.
    """

    family: str
    set: IntegerSet
    h: int
    prefix: IntegerSet
    prefix_cardinality: int
    threshold: int
    t: int
    applicable: bool
    asserted_bound: int | None
    cardinality: int
    holds: bool | None

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "set": self.set.to_list(),
            "h": self.h,
            "prefix": self.prefix.to_list(),
            "prefix_cardinality": self.prefix_cardinality,
            "threshold": self.threshold,
            "t": self.t,
            "applicable": self.applicable,
            "asserted_bound": self.asserted_bound,
            "cardinality": self.cardinality,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class ConditionCheck:
    """One side condition of the conditional inverse theorem.

    ``conclusion_verified`` is None unless the full hypothesis (bound
    equality plus an applicable condition) is met.
    """

    condition: str
    applicable: bool
    conclusion_verified: bool | None

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "applicable": self.applicable,
            "conclusion_verified": self.conclusion_verified,
        }


@dataclass(frozen=True)
class ApIffReport:
    """Exact-cardinality iff check on an (h+1)-term arithmetic progression."""

    a1: int
    d: int
    h: int
    set: IntegerSet
    cardinality: int
    target: int
    d_is_twice_min: bool
    equality_observed: bool
    iff_holds: bool
    holds: bool

    def to_dict(self) -> dict:
        return {
            "a1": self.a1,
            "d": self.d,
            "h": self.h,
            "set": self.set.to_list(),
            "cardinality": self.cardinality,
            "target": self.target,
            "d_is_twice_min": self.d_is_twice_min,
            "equality_observed": self.equality_observed,
            "iff_holds": self.iff_holds,
            "holds": self.holds,
        }


def family_of(a: IntegerSet) -> str:
    """POSITIVE for all-positive sets, ZERO for {0} plus positives.

    Anything else (negative or mixed-sign elements) violates every
    theorem hypothesis here and is rejected; the raw engine remains
    usable on such sets.
    """
    if a.all_positive:
        return POSITIVE
    if a.min_element == 0 and (a.k == 1 or a.elements[1] > 0):
        return ZERO
    raise ValueError(
        "theorem hypotheses require positive elements or 0 plus positives")


def _expected_kind(family: str) -> StructureKind:
    return (StructureKind.ODD_AP_DILATE if family == POSITIVE
            else StructureKind.ZERO_AP_DILATE)


def check_direct(a: IntegerSet, h: int) -> BoundReport:
    """Measure |h^+-A| against the optimal bound for A's family."""
    family = family_of(a)
    if family == POSITIVE:
        bf = bounds.optimal_bound_positive(h, a.k)
    else:
        bf = bounds.optimal_bound_zero(h, a.k)
    card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
    slack = card - bf.value
    return BoundReport(a, h, Operator.RESTRICTED_SIGNED, card,
                       bf.name, bf.value, slack, slack == 0)


def check_inverse(a: IntegerSet, h: int) -> InverseVerdict:
    """When the optimal bound is attained, test membership in the
    conjectured extremal family (odd-AP dilates, or zero-based AP dilates
    when 0 is an element)."""
    report = check_direct(a, h)
    structure = classify_structure(a)
    matches: bool | None = None
    if report.equality:
        matches = structure.kind is _expected_kind(family_of(a))
    return InverseVerdict(report.equality, structure, matches)


def check_prefix_decomposition(a: IntegerSet, h: int) -> PrefixDecompositionReport:
    """Audit the prefix-surplus inequality on A.

    Positive family: prefix is the h+1 smallest elements and the base
    cardinality is (h+1)^2. Zero family: prefix is {0, a_1, ..., a_h} and
    the base is h(h+1) + 1. In both cases a surplus t >= 0 on the prefix
    lifts the optimal bound on the full set by t.
    """
    family = family_of(a)
    if family == POSITIVE:
        if not 3 <= h <= a.k - 1:
            raise ValueError(
                f"decomposition requires 3 <= h <= k-1, got h={h}, k={a.k}")
        threshold = (h + 1) ** 2
        base_bound = bounds.optimal_bound_positive(h, a.k).value
    else:
        if a.k < 5 or not 3 <= h <= a.k - 1:
            raise ValueError(
                f"zero-family decomposition requires k >= 5 and 3 <= h <= k-1, "
                f"got h={h}, k={a.k}")
        threshold = h * (h + 1) + 1
        base_bound = bounds.optimal_bound_zero(h, a.k).value
    prefix = a.prefix(h + 1)
    prefix_card = sumset_cardinality(prefix, h, Operator.RESTRICTED_SIGNED)
    t = prefix_card - threshold
    applicable = t >= 0
    asserted = base_bound + t if applicable else None
    card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
    holds = (asserted <= card) if applicable else None
    return PrefixDecompositionReport(
        family, a, h, prefix, prefix_card, threshold, t, applicable,
        asserted, card, holds)


def check_partial_inverse(a: IntegerSet, h: int) -> list[ConditionCheck]:
    """Test conditions (a)-(e) of the conditional inverse theorem.

    Each condition is reported with whether its hypothesis holds for A
    and, when the full hypothesis is met (bound equality plus the
    condition), whether A is the predicted extremal dilate. Condition (c)
    carries its own window 4 <= h <= k-3 and is inapplicable outside it.
    """
    family = family_of(a)
    k = a.k
    if not 4 <= h <= k - 1:
        raise ValueError(
            f"partial inverse requires 4 <= h <= k-1, got h={h}, k={k}")
    if family == POSITIVE:
        equality_value = 2 * h * k - h * h + 1
        threshold = (h + 1) ** 2
    else:
        equality_value = 2 * h * k - h * (h + 1) + 1
        threshold = h * (h + 1) + 1
    prefix = a.prefix(h + 1)
    tail = a.without_min()  # A' = A minus its least element

    card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
    equality = card == equality_value
    prefix_card = sumset_cardinality(prefix, h, Operator.RESTRICTED_SIGNED)

    tail_restricted = set(compute_sumset(tail, h, Operator.RESTRICTED).sums)
    union = (tail_restricted
             | {-x for x in tail_restricted}
             | set(compute_sumset(prefix, h, Operator.RESTRICTED_SIGNED).sums))
    full = set(compute_sumset(a, h, Operator.RESTRICTED_SIGNED).sums)
    tail_is_ap = is_arithmetic_progression(tail)

    applicable = {
        "a": is_arithmetic_progression(a),
        "b": is_arithmetic_progression(prefix),
        "c": prefix_card >= threshold and 4 <= h <= k - 3,
        "d": full == union and tail_is_ap,
        "e": prefix_card >= threshold and tail_is_ap,
    }
    conclusion = classify_structure(a).kind is _expected_kind(family)
    return [
        ConditionCheck(cond, ok, conclusion if (equality and ok) else None)
        for cond, ok in applicable.items()
    ]


def check_special_direct(a: IntegerSet, h: int) -> BoundReport:
    """Direct bound (h+1)^2 + 1 for (h+1)-element positive sets satisfying
    the superincreasing-tail or the smallgap predicate."""
    if h < 3:
        raise ValueError(f"special direct bound requires h >= 3, got h={h}")
    if a.k != h + 1:
        raise ValueError(
            f"special direct bound requires k = h+1, got h={h}, k={a.k}")
    if family_of(a) != POSITIVE:
        raise ValueError("special direct bound requires positive elements")
    if not (bounds.superincreasing_tail(a) or bounds.smallgap(a)):
        raise ValueError("hypothesis not satisfied")
    bound_value = (h + 1) ** 2 + 1
    card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
    slack = card - bound_value
    return BoundReport(a, h, Operator.RESTRICTED_SIGNED, card,
                       "special-direct", bound_value, slack, slack == 0)


def check_ap_iff(a1: int, d: int, h: int) -> ApIffReport:
    """Build the (h+1)-term progression starting at a1 with difference d
    and check that its sumset cardinality is (h+1)^2 exactly when
    d = 2*a1, and at least (h+1)^2 + 1 otherwise."""
    if a1 < 1 or d < 1:
        raise ValueError("AP check requires positive a1 and d")
    if h < 3:
        raise ValueError(f"AP check requires h >= 3, got h={h}")
    a = make_set([a1 + i * d for i in range(h + 1)])
    card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
    target = (h + 1) ** 2
    twice = d == 2 * a1
    equality_observed = card == target
    iff_holds = twice == equality_observed
    holds = iff_holds and (card == target if twice else card >= target + 1)
    return ApIffReport(a1, d, h, a, card, target, twice,
                       equality_observed, iff_holds, holds)
