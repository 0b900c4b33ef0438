"""Finite integer sets: normalization, dilation, and structure detection.

Every value is immutable and every operation is pure, so anything here can
be used from concurrent sweeps without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StructureKind(Enum):
    ODD_AP_DILATE = "ODD_AP_DILATE"    # d * {1, 3, 5, ..., 2k-1}
    ZERO_AP_DILATE = "ZERO_AP_DILATE"  # d * {0, 1, 2, ..., k-1}
    GENERAL_AP = "GENERAL_AP"          # constant gaps, neither special form
    NONE = "NONE"


@dataclass(frozen=True)
class StructureClass:
    """Classification of a set against the extremal families.

    ``d`` is the positive dilation factor (for the dilate kinds) or the
    common difference (for GENERAL_AP); it is None exactly for NONE.
    """

    kind: StructureKind
    d: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "d": self.d}


@dataclass(frozen=True)
class IntegerSet:
    """Strictly increasing tuple of distinct integers.

    Construct through :func:`make_set`, which normalizes arbitrary input;
    the raw constructor trusts its argument.
    """

    elements: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def min_element(self) -> int:
        return self.elements[0]

    @property
    def max_element(self) -> int:
        return self.elements[-1]

    @property
    def all_positive(self) -> bool:
        return self.elements[0] > 0

    def prefix(self, n: int) -> IntegerSet:
        """The n smallest elements."""
        if not 1 <= n <= self.k:
            raise ValueError(f"prefix length {n} outside [1, {self.k}]")
        return IntegerSet(self.elements[:n])

    def without_min(self) -> IntegerSet:
        if self.k < 2:
            raise ValueError("cannot drop the minimum of a singleton")
        return IntegerSet(self.elements[1:])

    def to_list(self) -> list[int]:
        return list(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


def make_set(raw) -> IntegerSet:
    """Sort and deduplicate ``raw`` into an IntegerSet.

    Duplicates are merged silently (set semantics). Empty input is an error.
    """
    elements = tuple(sorted(set(raw)))
    if not elements:
        raise ValueError("empty set")
    for x in elements:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"non-integer element {x!r}")
    return IntegerSet(elements)


def dilate(a: IntegerSet, c: int) -> IntegerSet:
    """The dilation c * A = {c*x : x in A}; c must be nonzero."""
    if c == 0:
        raise ValueError("degenerate dilation")
    scaled = tuple(c * x for x in a.elements)
    if c < 0:
        scaled = scaled[::-1]
    return IntegerSet(scaled)


def gaps(a: IntegerSet) -> list[int]:
    """Consecutive differences [a2-a1, ..., ak-a(k-1)]; requires k >= 2."""
    if a.k < 2:
        raise ValueError("gaps undefined for k < 2")
    e = a.elements
    return [e[i + 1] - e[i] for i in range(a.k - 1)]


def is_arithmetic_progression(a: IntegerSet) -> bool:
    """True iff the set has constant consecutive gaps (k >= 2)."""
    g = gaps(a)
    return all(x == g[0] for x in g)


def classify_structure(a: IntegerSet) -> StructureClass:
    """Match a set against the extremal families; requires k >= 2.

    The dilate kinds take precedence over GENERAL_AP. Dilation factors are
    restricted to positive integers, so sets with negative elements never
    match any family and classify as NONE.
    """
    if a.k < 2:
        raise ValueError("classification undefined for k < 2")
    e = a.elements
    d = e[0]
    if d >= 1 and all(x == (2 * i + 1) * d for i, x in enumerate(e)):
        return StructureClass(StructureKind.ODD_AP_DILATE, d)
    if e[0] == 0 and all(x == i * e[1] for i, x in enumerate(e)):
        return StructureClass(StructureKind.ZERO_AP_DILATE, e[1])
    if e[0] >= 0 and is_arithmetic_progression(a):
        return StructureClass(StructureKind.GENERAL_AP, e[1] - e[0])
    return StructureClass(StructureKind.NONE)
