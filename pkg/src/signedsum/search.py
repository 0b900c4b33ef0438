"""Exhaustive and randomized sweeps hunting bound violations and equality cases.

A sweep visits every candidate set of a search space in lexicographic
order, measures its restricted signed sumset against the family's optimal
bound, and harvests the equality cases (the extremal sets) and any
violations (each one a counterexample). Work is partitioned into shards by
the smallest free element, so shards can run in parallel and merge in a
fixed order; summaries are identical for any worker count, including 1.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import comb, gcd
from typing import Callable, Iterator

from . import bounds
from .engine import Operator, sumset_cardinality
from .sets import IntegerSet, StructureClass, classify_structure
from .verify import check_direct

DEFAULT_BUDGET = 10**7
EMIT_MODES = ("interesting", "all", "none")
FILTER_IDS = (None, "primitive")


class Family(Enum):
    POSITIVE = "positive"
    ZERO_BASED = "zero-based"


@dataclass(frozen=True)
class SearchSpace:
    """Candidate universe: k-subsets of [1, M], or {0} plus (k-1)-subsets.

    The optional "primitive" filter keeps only sets whose elements have
    gcd 1, skipping dilates of smaller sets.
    """

    k: int
    h: int
    max_element: int
    family: Family
    filter_id: str | None = None

    def __post_init__(self) -> None:
        if not 3 <= self.h <= self.k - 1:
            raise ValueError(
                f"search requires 3 <= h <= k-1, got h={self.h}, k={self.k}")
        if self.filter_id not in FILTER_IDS:
            raise ValueError(f"unknown filter {self.filter_id!r}")
        free = self.k if self.family is Family.POSITIVE else self.k - 1
        if self.max_element < free:
            raise ValueError("space smaller than k")
        self.bound()  # validates the family's (h, k) window

    def bound(self) -> bounds.BoundFormula:
        if self.family is Family.POSITIVE:
            return bounds.optimal_bound_positive(self.h, self.k)
        return bounds.optimal_bound_zero(self.h, self.k)

    def size(self) -> int:
        free = self.k if self.family is Family.POSITIVE else self.k - 1
        return comb(self.max_element, free)

    def shard_keys(self) -> list[int]:
        """Smallest free element of each shard, in lexicographic order."""
        free = self.k if self.family is Family.POSITIVE else self.k - 1
        return list(range(1, self.max_element - free + 2))

    def shard_candidates(self, key: int) -> Iterator[tuple[int, ...]]:
        m = self.max_element
        if self.family is Family.POSITIVE:
            for rest in itertools.combinations(range(key + 1, m + 1), self.k - 1):
                yield (key,) + rest
        else:
            for rest in itertools.combinations(range(key + 1, m + 1), self.k - 2):
                yield (0, key) + rest

    def candidates(self) -> Iterator[tuple[int, ...]]:
        for key in self.shard_keys():
            yield from self.shard_candidates(key)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "h": self.h,
            "max_element": self.max_element,
            "family": self.family.value,
            "filter": self.filter_id,
        }


@dataclass(frozen=True)
class SearchRecord:
    """One candidate set with its measured cardinality and status."""

    set: IntegerSet
    cardinality: int
    slack: int
    equality: bool
    structure: StructureClass

    def to_dict(self) -> dict:
        return {
            "set": self.set.to_list(),
            "cardinality": self.cardinality,
            "slack": self.slack,
            "equality": self.equality,
            "structure": self.structure.to_dict(),
        }

    def to_csv_row(self) -> str:
        d = "" if self.structure.d is None else str(self.structure.d)
        return ";".join([
            ",".join(str(x) for x in self.set.elements),
            str(self.cardinality),
            str(self.slack),
            "true" if self.equality else "false",
            self.structure.kind.value,
            d,
        ])


CSV_HEADER = "set;cardinality;slack;equality;structure_kind;d"


@dataclass
class SweepSummary:
    space: SearchSpace
    visited: int
    min_cardinality: int | None
    equality_count: int
    violation_count: int
    equality_sets: list[SearchRecord]
    violations: list[SearchRecord]

    def to_dict(self) -> dict:
        return {
            "space": self.space.to_dict(),
            "bound": self.space.bound().value,
            "visited": self.visited,
            "min_cardinality": self.min_cardinality,
            "equality_count": self.equality_count,
            "violation_count": self.violation_count,
            "equality_sets": [r.set.to_list() for r in self.equality_sets],
            "violations": [r.to_dict() for r in self.violations],
        }


def _passes_filter(space: SearchSpace, candidate: tuple[int, ...]) -> bool:
    if space.filter_id == "primitive":
        return gcd(*candidate) == 1
    return True


def _sweep_shard(args: tuple[SearchSpace, int, str]
                 ) -> tuple[int, int | None, list[SearchRecord], list[SearchRecord],
                            list[SearchRecord]]:
    """Visit one shard; returns (visited, min_card, equalities, violations, emitted)."""
    space, key, emit = args
    bound_value = space.bound().value
    h = space.h
    visited = 0
    min_card: int | None = None
    equalities: list[SearchRecord] = []
    violations: list[SearchRecord] = []
    emitted: list[SearchRecord] = []
    for candidate in space.shard_candidates(key):
        if not _passes_filter(space, candidate):
            continue
        visited += 1
        a = IntegerSet(candidate)
        card = sumset_cardinality(a, h, Operator.RESTRICTED_SIGNED)
        if min_card is None or card < min_card:
            min_card = card
        slack = card - bound_value
        interesting = slack <= 0
        if not interesting and emit != "all":
            continue
        record = SearchRecord(a, card, slack, slack == 0, classify_structure(a))
        if record.equality:
            equalities.append(record)
        elif slack < 0:
            violations.append(record)
        if emit == "all" or (emit == "interesting" and interesting):
            emitted.append(record)
    return visited, min_card, equalities, violations, emitted


def sweep(space: SearchSpace, *, budget: int = DEFAULT_BUDGET, workers: int = 1,
          emit: str = "interesting",
          on_record: Callable[[SearchRecord], None] | None = None) -> SweepSummary:
    """Visit every set in the space and summarize bound behaviour.

    Raises before starting if the space exceeds ``budget`` candidate sets.
    ``on_record`` receives emitted records in deterministic (lexicographic)
    order; ``emit`` selects all records, only equality/violation records,
    or none. With ``workers > 1`` shards run in separate processes and
    their records are replayed in shard order, so results and callback
    order do not depend on the worker count.
    """
    if emit not in EMIT_MODES:
        raise ValueError(f"unknown emit mode {emit!r}")
    size = space.size()
    if size > budget:
        raise ValueError(
            f"budget exceeded: {size} candidate sets > budget {budget}")
    args = [(space, key, emit) for key in space.shard_keys()]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shard_results = list(pool.map(_sweep_shard, args))
    else:
        shard_results = [_sweep_shard(arg) for arg in args]

    visited = 0
    min_card: int | None = None
    equality_sets: list[SearchRecord] = []
    violations: list[SearchRecord] = []
    for shard_visited, shard_min, eqs, viols, emitted in shard_results:
        visited += shard_visited
        if shard_min is not None and (min_card is None or shard_min < min_card):
            min_card = shard_min
        equality_sets.extend(eqs)
        violations.extend(viols)
        if on_record is not None:
            for record in emitted:
                on_record(record)
    return SweepSummary(space, visited, min_card, len(equality_sets),
                        len(violations), equality_sets, violations)


@dataclass
class ProbeSummary:
    space: SearchSpace
    trials: int
    seed: int
    min_slack: int | None
    violation_count: int
    violations: list[SearchRecord]
    equality_count: int
    equality_sets: list[SearchRecord]

    def to_dict(self) -> dict:
        return {
            "space": self.space.to_dict(),
            "bound": self.space.bound().value,
            "trials": self.trials,
            "seed": self.seed,
            "min_slack": self.min_slack,
            "violation_count": self.violation_count,
            "violations": [r.to_dict() for r in self.violations],
            "equality_count": self.equality_count,
            "equality_sets": [r.set.to_list() for r in self.equality_sets],
        }


def random_probe(space: SearchSpace, trials: int, seed: int) -> ProbeSummary:
    """Sample ``trials`` sets uniformly from the space and check the bound.

    Each trial draws the set's elements without replacement; the sequence
    of draws is fully determined by ``seed``. Any violation is recorded as
    a counterexample and must be surfaced by callers.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    m = space.max_element
    min_slack: int | None = None
    violations: list[SearchRecord] = []
    equality_sets: list[SearchRecord] = []
    for _ in range(trials):
        if space.family is Family.POSITIVE:
            candidate = tuple(sorted(rng.sample(range(1, m + 1), space.k)))
        else:
            candidate = (0,) + tuple(sorted(rng.sample(range(1, m + 1),
                                                       space.k - 1)))
        if not _passes_filter(space, candidate):
            continue
        a = IntegerSet(candidate)
        report = check_direct(a, space.h)
        if min_slack is None or report.slack < min_slack:
            min_slack = report.slack
        if report.slack <= 0:
            record = SearchRecord(a, report.cardinality, report.slack,
                                  report.equality, classify_structure(a))
            if record.equality:
                equality_sets.append(record)
            else:
                violations.append(record)
    return ProbeSummary(space, trials, seed, min_slack, len(violations),
                        violations, len(equality_sets), equality_sets)
