"""Exact computation of the four h-fold sumset operators.

For a set A = {a_1 < ... < a_k} and a fold h >= 1, a coefficient vector
(lambda_1, ..., lambda_k) contributes the sum Sum(lambda_i * a_i). The four
operators differ only in the admissible vectors:

    CLASSICAL          lambda_i in [0, h],      Sum(lambda_i)  = h
    RESTRICTED         lambda_i in {0, 1},      Sum(lambda_i)  = h
    SIGNED             lambda_i in [-h, h],     Sum(|lambda_i|) = h
    RESTRICTED_SIGNED  lambda_i in {-1, 0, 1},  Sum(|lambda_i|) = h

The fast path is a dynamic program over (element index, weight used) whose
state value is a dense bitmap of achievable partial sums, held in a Python
int so transitions are single shift-or operations. The naive path literally
enumerates every admissible coefficient vector and exists purely to
cross-check the fast path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

import numpy as np

from .sets import IntegerSet

MAX_SUM_RANGE = 2**40
NAIVE_VECTOR_LIMIT = 10**8


class Operator(Enum):
    CLASSICAL = "classical"
    RESTRICTED = "restricted"
    SIGNED = "signed"
    RESTRICTED_SIGNED = "restricted-signed"

    @property
    def restricted(self) -> bool:
        """Coefficients limited to magnitude at most one (needs h <= k)."""
        return self in (Operator.RESTRICTED, Operator.RESTRICTED_SIGNED)

    @property
    def signed(self) -> bool:
        return self in (Operator.SIGNED, Operator.RESTRICTED_SIGNED)


@dataclass(frozen=True)
class SumsetResult:
    """A computed sumset: sorted distinct sums plus summary statistics."""

    sums: tuple[int, ...]
    cardinality: int
    min_sum: int
    max_sum: int

    @classmethod
    def from_sorted(cls, sums: list[int]) -> SumsetResult:
        return cls(tuple(sums), len(sums), sums[0], sums[-1])

    def to_dict(self, a: IntegerSet, h: int, op: Operator,
                include_sums: bool = False) -> dict:
        out = {
            "operator": op.value,
            "h": h,
            "set": a.to_list(),
            "cardinality": self.cardinality,
            "min": self.min_sum,
            "max": self.max_sum,
        }
        if include_sums:
            out["sums"] = list(self.sums)
        return out


def contains_zero(a: IntegerSet) -> bool:
    """True iff 0 is an element; selects the bound family for theorems."""
    return 0 in a


def _check_instance(a: IntegerSet, h: int, op: Operator) -> int:
    """Validate (A, h, op) and return the bitmap half-width."""
    if h < 1:
        raise ValueError("h must be a positive integer")
    if op.restricted and h > a.k:
        raise ValueError("h exceeds |A|")
    max_abs = max(abs(x) for x in a.elements)
    if op.restricted:
        half_width = sum(abs(x) for x in a.elements)
    else:
        half_width = h * max_abs
    if half_width > MAX_SUM_RANGE:
        raise ValueError("range overflow")
    return half_width


def _shift(bits: int, delta: int) -> int:
    return bits << delta if delta >= 0 else bits >> -delta


def _achievable(elements: tuple[int, ...], h: int, op: Operator,
                half_width: int) -> int:
    """Bitmap of sums with total weight exactly h; bit i encodes i - half_width."""
    dp = [0] * (h + 1)
    dp[0] = 1 << half_width
    multi = not op.restricted
    neg = op.signed
    for a in elements:
        ndp = dp[:]  # lambda = 0 on this element
        for w in range(h):
            src = dp[w]
            if not src:
                continue
            if multi:
                for j in range(1, h - w + 1):
                    ndp[w + j] |= _shift(src, j * a)
                    if neg:
                        ndp[w + j] |= _shift(src, -j * a)
            else:
                ndp[w + 1] |= _shift(src, a)
                if neg:
                    ndp[w + 1] |= _shift(src, -a)
        dp = ndp
    return dp[h]


def _decode(bitmap: int, half_width: int) -> list[int]:
    values = []
    while bitmap:
        low = (bitmap & -bitmap).bit_length() - 1
        values.append(low - half_width)
        bitmap &= bitmap - 1
    return values


def compute_sumset(a: IntegerSet, h: int, op: Operator) -> SumsetResult:
    """The exact sumset of A under ``op`` at fold ``h`` (bitset DP path)."""
    half_width = _check_instance(a, h, op)
    bitmap = _achievable(a.elements, h, op, half_width)
    return SumsetResult.from_sorted(_decode(bitmap, half_width))


def sumset_cardinality(a: IntegerSet, h: int, op: Operator) -> int:
    """|sumset| without materializing the sums; the hot call in sweeps."""
    half_width = _check_instance(a, h, op)
    return _achievable(a.elements, h, op, half_width).bit_count()


# --- naive oracle -----------------------------------------------------------

def naive_vector_count(k: int, h: int, op: Operator) -> int:
    """Number of admissible coefficient vectors the naive path will visit."""
    if op is Operator.CLASSICAL:
        return comb(k + h - 1, h)
    if op is Operator.RESTRICTED:
        return comb(k, h)
    if op is Operator.RESTRICTED_SIGNED:
        return comb(k, h) * 2**h
    return sum(comb(k, s) * comb(h - 1, s - 1) * 2**s
               for s in range(1, min(h, k) + 1))


@lru_cache(maxsize=None)
def _sign_matrix(s: int) -> np.ndarray:
    rows = list(itertools.product((1, -1), repeat=s))
    return np.array(rows, dtype=np.int64)


def _compositions(h: int, s: int) -> np.ndarray:
    """All s-tuples of positive integers summing to h, one per row."""
    rows = []
    for cuts in itertools.combinations(range(1, h), s - 1):
        bounds = (0,) + cuts + (h,)
        rows.append([bounds[i + 1] - bounds[i] for i in range(s)])
    return np.array(rows, dtype=np.int64)


def compute_sumset_naive(a: IntegerSet, h: int, op: Operator) -> SumsetResult:
    """Reference result by literal iteration over coefficient vectors.

    Refuses instances with more than ``NAIVE_VECTOR_LIMIT`` vectors; the DP
    path has no such limit.
    """
    _check_instance(a, h, op)
    if naive_vector_count(a.k, h, op) > NAIVE_VECTOR_LIMIT:
        raise ValueError("instance too large for oracle")
    elements = a.elements
    sums: set[int] = set()
    if op is Operator.CLASSICAL:
        for combo in itertools.combinations_with_replacement(elements, h):
            sums.add(sum(combo))
    elif op is Operator.RESTRICTED:
        for combo in itertools.combinations(elements, h):
            sums.add(sum(combo))
    elif op is Operator.RESTRICTED_SIGNED:
        for support in itertools.combinations(elements, h):
            for signs in itertools.product((1, -1), repeat=h):
                sums.add(sum(s * x for s, x in zip(signs, support)))
    else:
        # one batch per support: (compositions * support) x sign patterns
        for s in range(1, min(h, a.k) + 1):
            signs_t = _sign_matrix(s).T
            comps = _compositions(h, s)
            for support in itertools.combinations(elements, s):
                prods = comps * np.asarray(support, dtype=np.int64)
                sums.update((prods @ signs_t).ravel().tolist())
    return SumsetResult.from_sorted(sorted(sums))
