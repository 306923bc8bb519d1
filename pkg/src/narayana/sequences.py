"""Recurrence sequences used by the codec: Narayana, the J series, variants.

Every Narayana-type sequence obeys ``T(k) = T(k-1) + T(k-3)`` and differs
only in its three seed terms. Fibonacci (``T(k) = T(k-1) + T(k-2)``) is
carried along for the baseline codec.

Tables grow lazily and are append-only, so a cached term never changes.
"""
from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import CapacityExceeded, NonConvergence

#: Largest magnitude a term may have when handed out by :meth:`SequenceTable.term`.
DEFAULT_CAPACITY = 2**63 - 1

#: Seeds of the variant sequences exactly as originally published.
#: For a = -3 the printed second term (5) disagrees with the ``3 - a`` rule (6);
#: the printed sequence is the one its coverage claims were made against.
LISTED_VARIANT_SEEDS = {
    -1: (-1, 4, 2),
    -2: (-2, 5, 3),
    -3: (-3, 5, 4),
}


@dataclass(frozen=True)
class SequenceKind:
    """Which sequence a table holds: seeds plus the recurrence lag."""

    name: str
    seeds: tuple[int, ...]
    lag: int = 3
    increasing: bool = False

    @classmethod
    def narayana(cls) -> SequenceKind:
        return cls("narayana", (1, 1, 1))

    @classmethod
    def jseries(cls) -> SequenceKind:
        # J(k) = N(k + 2), so the seeds are N(2), N(3), N(4)
        return cls("jseries", (1, 2, 3), increasing=True)

    @classmethod
    def general(cls, a: int, b: int, c: int) -> SequenceKind:
        return cls(f"general({a},{b},{c})", (a, b, c))

    @classmethod
    def variant(cls, a: int, formula_seeds: bool = False) -> SequenceKind:
        """Variant sequence seeded ``a, 3 - a, 1 - a``.

        For the three values of ``a`` with published seeds those seeds are
        used unless ``formula_seeds`` is set; they differ only for ``a = -3``.
        """
        if not formula_seeds and a in LISTED_VARIANT_SEEDS:
            seeds = LISTED_VARIANT_SEEDS[a]
        else:
            seeds = (a, 3 - a, 1 - a)
        suffix = "" if seeds == (a, 3 - a, 1 - a) else ",listed"
        return cls(f"variant({a}{suffix})", seeds)

    @classmethod
    def fibonacci(cls) -> SequenceKind:
        # 1, 2, 3, 5, 8, ...: distinct positive terms, no repeated 1
        return cls("fibonacci", (1, 2), lag=2, increasing=True)


class SequenceTable:
    """Lazily grown, append-only cache of a sequence's terms.

    Terms are exact Python integers. :meth:`term` refuses to hand out a term
    whose magnitude exceeds ``capacity_limit``; the table itself may hold one
    such term past the limit, which serves as the upper bracket for
    :meth:`floor_index`.
    """

    def __init__(self, kind: SequenceKind, capacity_limit: int = DEFAULT_CAPACITY):
        if capacity_limit < DEFAULT_CAPACITY:
            raise ValueError(f"capacity_limit must be at least {DEFAULT_CAPACITY}")
        self.kind = kind
        self.capacity_limit = capacity_limit
        self._terms: list[int] = list(kind.seeds)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"SequenceTable({self.kind.name}, cached={len(self._terms)})"

    def __len__(self) -> int:
        return len(self._terms)

    def _extend(self, k: int) -> None:
        if k < len(self._terms):
            return
        with self._lock:
            terms, lag = self._terms, self.kind.lag
            while len(terms) <= k:
                if abs(terms[-1]) > self.capacity_limit:
                    raise CapacityExceeded(
                        f"{self.kind.name} term {len(terms)} lies beyond the supported range"
                    )
                terms.append(terms[-1] + terms[-lag])

    def term(self, k: int) -> int:
        if k < 0:
            raise IndexError(f"negative sequence index {k}")
        self._extend(k)
        value = self._terms[k]
        if abs(value) > self.capacity_limit:
            raise CapacityExceeded(
                f"{self.kind.name}({k}) = {value} exceeds {self.capacity_limit}"
            )
        return value

    def terms(self, count: int) -> list[int]:
        """The first ``count`` terms."""
        if count > 0:
            self.term(count - 1)
        return self._terms[:count]

    def prefix(self, count: int) -> list[int]:
        """Live term list holding at least ``count`` in-range terms; do not mutate."""
        # only the final cached term can lie past capacity
        if count >= len(self._terms):
            self.term(count - 1)
        return self._terms

    def covering(self, n: int) -> list[int]:
        """Grow until some cached term exceeds ``n``; return the live term list.

        Increasing tables only. Callers must not mutate the returned list.
        """
        if not self.kind.increasing:
            raise TypeError(f"{self.kind.name} is not an increasing sequence")
        if n > self.capacity_limit:
            raise CapacityExceeded(f"{n} exceeds {self.capacity_limit}")
        while self._terms[-1] <= n:
            self._extend(len(self._terms))
        return self._terms

    def floor_index(self, n: int) -> int:
        """Largest index ``d`` with ``term(d) <= n`` (increasing tables only)."""
        terms = self.covering(n)
        if n < terms[0]:
            raise ValueError(f"{n} is below the first term {terms[0]}")
        return bisect_right(terms, n) - 1


@lru_cache(maxsize=None)
def _shared(kind: SequenceKind) -> SequenceTable:
    return SequenceTable(kind)


def table(kind: SequenceKind) -> SequenceTable:
    """Process-wide shared table for ``kind`` (default capacity)."""
    return _shared(kind)


@lru_cache(maxsize=None)
def narayana_table() -> SequenceTable:
    return _shared(SequenceKind.narayana())


@lru_cache(maxsize=None)
def j_table() -> SequenceTable:
    return _shared(SequenceKind.jseries())


@lru_cache(maxsize=None)
def fibonacci_table() -> SequenceTable:
    return _shared(SequenceKind.fibonacci())


def term(tbl: SequenceTable, k: int) -> int:
    return tbl.term(k)


def narayana(k: int) -> int:
    """N(k): 1, 1, 1, 2, 3, 4, 6, 9, 13, ..."""
    return narayana_table().term(k)


def j_term(k: int) -> int:
    """J(k) = N(k + 2): 1, 2, 3, 4, 6, 9, 13, ..."""
    return j_table().term(k)


def largest_j_index_leq(n: int) -> int:
    """Index ``d`` with ``J(d) <= n < J(d + 1)``."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    return j_table().floor_index(n)


def variant_term(a: int, k: int, formula_seeds: bool = False) -> int:
    return table(SequenceKind.variant(a, formula_seeds)).term(k)


def general_term(a: int, b: int, c: int, k: int) -> int:
    return table(SequenceKind.general(a, b, c)).term(k)


class RatioSample(NamedTuple):
    k: int
    ratio: float


#: Ratios never feed the codec, so their table may run far past 64-bit terms.
RATIO_CAPACITY = 2**4096


@lru_cache(maxsize=None)
def _ratio_table() -> SequenceTable:
    return SequenceTable(SequenceKind.narayana(), capacity_limit=RATIO_CAPACITY)


def consecutive_ratios(count: int) -> list[RatioSample]:
    """``N(k) / N(k-1)`` for ``k = 1 .. count-1``, each quotient correctly rounded."""
    if count < 2:
        raise ValueError("need at least two terms to form a ratio")
    terms = _ratio_table().terms(count)
    return [RatioSample(k, terms[k] / terms[k - 1]) for k in range(1, count)]


def narayana_ratio_limit(tolerance: float = 1e-14, max_steps: int = 200) -> float:
    """Real root of ``L**3 - L**2 - 1`` in [1, 2] via safeguarded Newton.

    Newton steps that leave the current bracket fall back to bisection.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")

    def f(x: float) -> float:
        return x * x * x - x * x - 1.0

    lo, hi = 1.0, 2.0  # f(1) = -1, f(2) = 3
    x = 0.5 * (lo + hi)
    for _ in range(max_steps):
        fx = f(x)
        if abs(fx) < tolerance:
            return x
        if fx < 0:
            lo = x
        else:
            hi = x
        slope = 3.0 * x * x - 2.0 * x
        step = x - fx / slope if slope else None
        x = step if step is not None and lo < step < hi else 0.5 * (lo + hi)
    raise NonConvergence(f"no root within {tolerance} after {max_steps} steps")
