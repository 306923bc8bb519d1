"""Decomposition of integers into sums of J-series terms.

The greedy decomposition is the canonical one. :func:`all_decompositions`
is an exhaustive enumerator that works over any sequence table, including
variant sequences with negative terms, and serves as the uniqueness oracle.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import IntEnum
from itertools import accumulate
from typing import Iterable

from .errors import CapacityExceeded, SearchBudgetExceeded
from .sequences import SequenceTable, j_table, j_term

DEFAULT_NODE_BUDGET = 2**24

# Give up looking for the eventually increasing tail of a sequence after this
# many terms; such sequences are treated as unsearchable.
_TAIL_SEARCH_LIMIT = 400


class _Done(Exception):
    pass


class Gap(IntEnum):
    """Minimum distance between selected indices."""

    ANY = 1
    NON_ADJACENT = 2
    CANONICAL = 3


@dataclass(frozen=True)
class Decomposition:
    indices: tuple[int, ...]
    value: int

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def top(self) -> int:
        return self.indices[-1]

    def min_gap(self) -> int | None:
        if len(self.indices) < 2:
            return None
        return min(b - a for a, b in zip(self.indices, self.indices[1:]))


def decompose(n: int) -> Decomposition:
    """Greedy decomposition: take the largest J term that fits, repeat.

    After taking J(d) the remainder is below J(d+1) - J(d) = J(d-2), so the
    next index is at most d - 3 and the result always has gaps of 3 or more.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    terms = j_table().covering(n)
    picked = []
    rest = n
    hi = len(terms)
    while rest:
        d = bisect_right(terms, rest, 0, hi) - 1
        picked.append(d)
        rest -= terms[d]
        hi = d
    return Decomposition(tuple(reversed(picked)), n)


def recompose(indices: Decomposition | Iterable[int]) -> int:
    return sum(j_term(i) for i in indices)


def _default_window(n: int, tbl: SequenceTable) -> int:
    """Last index worth searching when representing ``n`` over ``tbl``.

    Once three consecutive terms are positive the sequence increases
    strictly. Past that point any term larger than ``n`` plus the magnitude
    of every negative term before it can never appear in a sum equal to
    ``n``. Three indices of slack cover the non-monotone prefix.
    """
    negative = 0
    k = 0
    while k < _TAIL_SEARCH_LIMIT:
        try:
            t = tbl.term(k)
        except CapacityExceeded:
            break
        if t < 0:
            negative -= t
        if k >= 2 and min(tbl.term(k - 2), tbl.term(k - 1), t) > 0 and t > n + negative:
            return k + 3
        k += 1
    raise SearchBudgetExceeded(
        f"{tbl.kind.name} has no increasing positive tail within {_TAIL_SEARCH_LIMIT} terms"
    )


def all_decompositions(
    n: int,
    tbl: SequenceTable | None = None,
    constraint: Gap = Gap.CANONICAL,
    max_index: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """Every index set over ``[0, max_index]`` whose terms sum to ``n``.

    Selected indices must be at least ``constraint`` apart. Results come out
    in lexicographic order of their index tuples; ``limit`` stops the search
    once that many have been found (which ones is then unspecified). Raises :class:`SearchBudgetExceeded`
    after visiting ``node_budget`` nodes.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    tbl = j_table() if tbl is None else tbl
    gap = int(Gap(constraint))
    if max_index is None:
        max_index = _default_window(n, tbl)
    terms = tbl.terms(max_index + 1)
    size = len(terms)

    # extreme sums of admissible index sets drawn from indices <= i,
    # stored shifted by ``gap`` so that index -1 and below read as empty
    best = [0] * (size + gap)
    worst = [0] * (size + gap)
    for i in range(size):
        best[i + gap] = max(best[i + gap - 1], terms[i] + best[i])
        worst[i + gap] = min(worst[i + gap - 1], terms[i] + worst[i])
    # running maximum: terms[i] >= every earlier term when terms[i] == peak[i]
    peak = list(accumulate(terms, max))

    found: list[tuple[int, ...]] = []
    chosen: list[int] = []
    nodes = 0

    def search(top: int, total: int) -> None:
        # largest indices first; the remainder shrinks quickly
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(f"more than {node_budget} nodes searching for {n}")
        for i in range(top, -1, -1):
            if total + best[i + gap] < n or total + worst[i + gap] > n:
                return
            subtotal = total + terms[i]
            if subtotal + worst[i] > n:
                continue
            if subtotal + best[i] < n:
                if terms[i] == peak[i]:
                    return
                continue
            chosen.append(i)
            if subtotal == n:
                found.append(tuple(reversed(chosen)))
                if limit is not None and len(found) >= limit:
                    raise _Done
            if i - gap >= 0:
                search(i - gap, subtotal)
            chosen.pop()

    try:
        search(size - 1, 0)
    except _Done:
        pass
    return sorted(found)


def representable(
    n: int,
    tbl: SequenceTable | None = None,
    constraint: Gap = Gap.CANONICAL,
    max_index: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    return bool(all_decompositions(n, tbl, constraint, max_index, node_budget, limit=1))
