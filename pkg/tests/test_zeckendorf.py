import pytest
from hypothesis import given, strategies as st

from narayana.errors import SearchBudgetExceeded
from narayana.sequences import SequenceKind, j_term, largest_j_index_leq, table
from narayana.zeckendorf import Decomposition, Gap, all_decompositions, decompose, recompose, representable

from conftest import brute_force_sums, iterate

J = table(SequenceKind.jseries())


@pytest.mark.parametrize("n, indices", [(10, (0, 5)), (1, (0,)), (12, (2, 5)), (6, (4,)), (15, (1, 6))])
def test_decompose_examples(n, indices):
    dec = decompose(n)
    assert dec.indices == indices
    assert dec.value == n


@pytest.mark.parametrize("indices, value", [((0, 5), 10), ((3,), 4), ((1, 4), 8)])
def test_recompose_examples(indices, value):
    assert recompose(indices) == value
    assert recompose(Decomposition(indices, value)) == value


def test_greedy_is_canonical_and_round_trips():
    for n in range(1, 100_001):
        dec = decompose(n)
        idx = dec.indices
        assert idx[-1] == largest_j_index_leq(n)
        assert all(b - a >= 3 for a, b in zip(idx, idx[1:]))
        assert recompose(dec) == n


@given(st.integers(min_value=1, max_value=2**63 - 1))
def test_round_trip_full_range(n):
    dec = decompose(n)
    assert recompose(dec) == n
    assert dec.min_gap() is None or dec.min_gap() >= 3


@pytest.mark.parametrize(
    "n, gap, expected",
    [
        (6, Gap.CANONICAL, [(4,)]),
        (6, Gap.NON_ADJACENT, [(1, 3), (4,)]),
        (10, Gap.CANONICAL, [(0, 5)]),
    ],
)
def test_all_decompositions_examples(n, gap, expected):
    assert all_decompositions(n, J, gap, max_index=10) == expected


def test_weaker_rule_reading_of_ten():
    # 10 = J(3) + J(4) is admissible only when adjacent indices are allowed
    assert (3, 4) in all_decompositions(10, J, Gap.ANY, max_index=10)
    assert (3, 4) not in all_decompositions(10, J, Gap.NON_ADJACENT, max_index=10)


def test_enumerator_matches_itertools_oracle():
    terms = iterate((1, 2, 3), 11)
    for gap in Gap:
        for n in range(1, 60):
            assert all_decompositions(n, J, gap, max_index=10) == brute_force_sums(n, terms, int(gap))


def test_enumerator_matches_oracle_on_variants():
    for a in (-3, -2, -1, 0, 2):
        tbl = table(SequenceKind.variant(a))
        terms = tbl.terms(13)
        for gap in Gap:
            for n in range(1, 25):
                assert all_decompositions(n, tbl, gap, max_index=12) == brute_force_sums(n, terms, int(gap))


def test_uniqueness_under_canonical_gap():
    for n in range(1, 5001):
        assert all_decompositions(n, J, Gap.CANONICAL) == [decompose(n).indices]


def test_greedy_uses_fewest_terms():
    for n in range(1, 2001):
        fewest = min(len(d) for d in all_decompositions(n, J, Gap.NON_ADJACENT))
        assert len(decompose(n)) == fewest


def test_weak_rule_is_ambiguous():
    assert len(all_decompositions(6, J, Gap.NON_ADJACENT)) >= 2


def test_default_window_covers_search():
    # default window must find everything a much wider window finds
    for n in range(1, 300):
        assert all_decompositions(n, J, Gap.NON_ADJACENT) == all_decompositions(
            n, J, Gap.NON_ADJACENT, max_index=largest_j_index_leq(n) + 12
        )
    for a in (-2, 3):
        tbl = table(SequenceKind.variant(a))
        for n in range(1, 60):
            for gap in (Gap.NON_ADJACENT, Gap.CANONICAL):
                assert all_decompositions(n, tbl, gap) == all_decompositions(n, tbl, gap, max_index=45)


def test_representable():
    assert not representable(2, table(SequenceKind.variant(-2)), Gap.CANONICAL)
    assert representable(5, J, Gap.CANONICAL)
    # -2 + 3 + 1: possible once gaps of one are allowed
    assert representable(2, table(SequenceKind.variant(-2)), Gap.ANY)
    assert all_decompositions(2, table(SequenceKind.variant(-2)), Gap.ANY) == [(0, 2, 3)]


def test_search_budget():
    with pytest.raises(SearchBudgetExceeded):
        all_decompositions(5000, J, Gap.ANY, node_budget=50)


def test_degenerate_variant_is_unsearchable():
    with pytest.raises(SearchBudgetExceeded):
        representable(3, table(SequenceKind.variant(5)))


def test_output_is_lexicographic():
    out = all_decompositions(40, J, Gap.ANY)
    assert out == sorted(out)
    assert len(out) > 3
