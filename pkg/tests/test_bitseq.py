import itertools

import pytest
from hypothesis import given, strategies as st

from middle_levels.bitseq import (
    LatticeClass,
    as_bits,
    catalan,
    classify,
    dyck_words,
    format_bits,
    heights,
    in_class,
    layer,
    middle_level_count,
    parse_bits,
    pi_perm,
    rev_inv,
    rev_pi,
)
from middle_levels.errors import InvalidArgument

D_EQ0, D_MINUS, D_GT0, NONE = (
    LatticeClass.D_EQ0,
    LatticeClass.D_MINUS,
    LatticeClass.D_GT0,
    LatticeClass.NONE,
)

even_bits = st.integers(0, 10).flatmap(lambda m: st.lists(st.integers(0, 1), min_size=2 * m, max_size=2 * m))


def all_strings(max_len):
    for m in range(max_len + 1):
        yield from itertools.product((0, 1), repeat=m)


def walk_classify(x):
    """Independent oracle: list the heights and apply the definitions."""
    hs = [0]
    for b in x:
        hs.append(hs[-1] + (1 if b else -1))
    after = hs[1:]
    if min(hs) >= 0:
        return D_EQ0 if (not x or 0 in after) else D_GT0
    if after.count(-1) == 1:
        return D_MINUS
    return NONE


def test_rev_inv_examples():
    assert rev_inv((1, 1, 0, 1)) == (0, 1, 0, 0)
    assert rev_inv(()) == ()
    assert rev_inv((1, 0)) == (1, 0)


def test_pi_perm_examples():
    assert pi_perm((1, 1, 0, 1)) == (1, 0, 1, 1)
    assert pi_perm((0, 1)) == (0, 1)
    assert pi_perm((1, 0, 1, 0, 1, 0)) == (1, 1, 0, 1, 0, 0)


def test_pi_perm_rejects_odd_length():
    with pytest.raises(InvalidArgument):
        pi_perm((1, 0, 1))


def test_classify_examples():
    assert classify((1, 1, 0, 0)) is D_EQ0
    assert classify((1, 0, 0, 1)) is D_MINUS
    assert classify((1, 1, 0, 1)) is D_GT0
    assert classify((0, 0, 1, 1)) is NONE
    assert classify(()) is D_EQ0


def test_classify_matches_height_walk():
    for x in all_strings(12):
        assert classify(x) is walk_classify(x), x


def test_involutions_exhaustive():
    for m in range(0, 13, 2):
        for x in itertools.product((0, 1), repeat=m):
            assert rev_inv(rev_inv(x)) == x
            assert pi_perm(pi_perm(x)) == x
            assert rev_inv(pi_perm(x)) == pi_perm(rev_inv(x))


@given(even_bits)
def test_involutions_random(x):
    x = tuple(x)
    assert rev_pi(rev_pi(x)) == x
    assert rev_inv(pi_perm(x)) == pi_perm(rev_inv(x))


@pytest.mark.parametrize("n", range(1, 7))
def test_rev_pi_preserves_dyck_and_minus_sets(n):
    for cls in (D_EQ0, D_MINUS):
        members = {x for x in layer(2 * n, n) if classify(x) is cls}
        assert {rev_pi(x) for x in members} == members


@pytest.mark.parametrize("n", range(0, 7))
def test_catalan_counts(n):
    c = catalan(n)
    assert sum(1 for x in layer(2 * n, n) if classify(x) is D_EQ0) == c
    assert sum(1 for x in layer(2 * n, n) if classify(x) is D_MINUS) == (c if n else 0)
    assert sum(1 for x in layer(2 * n, n + 1) if classify(x) is D_GT0) == (c if n else 0)
    assert len(dyck_words(n)) == c


def test_class_lists_n2():
    assert {x for x in layer(4, 2) if classify(x) is D_EQ0} == {(1, 1, 0, 0), (1, 0, 1, 0)}
    assert {x for x in layer(4, 2) if classify(x) is D_MINUS} == {(1, 0, 0, 1), (0, 1, 1, 0)}
    assert {x for x in layer(4, 3) if classify(x) is D_GT0} == {(1, 1, 1, 0), (1, 1, 0, 1)}


def test_classes_disjoint_for_fixed_weight():
    for n in range(1, 6):
        for x in layer(2 * n, n):
            hits = [c for c in (D_EQ0, D_MINUS, D_GT0) if in_class(x, c, n)]
            assert len(hits) <= 1


def test_text_round_trip():
    assert parse_bits("10110") == (1, 0, 1, 1, 0)
    assert format_bits((0, 1, 1)) == "011"
    assert as_bits("01") == (0, 1)
    with pytest.raises(InvalidArgument):
        parse_bits("10a")
    with pytest.raises(InvalidArgument):
        as_bits((0, 2))


def test_heights_and_counts():
    assert list(heights((1, 0, 0, 1))) == [1, 0, -1, 0]
    assert [middle_level_count(n) for n in range(1, 9)] == [6, 20, 70, 252, 924, 3432, 12870, 48620]
    assert dyck_words(2) == [(1, 0, 1, 0), (1, 1, 0, 0)]
