import itertools
import random

import pytest

from middle_levels.bitseq import classify, rev_pi
from middle_levels.errors import InvalidArgument, UnderflowError
from middle_levels.lazyview import (
    T00,
    T01,
    T10,
    T11,
    LazyView,
    view_apply_revpi,
    view_bit,
    view_classify,
    view_drop_last_two,
    view_new,
)


def pair_table(v):
    return {(t, h): v.pair_count(t, h) for t in range(4) for h in range(-20, 21) if v.pair_count(t, h)}


def test_view_new_known_counters():
    v = view_new((1, 1, 0, 0, 0, 0, 1, 0, 1, 0))
    assert pair_table(v) == {(T10, 1): 1, (T00, 0): 1, (T01, -1): 2}


def test_view_new_small():
    v = view_new((1, 0))
    assert (v.c0, v.c1) == (1, 1)
    assert pair_table(v) == {}
    v = view_new((1, 1, 0, 0))
    assert (v.c0, v.c1) == (2, 2)
    assert pair_table(v) == {(T10, 1): 1}


def test_view_new_rejects_odd_or_short():
    for x in ((1,), (1, 0, 1), ()):
        with pytest.raises(InvalidArgument):
            view_new(x)


def test_drop_examples():
    v = view_new((1, 1, 0, 1, 0, 0))
    assert view_drop_last_two(v).materialize() == (1, 1, 0, 1)
    w = view_drop_last_two(view_apply_revpi(v))
    assert w.materialize() == rev_pi((1, 1, 0, 1, 0, 0))[:-2]
    with pytest.raises(UnderflowError):
        view_drop_last_two(view_new((1, 0)))


def test_revpi_examples():
    v = view_new((1, 1, 0, 1))
    w = view_apply_revpi(v)
    assert w.materialize() == (0, 0, 1, 0)
    assert view_bit(w, 0) == 0
    assert view_apply_revpi(w).materialize() == (1, 1, 0, 1)
    # the functional wrappers leave their argument alone
    assert v.materialize() == (1, 1, 0, 1)


def test_revpi_symbolic_positions():
    # which base position (1-based) each logical bit comes from
    v = view_new((1, 0) * 5)
    v.drop_last_two()
    v.apply_revpi()
    assert [v.phys(i) + 1 for i in range(len(v))] == [8, 6, 7, 4, 5, 2, 3, 1]
    assert v.complemented
    for _ in range(3):
        v.drop_last_two()
        v.apply_revpi()
    assert [v.phys(i) + 1 for i in range(len(v))] == [4, 6]
    assert not v.complemented


def test_bit_range_checked():
    v = view_new((1, 0, 1, 0))
    assert [view_bit(v, i) for i in range(4)] == [1, 0, 1, 0]
    with pytest.raises(InvalidArgument):
        view_bit(v, 4)


def test_classify_examples():
    assert view_classify(view_new((1, 1, 0, 0))) is classify((1, 1, 0, 0))
    assert view_classify(view_new((1, 0, 0, 1))) is classify((1, 0, 0, 1))


def check(v, ref):
    assert v.materialize() == ref
    assert v.c0 + v.c1 == len(ref) == len(v)
    assert v.c1 == sum(ref)
    assert v.copy().classify() is classify(ref)
    fresh = LazyView(ref)
    assert pair_table(v) == pair_table(fresh)


def replays(v, ref, depth):
    yield v, ref
    if depth == 0:
        return
    w = v.copy()
    w.apply_revpi()
    yield from replays(w, rev_pi(ref), depth - 1)
    if len(ref) >= 4:
        w = v.copy()
        w.drop_last_two()
        yield from replays(w, ref[:-2], depth - 1)


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 12])
def test_replay_exhaustive(m):
    for x in itertools.product((0, 1), repeat=m):
        for v, ref in replays(LazyView(x), x, 3 if m <= 8 else 2):
            check(v, ref)


def test_replay_random(rng):
    for _ in range(20000):
        m = 2 * rng.randint(1, 20)
        x = tuple(rng.randint(0, 1) for _ in range(m))
        v = LazyView(x)
        ref = x
        for _ in range(rng.randint(0, 30)):
            if len(ref) >= 4 and rng.random() < 0.6:
                v.drop_last_two()
                ref = ref[:-2]
            else:
                v.apply_revpi()
                ref = rev_pi(ref)
            assert v.copy().classify() is classify(ref)
            assert v.bit(len(ref) - 1) == ref[-1] and v.bit(len(ref) - 2) == ref[-2]
        assert v.materialize() == ref


def test_operations_are_constant_cost():
    for m in (8, 64, 512):
        v = LazyView((1, 0) * (m // 2))
        assert v.ops == m
        before = v.ops
        v.drop_last_two()
        v.apply_revpi()
        v.classify()
        v.bit(0)
        assert v.ops - before == 4
