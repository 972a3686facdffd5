import pytest

from middle_levels.bitseq import dyck_words
from middle_levels.errors import DomainError, InvalidArgument
from middle_levels.trees import (
    RootedTree,
    TauClass,
    ccw_next_leaf,
    cw_next_leaf,
    distance,
    encode,
    h_inv,
    h_map,
    leaf_count,
    orbit,
    plane_key,
    reroot,
    rot,
    tau1,
    tau1_inv,
    tau2,
    tau2_inv,
    tau_classify,
    thin_leaves,
)


def test_rot_examples():
    assert rot((1, 1, 0, 0)) == (1, 0, 1, 0)
    assert rot((1, 0)) == (1, 0)
    assert rot((1, 1, 0, 0, 1, 0)) == (1, 0, 1, 1, 0, 0)
    with pytest.raises(InvalidArgument):
        rot(())


def test_orbit_examples():
    assert set(orbit((1, 1, 0, 0, 1, 0))) == {(1, 1, 0, 0, 1, 0), (1, 0, 1, 1, 0, 0), (1, 1, 1, 0, 0, 0)}
    assert orbit((1, 0)) == [(1, 0)]


def test_plane_key_examples():
    assert plane_key((1, 1, 0, 0, 1, 0)) == plane_key((1, 1, 1, 0, 0, 0)) == (1, 0, 1, 1, 0, 0)
    assert plane_key((1, 1, 0, 0)) == plane_key((1, 0, 1, 0))
    assert len({plane_key(T) for T in dyck_words(3)}) == 2
    assert len({plane_key(T) for T in dyck_words(4)}) == 3


# frozen from the enumeration: plane trees with n edges
PLANE_TREES = {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 14, 7: 34}


@pytest.mark.parametrize("n", range(1, 8))
def test_orbits_partition(n):
    words = dyck_words(n)
    keys = {}
    for T in words:
        o = orbit(T)
        assert (2 * n) % len(o) == 0
        assert len({plane_key(R) for R in o}) == 1
        keys.setdefault(plane_key(T), set()).update(o)
    assert sum(len(s) for s in keys.values()) == len(words)
    assert len(keys) == PLANE_TREES[n]


@pytest.mark.parametrize("n", range(0, 9))
def test_dyck_tree_round_trip(n):
    for T in dyck_words(n):
        t = RootedTree.of(T)
        assert encode(t.children) == T
        assert t.edges == n


def test_reroot():
    assert reroot((1, 1, 0, 0), 2, 1) == (1, 1, 0, 0)
    assert reroot((1, 1, 0, 0, 1, 0), 0, 3) == (1, 0, 1, 1, 0, 0)
    with pytest.raises(InvalidArgument):
        reroot((1, 1, 0, 0), 0, 2)
    for n in range(1, 6):
        for T in dyck_words(n):
            t = RootedTree.of(T)
            o = set(orbit(T))
            for r in range(n + 1):
                for u in t.neighbors(r):
                    assert reroot(T, r, u) in o


def test_thin_leaves():
    assert len(thin_leaves((1, 1, 0, 0))) == 2
    assert thin_leaves((1, 0, 1, 0, 1, 0)) == []
    assert len(thin_leaves((1, 1, 1, 0, 0, 1, 0, 0, 1, 0))) == 2
    with pytest.raises(InvalidArgument):
        thin_leaves((1, 0))


def test_leaf_walks():
    T = (1, 1, 1, 0, 0, 1, 0, 0)
    # the thick leaf (vertex 4) has the thin leaf 3 clockwise-next to it
    assert cw_next_leaf(T, 4) == 3
    assert ccw_next_leaf(T, 3) == 4
    assert cw_next_leaf((1, 1, 0, 0), 0) == ccw_next_leaf((1, 1, 0, 0), 0) == 2
    with pytest.raises(InvalidArgument):
        cw_next_leaf(T, 1)
    for n in range(2, 7):
        for T in dyck_words(n):
            for u in RootedTree.of(T).leaves():
                assert ccw_next_leaf(T, cw_next_leaf(T, u)) == u


def test_distance():
    t = RootedTree.of((1, 1, 0, 1, 0, 0))
    assert distance(t, 2, 3) == 2
    assert distance(t, 0, 3) == 2


def test_tau1_examples():
    assert tau1((1, 1, 0, 0, 1, 0)) == (1, 0, 1, 0, 1, 0)
    assert tau1((1, 1, 0, 0, 1, 1, 0, 0)) == (1, 0, 1, 0, 1, 1, 0, 0)
    with pytest.raises(DomainError):
        tau1((1, 0, 1, 0, 1, 0))
    with pytest.raises(DomainError):
        tau1_inv((1, 1, 0, 0, 1, 0))


def test_tau2_examples():
    assert tau2((1, 1, 1, 0, 0, 1, 0, 0)) == (1, 1, 1, 1, 0, 0, 0, 0)
    assert tau2_inv((1, 1, 1, 1, 0, 0, 0, 0)) == (1, 1, 1, 0, 0, 1, 0, 0)
    with pytest.raises(DomainError):
        tau2((1, 0, 1, 0, 1, 0, 1, 0))


def test_tau_classify_examples():
    assert tau_classify((1, 1, 0, 0, 1, 0)) is TauClass.T1_PRE
    assert tau_classify((1, 0, 1, 0, 1, 0)) is TauClass.T1_IMG
    assert tau_classify((1, 0)) is TauClass.NONE


def geometric_tau2(T):
    """Move the rightmost child u of the root's leftmost child below the
    clockwise-next leaf of u; None if T is not of that shape."""
    t = RootedTree.of(T)
    if not t.children[0]:
        return None
    u1 = t.children[0][0]
    if not t.children[u1]:
        return None
    u = t.children[u1][-1]
    if t.degree(u) != 1 or t.degree(u1) < 3:
        return None
    w = cw_next_leaf(T, u)
    if w == 0 or t.degree(t.parent[w]) != 2:
        return None
    children = [list(c) for c in t.children]
    children[u1].remove(u)
    children[w].append(u)
    return encode(children)


@pytest.mark.parametrize("n", range(2, 8))
def test_tau_sets_and_inverses(n):
    for T in dyck_words(n):
        label = tau_classify(T)
        if label is TauClass.T1_PRE:
            S = tau1(T)
            assert tau1_inv(S) == T
            assert tau_classify(S) is TauClass.T1_IMG
            assert leaf_count(S) == leaf_count(T) + 1
        elif label is TauClass.T2_PRE:
            S = tau2(T)
            assert tau2_inv(S) == T
            assert tau_classify(S) is TauClass.T2_IMG
            assert leaf_count(S) == leaf_count(T) - 1
            assert geometric_tau2(T) == S
        # template membership and the geometric description agree
        assert (geometric_tau2(T) is not None) == (label is TauClass.T2_PRE)


def test_h_examples():
    assert h_map(()) == ()
    assert h_map((1, 0)) == (1, 0)
    assert h_map((1, 1, 1, 0, 0, 0)) == (1, 1, 0, 1, 0, 0)
    with pytest.raises(InvalidArgument):
        h_map((0, 1))


@pytest.mark.parametrize("n", range(0, 8))
def test_h_bijection(n):
    words = dyck_words(n)
    images = {h_map(x) for x in words}
    assert images == set(words)
    for x in words:
        assert h_inv(h_map(x)) == x
