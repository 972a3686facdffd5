import pytest

from middle_levels.bitseq import dyck_words
from middle_levels.errors import DomainError, InvalidArgument
from middle_levels.flipsel import is_flip_tree_1, is_flip_tree_2, is_flip_vertex, never_flip, partner
from middle_levels.paths import path_from_first
from middle_levels.trees import TauClass, h_map, orbit, plane_key, tau_classify, thin_leaves


def test_is_flip_tree_1_examples():
    assert is_flip_tree_1((1, 1, 0, 0, 1, 0))
    assert is_flip_tree_1((1, 1, 0, 0, 1, 0, 1, 1, 0, 0))
    assert not is_flip_tree_1((1, 1, 0, 0, 1, 1, 0, 0, 1, 0))
    with pytest.raises(DomainError):
        is_flip_tree_1((1, 0, 1, 0, 1, 0))


def test_is_flip_tree_2_examples():
    assert not is_flip_tree_2((1, 1, 1, 0, 0, 1, 0, 0))
    assert not is_flip_tree_2((1, 1, 1, 0, 0, 1, 0, 0, 1, 0))
    with pytest.raises(DomainError):
        is_flip_tree_2((1, 1, 0, 0, 1, 0))


@pytest.mark.parametrize("n, expected", [(4, 0), (5, 1), (6, 2), (7, 5)])
def test_is_flip_tree_2_counts(n, expected):
    hits = [T for T in dyck_words(n) if tau_classify(T) is TauClass.T2_PRE and is_flip_tree_2(T)]
    assert len(hits) == expected


@pytest.mark.parametrize("n", range(3, 8))
def test_one_tau1_choice_per_plane_tree_with_thin_leaf(n):
    chosen = {}
    for T in dyck_words(n):
        if tau_classify(T) is TauClass.T1_PRE and is_flip_tree_1(T):
            key = plane_key(T)
            assert key not in chosen
            chosen[key] = T
    with_thin = {plane_key(T) for T in dyck_words(n) if thin_leaves(T)}
    assert set(chosen) == with_thin


def test_is_flip_vertex_examples():
    assert not is_flip_vertex(2, (1, 1, 0, 0))
    assert not is_flip_vertex(2, (1, 0, 1, 0))
    assert is_flip_vertex(3, (1, 1, 0, 0, 1, 0))
    assert not is_flip_vertex(3, (1, 1, 0, 1, 0, 0))
    with pytest.raises(InvalidArgument):
        is_flip_vertex(3, (1, 0, 0, 1, 1, 0))
    assert never_flip(3, (1, 1, 0, 0, 1, 0)) is False


@pytest.mark.parametrize("n", range(1, 7))
def test_pairing(n):
    for x in dyck_words(n):
        if not is_flip_vertex(n, x):
            continue
        y = partner(n, x)
        assert y is not None and y != x
        assert is_flip_vertex(n, y)
        assert partner(n, y) == x
        P, P2 = path_from_first(n, x), path_from_first(n, y)
        R, R2 = path_from_first(n, x, True), path_from_first(n, y, True)
        assert set(P) | set(P2) == set(R) | set(R2)
        assert P[-1] == R2[-1] and P2[-1] == R[-1]
        # lengths unchanged or shifted by -4/+4
        diff = sorted([len(R) - len(P), len(R2) - len(P2)])
        assert diff in ([0, 0], [-4, 4])


def test_partner_none_outside_tau_sets():
    assert partner(3, (1, 1, 0, 1, 0, 0)) is None
    assert partner(3, h_map((1, 1, 0, 0, 1, 0))) == h_map((1, 0, 1, 0, 1, 0))
