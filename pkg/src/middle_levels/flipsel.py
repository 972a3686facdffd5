"""Which flippable pairs of paths get flipped.

Each first vertex x (a Dyck word) is mapped to the rooted tree h^{-1}(x).
Trees in the source or image of tau1/tau2 belong to a flippable pair; the
two predicates below pick exactly one tau1-pair per plane tree with a thin
leaf and a sparse set of tau2-pairs, so that the chosen pairs form a
spanning tree on the cycles of the unflipped 2-factor.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .bitseq import Bits, LatticeClass, in_class
from .errors import DomainError, InvalidArgument
from .trees import (
    RootedTree,
    TauClass,
    cw_next_leaf,
    encode,
    h_inv,
    h_map,
    iter_orbit,
    reroot_children,
    tau1,
    tau1_inv,
    tau2,
    tau2_inv,
    tau_classify,
    thin_leaves,
)

FlipPredicate = Callable[[int, Bits], bool]


def is_flip_tree_1(T: Sequence[int]) -> bool:
    T = tuple(T)
    if tau_classify(T) is not TauClass.T1_PRE:
        raise DomainError(f"{T} is not in the tau1 source set")
    return T == min(R for R in iter_orbit(T) if tau_classify(R) is TauClass.T1_PRE)


def _special_tree(n: int) -> Bits:
    return (1,) * (n - 1) + (0,) * (n - 2) + (1, 0, 0)


def _leading_ones(T: Bits) -> int:
    d = 0
    while T[d]:
        d += 1
    return d


def _leaf_rooted_with_twin(R: Bits) -> bool:
    """Root is a leaf, and the leftmost leaf has a leaf sibling right after it."""
    if len(R) < 4 or R[-1] != 0:
        return False
    h = 0
    for b in R[:-1]:
        h += 1 if b else -1
        if h == 0:
            return False
    d = _leading_ones(R)
    return d >= 2 and R[d: d + 3] == (0, 1, 0)


def is_flip_tree_2(T: Sequence[int]) -> bool:
    T = tuple(T)
    if tau_classify(T) is not TauClass.T2_PRE:
        raise DomainError(f"{T} is not in the tau2 source set")
    n = len(T) // 2
    if T == _special_tree(n):
        return False
    thin = thin_leaves(T)
    if len(thin) > 1:
        return False
    (v,) = thin
    t = RootedTree(T)
    v1 = t.parent[v]
    v2 = t.parent[v1]
    w = cw_next_leaf(T, v)
    # move v from under v1 to under v2, directly left of v1
    children = [list(c) for c in t.children]
    children[v1].remove(v)
    children[v2].insert(children[v2].index(v1), v)
    parent = list(t.parent)
    parent[v] = v2
    nbrs = [([parent[u]] if u else []) + children[u] for u in range(n + 1)]
    (w_nb,) = nbrs[w]
    T2 = encode(reroot_children(nbrs, w, w_nb), w)
    d = _leading_ones(T2)
    best = T2
    rotations = iter_orbit(T2)
    next(rotations)
    for R in rotations:
        if not _leaf_rooted_with_twin(R):
            continue
        d2 = _leading_ones(R)
        if d2 > d:
            return False
        if d2 == d and R < best:
            best = R
    return best == T2


def is_flip_vertex(n: int, x: Sequence[int]) -> bool:
    x = tuple(x)
    if len(x) != 2 * n or not in_class(x, LatticeClass.D_EQ0, n):
        raise InvalidArgument("is_flip_vertex needs a Dyck word of length 2n")
    T = h_inv(x)
    label = tau_classify(T)
    if label is TauClass.T1_PRE:
        return is_flip_tree_1(T)
    if label is TauClass.T1_IMG:
        return is_flip_tree_1(tau1_inv(T))
    if label is TauClass.T2_PRE:
        return is_flip_tree_2(T)
    if label is TauClass.T2_IMG:
        return is_flip_tree_2(tau2_inv(T))
    return False


def never_flip(n: int, x: Sequence[int]) -> bool:
    """Flip policy that yields the unmodified 2-factor."""
    return False


def partner(n: int, x: Sequence[int]) -> Bits | None:
    """First vertex of the path paired with the one starting at x, if any."""
    T = h_inv(x)
    label = tau_classify(T)
    if label is TauClass.T1_PRE:
        return h_map(tau1(T))
    if label is TauClass.T1_IMG:
        return h_map(tau1_inv(T))
    if label is TauClass.T2_PRE:
        return h_map(tau2(T))
    if label is TauClass.T2_IMG:
        return h_map(tau2_inv(T))
    return None
