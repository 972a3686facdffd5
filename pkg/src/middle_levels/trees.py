"""Ordered rooted trees encoded as Dyck words.

Reading a Dyck word left to right, a 1 adds a new rightmost child to the
current vertex and moves to it, a 0 moves back to the parent.  Vertex 0 is
the root and vertex i is the one created by the i-th 1-bit (preorder).

Leaves are the degree-1 vertices of the underlying tree, so the root counts
as a leaf when it has a single child.  Leaves are ordered cyclically along
the contour of the plane embedding: the root first if it is a leaf, then the
remaining leaves in preorder.  The counterclockwise-next leaf of u is the one
after u in that cyclic order, the clockwise-next leaf the one before it.

"Lexicographically smallest" always means tuple order with 0 < 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .bitseq import Bits, LatticeClass, as_bits, classify, pi_perm
from .errors import DomainError, InvalidArgument


def _check_dyck(T: Sequence[int]) -> Bits:
    T = as_bits(T)
    if len(T) % 2 or sum(T) * 2 != len(T) or classify(T) is not LatticeClass.D_EQ0:
        raise InvalidArgument(f"not a Dyck word: {T}")
    return T


@dataclass(frozen=True)
class RootedTree:
    """A Dyck word together with its parent/children index."""

    dyck: Bits

    @classmethod
    def of(cls, T: Sequence[int]) -> "RootedTree":
        return cls(_check_dyck(T))

    @property
    def edges(self) -> int:
        return len(self.dyck) // 2

    @cached_property
    def parent(self) -> list[int]:
        return _index(self.dyck)[0]

    @cached_property
    def children(self) -> list[list[int]]:
        return _index(self.dyck)[1]

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (v != 0)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in counterclockwise order, parent first."""
        return ([self.parent[v]] if v else []) + self.children[v]

    def leaves(self) -> list[int]:
        """Leaves in cyclic contour order, starting at the root if it is one."""
        return [v for v in range(self.edges + 1) if self.degree(v) == 1]


def _index(T: Bits) -> tuple[list[int], list[list[int]]]:
    parent = [-1]
    children: list[list[int]] = [[]]
    cur = 0
    for b in T:
        if b:
            v = len(parent)
            parent.append(cur)
            children.append([])
            children[cur].append(v)
            cur = v
        else:
            cur = parent[cur]
    return parent, children


def encode(children: Sequence[Sequence[int]], root: int = 0) -> Bits:
    """Dyck word of the ordered tree given by child lists."""
    out: list[int] = []
    stack = [iter(children[root])]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            if stack:
                out.append(0)
        else:
            out.append(1)
            stack.append(iter(children[v]))
    return tuple(out)


def split(T: Sequence[int]) -> tuple[Bits, Bits]:
    """T = (1) left (0) right with left balanced."""
    h = 0
    for i, b in enumerate(T):
        h += 1 if b else -1
        if h == 0:
            return tuple(T[1:i]), tuple(T[i + 1:])
    raise InvalidArgument("not a nonempty Dyck word")


def _match(T: Bits) -> int:
    """Index of the 0 closing the bit at position 0."""
    h = 0
    for i, b in enumerate(T):
        h += 1 if b else -1
        if h == 0:
            return i
    raise InvalidArgument("not a nonempty Dyck word")


def rot(T: Sequence[int]) -> Bits:
    """Move the root to its leftmost child."""
    if not T:
        raise InvalidArgument("cannot rotate the empty tree")
    left, right = split(T)
    return left + (1,) + right + (0,)


def iter_orbit(T: Sequence[int]) -> Iterator[Bits]:
    """Distinct rotations of T, starting at T, one at a time (O(n) memory)."""
    T = tuple(T)
    yield T
    R = rot(T)
    while R != T:
        yield R
        R = rot(R)


def orbit(T: Sequence[int]) -> list[Bits]:
    """Distinct rotations of T, in rotation order starting at T."""
    return list(iter_orbit(T))


def plane_key(T: Sequence[int]) -> Bits:
    """Canonical representative (minimum) of the rotation class of T."""
    return min(iter_orbit(T))


def reroot_children(neighbors: Sequence[Sequence[int]], r: int, u: int) -> list[list[int]]:
    """Child lists of the plane tree rooted at r with u as leftmost child.

    ``neighbors[v]`` lists the neighbors of v in counterclockwise order.
    """
    nb = neighbors[r]
    if u not in nb:
        raise InvalidArgument(f"({r}, {u}) is not an edge")
    i = nb.index(u)
    children: list[list[int]] = [[] for _ in neighbors]
    children[r] = list(nb[i:]) + list(nb[:i])
    stack = [(c, r) for c in children[r]]
    while stack:
        v, p = stack.pop()
        nv = neighbors[v]
        j = nv.index(p)
        children[v] = list(nv[j + 1:]) + list(nv[:j])
        stack.extend((c, v) for c in children[v])
    return children


def reroot(T: Sequence[int], r: int, u: int) -> Bits:
    t = RootedTree.of(T)
    nbrs = [t.neighbors(v) for v in range(t.edges + 1)]
    return encode(reroot_children(nbrs, r, u), r)


def thin_leaves(T: Sequence[int]) -> list[int]:
    t = RootedTree.of(T)
    if t.edges < 2:
        raise InvalidArgument("thin/thick leaves need at least two edges")
    out = []
    for v in t.leaves():
        (nb,) = t.neighbors(v)
        if t.degree(nb) == 2:
            out.append(v)
    return out


def leaf_count(T: Sequence[int]) -> int:
    return len(RootedTree.of(T).leaves())


def _leaf_step(T: Sequence[int], u: int, step: int) -> int:
    leaves = RootedTree.of(T).leaves()
    if u not in leaves:
        raise InvalidArgument(f"vertex {u} is not a leaf")
    if len(leaves) < 2:
        raise InvalidArgument("need at least two leaves")
    return leaves[(leaves.index(u) + step) % len(leaves)]


def cw_next_leaf(T: Sequence[int], u: int) -> int:
    return _leaf_step(T, u, -1)


def ccw_next_leaf(T: Sequence[int], u: int) -> int:
    return _leaf_step(T, u, +1)


def distance(t: RootedTree, a: int, b: int) -> int:
    def ancestors(v: int) -> list[int]:
        out = [v]
        while v:
            v = t.parent[v]
            out.append(v)
        return out

    pa = ancestors(a)
    pb = ancestors(b)
    common = set(pa) & set(pb)
    return next(i for i, v in enumerate(pa) if v in common) + next(
        i for i, v in enumerate(pb) if v in common
    )


# -- tree rewrites ----------------------------------------------------------

def is_tau1_source(T: Bits) -> bool:
    return len(T) >= 6 and T[:4] == (1, 1, 0, 0)


def is_tau1_image(T: Bits) -> bool:
    return len(T) >= 6 and T[:4] == (1, 0, 1, 0)


def tau1(T: Sequence[int]) -> Bits:
    T = tuple(T)
    if not is_tau1_source(T):
        raise DomainError(f"{T} is not in the source set of tau1")
    return (1, 0, 1, 0) + T[4:]


def tau1_inv(T: Sequence[int]) -> Bits:
    T = tuple(T)
    if not is_tau1_image(T):
        raise DomainError(f"{T} is not in the image of tau1")
    return (1, 1, 0, 0) + T[4:]


def _tau2_source_cut(T: Bits) -> int | None:
    """Start of the (1,1,0,0) block in the tau2 source template, or None.

    Template: prefix (1,1,0,0) (0)^k (1,0) (0) T0, where the final (0)
    closes the root's leftmost subtree.
    """
    if len(T) < 8 or not T[0]:
        return None
    e = _match(T)
    if T[e - 2: e] != (1, 0):
        return None
    s = e - 3
    while s >= 0 and T[s] == 0:
        s -= 1
    zeros = e - 3 - s
    if zeros < 2 or s < 2 or T[s - 1: s + 1] != (1, 1):
        return None
    return s - 1


def _tau2_image_cut(T: Bits) -> int | None:
    """Start of the (1,1,1,0,0,0) block in the tau2 image template, or None."""
    if len(T) < 8 or not T[0]:
        return None
    e = _match(T)
    s = e
    while s >= 0 and T[s] == 0:
        s -= 1
    zeros = e - s
    if zeros < 4 or s < 2 or T[s - 2: s + 1] != (1, 1, 1):
        return None
    return s - 2


def is_tau2_source(T: Bits) -> bool:
    return _tau2_source_cut(T) is not None


def is_tau2_image(T: Bits) -> bool:
    return _tau2_image_cut(T) is not None


def tau2(T: Sequence[int]) -> Bits:
    """Reattach the thick leaf u (rightmost child of the root's leftmost
    child) below its clockwise-next leaf."""
    T = tuple(T)
    cut = _tau2_source_cut(T)
    if cut is None:
        raise DomainError(f"{T} is not in the source set of tau2")
    e = _match(T)
    k = e - 2 - cut - 4
    return T[:cut] + (1, 1, 1, 0, 0, 0) + (0,) * k + (0,) + T[e + 1:]


def tau2_inv(T: Sequence[int]) -> Bits:
    T = tuple(T)
    cut = _tau2_image_cut(T)
    if cut is None:
        raise DomainError(f"{T} is not in the image of tau2")
    e = _match(T)
    k = e - cut - 6
    return T[:cut] + (1, 1, 0, 0) + (0,) * k + (1, 0) + (0,) + T[e + 1:]


class TauClass(enum.Enum):
    T1_PRE = "tau1-source"
    T1_IMG = "tau1-image"
    T2_PRE = "tau2-source"
    T2_IMG = "tau2-image"
    NONE = "none"


def tau_classify(T: Sequence[int]) -> TauClass:
    T = tuple(T)
    hits = [
        label
        for label, test in (
            (TauClass.T1_PRE, is_tau1_source),
            (TauClass.T1_IMG, is_tau1_image),
            (TauClass.T2_PRE, is_tau2_source),
            (TauClass.T2_IMG, is_tau2_image),
        )
        if test(T)
    ]
    assert len(hits) <= 1, f"tau sets overlap at {T}: {hits}"
    return hits[0] if hits else TauClass.NONE


# -- the bijection h --------------------------------------------------------

def _components(x: Bits) -> list[Bits]:
    """Inner words of the top-level blocks: x = (1) c1 (0) (1) c2 (0) ..."""
    out = []
    h = 0
    start = 0
    for i, b in enumerate(x):
        h += 1 if b else -1
        if h == 0:
            out.append(x[start + 1: i])
            start = i + 1
    return out


def h_map(x: Sequence[int]) -> Bits:
    """h(()) = (); h((1) l (0) r) = (1) pi(h(l)) (0) h(r)."""
    x = _check_dyck(x)
    return _h(x)


def _h(x: Bits) -> Bits:
    out: tuple[int, ...] = ()
    for inner in _components(x):
        out += (1,) + pi_perm(_h(inner)) + (0,)
    return out


def h_inv(x: Sequence[int]) -> Bits:
    x = _check_dyck(x)
    return _h_inv(x)


def _h_inv(x: Bits) -> Bits:
    out: tuple[int, ...] = ()
    for inner in _components(x):
        out += (1,) + _h_inv(pi_perm(inner)) + (0,)
    return out
