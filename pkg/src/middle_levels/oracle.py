"""Brute-force ground truth for small n.

Everything here is deliberately simple: explicit graphs, explicit vertex
sets, cycle extraction by running the stepper from every unvisited vertex.
The full-graph builders refuse n above ``DESK_BOUND`` unless told otherwise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np
from numba import njit

from .bitseq import (
    Bits,
    LatticeClass,
    as_bits,
    dyck_words,
    in_class,
    layer,
    middle_level_count,
    middle_vertices,
)
from .errors import InvalidArgument, ResourceLimitError
from .flipsel import is_flip_tree_1, is_flip_tree_2, is_flip_vertex, never_flip, partner
from .hamcycle import CycleIterator
from .paths import path_from_first
from .trees import TauClass, h_inv, plane_key, tau1, tau2, tau_classify

DESK_BOUND = 8
# the stepper-only checks (visited bitmap, flip streams) go this far
STEPPER_BOUND = 12


def _check_bound(n: int, bound: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the configured bound {bound}")


# -- the middle levels graph --------------------------------------------------

def build_middle_levels(n: int, bound: int = DESK_BOUND) -> nx.Graph:
    _check_bound(n, bound)
    G = nx.Graph()
    G.add_nodes_from(middle_vertices(2 * n + 1, n))
    for x in layer(2 * n + 1, n):
        for i, b in enumerate(x):
            if not b:
                G.add_edge(x, x[:i] + (1,) + x[i + 1:])
    return G


# -- ranked visited set ---------------------------------------------------------

def _binomials(m: int) -> np.ndarray:
    t = np.zeros((m + 1, m + 1), np.int64)
    for a in range(m + 1):
        for b in range(a + 1):
            t[a, b] = comb(a, b)
    return t


def vertex_rank(n: int, x: Sequence[int]) -> int:
    """Position of x in the colex listing of weight-n then weight-(n+1) strings."""
    r = 0
    j = 0
    for i, b in enumerate(x):
        if b:
            j += 1
            r += comb(i, j)
    return r if j == n else comb(2 * n + 1, n) + r


class VisitedSet:
    """One bit per vertex of Q_{2n+1}(n, n+1), indexed by rank."""

    def __init__(self, n: int):
        _check_bound(n, STEPPER_BOUND)
        self.n = n
        self.bits = bytearray((middle_level_count(n) + 7) // 8)

    def add(self, x: Sequence[int]) -> bool:
        """Mark x; return False if it was already marked."""
        r = vertex_rank(self.n, x)
        byte, bit = divmod(r, 8)
        if self.bits[byte] >> bit & 1:
            return False
        self.bits[byte] |= 1 << bit
        return True


# -- sequence verification --------------------------------------------------

@dataclass
class CycleReport:
    n: int
    length: int = 0
    all_valid_vertices: bool = True
    gray_steps: bool = True
    all_distinct: bool = True
    covers_all: bool = True
    closes_cyclically: bool = True
    first_violation: Optional[int] = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.all_valid_vertices
            and self.gray_steps
            and self.all_distinct
            and self.covers_all
            and self.closes_cyclically
        )

    def _fail(self, flag: str, index: int, what: str) -> None:
        setattr(self, flag, False)
        if self.first_violation is None or index < self.first_violation:
            self.first_violation = index
        if len(self.problems) < 20:
            self.problems.append(f"{index}: {what}")


def _distance(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for u, v in zip(a, b) if u != v)


def verify_cycle(n: int, seq: Iterable[Sequence[int]]) -> CycleReport:
    """Check that seq lists every vertex of Q_{2n+1}(n, n+1) once, cyclically.

    Streams its input; memory is the visited bitmap.
    """
    rep = CycleReport(n)
    seen = VisitedSet(n)
    first = prev = None
    i = -1
    for i, x in enumerate(seq):
        x = tuple(x)
        if len(x) != 2 * n + 1 or any(b not in (0, 1) for b in x) or sum(x) not in (n, n + 1):
            rep._fail("all_valid_vertices", i, f"not a vertex: {x}")
            prev = x
            continue
        if prev is None:
            first = x
        elif _distance(prev, x) != 1:
            rep._fail("gray_steps", i, "not a one-bit step")
        if not seen.add(x):
            rep._fail("all_distinct", i, f"repeated vertex {x}")
        prev = x
    rep.length = i + 1
    if rep.length != middle_level_count(n) or not rep.all_distinct or not rep.all_valid_vertices:
        rep._fail("covers_all", rep.length, f"{rep.length} of {middle_level_count(n)} vertices")
    if first is None or prev is None or _distance(prev, first) != 1:
        rep._fail("closes_cyclically", rep.length, "last vertex is not adjacent to the first")
    return rep


@njit(cache=True)
def _mark_flips(n, x, positions, bitmap, binom, bad):
    """Apply flips to x, marking each vertex reached; record the first repeat
    or invalid vertex in bad[0] (index) and bad[1] (kind)."""
    m = 2 * n + 1
    low = binom[m, n]
    for s in range(len(positions)):
        p = positions[s]
        if p < 0 or p >= m:
            if bad[0] < 0:
                bad[0] = s
                bad[1] = 1
            continue
        x[p] ^= 1
        r = 0
        j = 0
        for i in range(m):
            if x[i]:
                j += 1
                r += binom[i, j]
        if j == n + 1:
            r += low
        elif j != n:
            if bad[0] < 0:
                bad[0] = s
                bad[1] = 1
            continue
        if bitmap[r >> 3] >> (r & 7) & 1:
            if bad[0] < 0:
                bad[0] = s
                bad[1] = 2
        bitmap[r >> 3] |= 1 << (r & 7)


def verify_flip_stream(n: int, start: Sequence[int], chunks: Iterable[np.ndarray]) -> CycleReport:
    """verify_cycle for a sequence given as bit positions flipped from start.

    One-bit steps hold by construction; validity, distinctness, coverage and
    closure are checked.
    """
    _check_bound(n, STEPPER_BOUND)
    rep = CycleReport(n)
    x = np.array(as_bits(start), np.uint8)
    x0 = x.copy()
    bitmap = np.zeros((middle_level_count(n) + 7) // 8, np.uint8)
    binom = _binomials(2 * n + 1)
    bad = np.array([-1, 0], np.int64)
    done = 0
    for ch in chunks:
        before = bad[0]
        _mark_flips(n, x, np.asarray(ch, np.int64), bitmap, binom, bad)
        if before < 0 and bad[0] >= 0:
            flag = "all_valid_vertices" if bad[1] == 1 else "all_distinct"
            rep._fail(flag, done + int(bad[0]), "invalid vertex" if bad[1] == 1 else "repeated vertex")
        done += len(ch)
    rep.length = done
    if done != middle_level_count(n) or bad[0] >= 0:
        rep._fail("covers_all", done, f"{done} of {middle_level_count(n)} vertices")
    if not np.array_equal(x, x0):
        rep._fail("closes_cyclically", done, "stream does not return to the start")
    return rep


# -- 2-factor -------------------------------------------------------------------

def two_factor(n: int, use_flips: bool, bound: int = DESK_BOUND) -> list[list[Bits]]:
    """Cycles of the stepper, started from every vertex not yet covered."""
    _check_bound(n, bound)
    pred = is_flip_vertex if use_flips else never_flip
    covered: set[Bits] = set()
    cycles = []
    for v in middle_vertices(2 * n + 1, n):
        if v in covered:
            continue
        it = CycleIterator(n, v, is_flip=pred)
        cyc = []
        while True:
            x = next(it)
            cyc.append(x)
            if x == v:
                break
        covered.update(cyc)
        cycles.append(cyc)
    return cycles


def first_vertex_sequence(cycle: Sequence[Bits]) -> list[Bits]:
    """Heads of the vertices x∘(0), x a Dyck word, in traversal order."""
    out = []
    for v in cycle:
        n = len(v) // 2
        if v[-1] == 0 and in_class(v[:-1], LatticeClass.D_EQ0, n):
            out.append(v[:-1])
    return out


def plane_tree_count(n: int) -> int:
    return len({plane_key(T) for T in dyck_words(n)})


# -- path families ------------------------------------------------------------

def path_family(n: int, flip: bool) -> list[list[Bits]]:
    """All paths of the family, one per Dyck word of length 2n."""
    return [path_from_first(n, x0, flip) for x0 in dyck_words(n)]


def flip_pairs(n: int) -> list[tuple[Bits, Bits]]:
    """(x, partner) for every first vertex x chosen by is_flip_vertex."""
    out = []
    for x in dyck_words(n):
        if is_flip_vertex(n, x):
            y = partner(n, x)
            assert y is not None
            out.append((x, y))
    return out


# -- auxiliary graphs ------------------------------------------------------------

class EdgeLabel(enum.Enum):
    TAU1 = "tau1"
    TAU2 = "tau2"


def build_G(n: int, bound: int = DESK_BOUND) -> nx.MultiDiGraph:
    return _aux_graph(n, bound, only_flipped=False)


def build_H(n: int, bound: int = DESK_BOUND) -> nx.MultiDiGraph:
    return _aux_graph(n, bound, only_flipped=True)


def _aux_graph(n: int, bound: int, only_flipped: bool) -> nx.MultiDiGraph:
    """Nodes are plane keys; one edge per source tree T, keyed by T."""
    _check_bound(n, bound)
    G = nx.MultiDiGraph()
    trees = dyck_words(n)
    G.add_nodes_from({plane_key(T) for T in trees})
    for T in trees:
        label = tau_classify(T)
        if label is TauClass.T1_PRE:
            tag, image, keep = EdgeLabel.TAU1, tau1(T), is_flip_tree_1
        elif label is TauClass.T2_PRE:
            tag, image, keep = EdgeLabel.TAU2, tau2(T), is_flip_tree_2
        else:
            continue
        if only_flipped and not keep(T):
            continue
        G.add_edge(plane_key(T), plane_key(image), key=T, label=tag)
    return G


def edge_counts(G: nx.MultiDiGraph) -> dict[EdgeLabel, int]:
    out = {lab: 0 for lab in EdgeLabel}
    for _, _, lab in G.edges(data="label"):
        out[lab] += 1
    return out


def is_spanning_tree(H: nx.MultiDiGraph, G: nx.MultiDiGraph) -> bool:
    if set(H.nodes) != set(G.nodes):
        raise InvalidArgument("H and G must have the same node set")
    for u, v, k in H.edges(keys=True):
        if not G.has_edge(u, v, key=k):
            return False
    if H.number_of_edges() != H.number_of_nodes() - 1:
        return False
    return nx.is_connected(nx.Graph(H.to_undirected())) if H.number_of_nodes() else False


def _dot_name(key: Bits) -> str:
    return '"' + "".join(map(str, key)) + '"'


def to_dot(G: nx.MultiDiGraph, H: Optional[nx.MultiDiGraph] = None) -> str:
    """DOT text: tau1 edges solid, tau2 dashed, edges of H drawn bold."""
    lines = ["digraph G {"]
    for v in sorted(G.nodes):
        lines.append(f"  {_dot_name(v)};")
    for u, v, k, lab in sorted(G.edges(keys=True, data="label"), key=lambda e: e[2]):
        attrs = ["style=solid" if lab is EdgeLabel.TAU1 else "style=dashed"]
        if H is not None and H.has_edge(u, v, key=k):
            attrs.append("penwidth=3")
        lines.append(f"  {_dot_name(u)} -> {_dot_name(v)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def h_inv_plane_key(x: Sequence[int]) -> Bits:
    """Plane key of the tree h^{-1}(x) for a Dyck word x."""
    return plane_key(h_inv(x))
