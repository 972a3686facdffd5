"""Recursive neighbor oracle for the path families in Q_{2n}(k, k+1).

``paths_step`` follows the recursion literally on tuples and costs O(n^2) per
call; it is kept as the ground truth for ``paths_step_fast``, which walks the
same recursion iteratively on a :class:`LazyView` in O(n) and flips a single
base bit at the end.

Calling with ``flip=False`` gives the paths P_{2n}(k,k+1); ``flip=True``
gives the flipped family, in which every flippable pair of paths is
replaced by its flipped pair.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .bitseq import Bits, LatticeClass, as_bits, classify, in_class, rev_pi, weight
from .errors import DomainError, InvalidArgument
from .lazyview import LazyView

D_EQ0 = LatticeClass.D_EQ0
D_MINUS = LatticeClass.D_MINUS
D_GT0 = LatticeClass.D_GT0


class Direction(enum.Enum):
    PREV = -1
    NEXT = 1

    def __neg__(self) -> "Direction":
        return Direction.NEXT if self is Direction.PREV else Direction.PREV


PREV = Direction.PREV
NEXT = Direction.NEXT


@dataclass(frozen=True)
class PathQuery:
    n: int
    k: int
    x: Bits
    dir: Direction
    flip: bool = False


def _neighbor_table(*paths: Sequence[Bits]) -> dict[tuple[Bits, Direction], Bits]:
    table = {}
    for path in paths:
        for u, v in zip(path, path[1:]):
            table[u, NEXT] = v
            table[v, PREV] = u
    return table


BASE_PATH = ((1, 0), (1, 1), (0, 1))
FLIPPED_R = ((1, 1, 0, 0), (1, 1, 1, 0), (0, 1, 1, 0))
FLIPPED_R2 = (
    (1, 0, 1, 0), (1, 0, 1, 1), (0, 0, 1, 1), (0, 1, 1, 1),
    (0, 1, 0, 1), (1, 1, 0, 1), (1, 0, 0, 1),
)
_BASE = _neighbor_table(BASE_PATH)
_BASE_FLIPPED = _neighbor_table(FLIPPED_R, FLIPPED_R2)

# bit index to flip, keyed by (logical vertex, direction)
_BASE_FLIP_INDEX = {
    key: next(i for i in range(len(v)) if v[i] != key[0][i])
    for key, v in _BASE.items()
}
_BASE_FLIPPED_FLIP_INDEX = {
    key: next(i for i in range(len(v)) if v[i] != key[0][i])
    for key, v in _BASE_FLIPPED.items()
}


def _check_query(n: int, k: int, x: Bits, direction: Direction) -> None:
    if not isinstance(direction, Direction):
        raise InvalidArgument(f"direction must be PREV or NEXT, got {direction!r}")
    if n < 1 or not n <= k <= 2 * n - 1:
        raise InvalidArgument(f"need 1 <= n <= k <= 2n-1, got n={n}, k={k}")
    if len(x) != 2 * n:
        raise InvalidArgument(f"vertex must have length {2 * n}, got {len(x)}")
    if weight(x) not in (k, k + 1):
        raise InvalidArgument(f"vertex weight must be {k} or {k + 1}")


def _undefined(direction: Direction, cls: LatticeClass, w: int, k: int) -> bool:
    if w != k:
        return False
    return (direction is PREV and cls is D_EQ0) or (direction is NEXT and cls is D_MINUS)


def paths_step(n: int, k: int, x: Sequence[int], direction: Direction, flip: bool = False) -> Bits:
    """Previous/next neighbor of ``x`` on its path (reference, O(n^2))."""
    x = as_bits(x)
    _check_query(n, k, x, direction)
    if _undefined(direction, classify(x), weight(x), k):
        end = "first" if direction is PREV else "last"
        raise DomainError(f"{''.join(map(str, x))} is a {end} vertex; no {direction.name} neighbor")
    return _paths_ref(n, k, x, direction, bool(flip))


def _paths_ref(n: int, k: int, x: Bits, d: Direction, flip: bool) -> Bits:
    # Reached only from top-level queries with k > n whose vertex lies on a
    # trivial path: a layer pair without edges, or the end of a lower path.
    if k > 2 * n - 1:
        raise DomainError(f"{x} lies on no path of Q_{2 * n}({k},{k + 1})")
    if k == n and _undefined(d, classify(x), weight(x), k):
        raise DomainError(f"{x} is an end vertex; no {d.name} neighbor")
    if n == 1:
        try:
            return _BASE[x, d]
        except KeyError:
            raise DomainError(f"undefined base-case query {x} {d.name}") from None
    if n == 2 and k == 2 and flip:
        try:
            return _BASE_FLIPPED[x, d]
        except KeyError:
            raise DomainError(f"undefined base-case query {x} {d.name}") from None
    head, tail = x[:-2], x[-2:]
    if k >= n + 1:
        return _paths_ref(n - 1, k - tail[0] - tail[1], head, d, flip) + tail
    if tail == (1, 0):
        return _paths_ref(n - 1, n - 1, head, d, flip) + tail
    if tail == (0, 0):
        if in_class(head, D_GT0, n):
            return head + (0, 1)
        return _paths_ref(n - 1, n, head, d, flip) + tail
    if tail == (0, 1):
        if in_class(head, D_EQ0, n - 1):
            return head + (1, 1)
        if d is NEXT and in_class(head, D_MINUS, n - 1):
            return head + (1, 1)
        if d is PREV and in_class(head, D_GT0, n):
            return head + (0, 0)
        return _paths_ref(n - 1, n - 1, head, d, False) + tail
    # tail == (1, 1)
    if d is NEXT and in_class(head, D_EQ0, n - 1):
        return head + (0, 1)
    if d is PREV and in_class(head, D_MINUS, n - 1):
        return head + (0, 1)
    return rev_pi(_paths_ref(n - 1, n - 1, rev_pi(head), -d, flip)) + tail


def flip_position_fast(n: int, k: int, view: LazyView, d: Direction, flip: bool) -> int:
    """Base index of the bit that the recursion flips.

    Consumes ``view``.  Preconditions are the caller's job.  This is the hot
    loop of the cycle, so the view's state lives in locals here and the view
    methods are inlined; they are written back at the end.
    """
    base = view.base
    counts = view.counts
    pair_height = view.pair_height
    fp = view.first_pos
    lp = view.last_pos
    lo = view.lo
    hi = view.hi
    c = 1 if view.rev_parity else 0
    c1 = view.c1
    length = 2 * (hi - lo) + 2
    shift = view.shift
    nxt = d is NEXT
    levels = 0
    get = counts.get
    try:
        while True:
            levels += 1
            if n == 1:
                key = ((base[fp] ^ c, base[lp] ^ c), NEXT if nxt else PREV)
                try:
                    return (fp, lp)[_BASE_FLIP_INDEX[key]]
                except KeyError:
                    raise DomainError(f"undefined base-case query {key[0]} {key[1].name}") from None
            if n == 2 and k == 2 and flip:
                j = lo
                pos = (fp, 2 * j - 1, 2 * j, lp)
                key = (tuple(base[p] ^ c for p in pos), NEXT if nxt else PREV)
                try:
                    return pos[_BASE_FLIPPED_FLIP_INDEX[key]]
                except KeyError:
                    raise DomainError(f"undefined base-case query {key[0]} {key[1].name}") from None
            # drop the last logical pair (inlined LazyView.drop_last_two)
            if c:
                j = lo
                lo += 1
            else:
                hi -= 1
                j = hi
            p1 = 2 * j
            p2 = lp
            a = base[p1 - 1]
            b = base[p1]
            counts[4 * pair_height[j] + 2 * a + b] -= 1
            b1 = b ^ c
            b2 = base[p2] ^ c
            c1 -= b1 + b2
            length -= 2
            lp = p1 - 1
            if k >= n + 1:
                k -= b1 + b2
                n -= 1
                if k > 2 * n - 1:
                    raise DomainError(f"query lies on no path of Q_{2 * n}({k},{k + 1})")
                if k == n and c1 == n:
                    first = base[fp] ^ c
                    if nxt:
                        end = _touches(get, c, shift, first) == 1
                    else:
                        end = first and not get(4 * -shift + (3 if c else 0), 0)
                    if end:
                        raise DomainError("query reaches an end vertex of a lower path")
                continue
            if b1:
                if not b2:  # (1, 0)
                    n -= 1
                    k = n
                    continue
                # (1, 1): head has length 2n-2, weight n-1 means height 0
                if c1 == n - 1:
                    first = base[fp] ^ c
                    if nxt:
                        # D_EQ0: nonnegative
                        if first and not get(4 * -shift + (3 if c else 0), 0):
                            return p1
                    elif _touches(get, c, shift, first) == 1:
                        return p1
                # rev_pi (inlined LazyView.apply_revpi)
                shift -= 2 * c1 - length
                fp, lp = lp, fp
                c1 = length - c1
                c ^= 1
                nxt = not nxt
                n -= 1
                k = n
                continue
            if not b2:  # (0, 0)
                # D_GT0 with weight n: nonnegative and never back to 0
                if c1 == n and base[fp] ^ c and not get(4 * -shift + (3 if c else 0), 0) \
                        and not get(4 * (1 - shift) + (2 if c else 1), 0):
                    return p2
                n -= 1
                k = n + 1
                continue
            # (0, 1)
            if c1 == n - 1:
                first = base[fp] ^ c
                if first and not get(4 * -shift + (3 if c else 0), 0):
                    return p1
                if nxt and _touches(get, c, shift, first) == 1:
                    return p1
            elif c1 == n and not nxt and base[fp] ^ c and not get(4 * -shift + (3 if c else 0), 0) \
                    and not get(4 * (1 - shift) + (2 if c else 1), 0):
                return p2
            flip = False
            n -= 1
            k = n
    finally:
        view.first_pos = fp
        view.last_pos = lp
        view.lo = lo
        view.hi = hi
        view.rev_parity = view.pi_parity = bool(c)
        view.c1 = c1
        view.c0 = length - c1
        view.shift = shift
        view.ops += 4 * levels


def _touches(get, c: int, shift: int, first: int) -> int:
    """How often a path of final height 0 touches height -1 (D_MINUS iff 1)."""
    x = 3 if c else 0
    return (
        (0 if first else 1)
        + get(4 * (-1 - shift) + (2 ^ x), 0)
        + get(4 * (-1 - shift) + (1 ^ x), 0)
        + get(4 * -shift + x, 0)
        + get(4 * (-2 - shift) + (3 ^ x), 0)
    )


def paths_step_fast(
    n: int, k: int, x: Union[Sequence[int], LazyView], direction: Direction, flip: bool = False
) -> Bits:
    """Same contract as :func:`paths_step`, O(n) per call via a lazy view."""
    if isinstance(x, LazyView):
        fresh = not x.rev_parity and len(x) == len(x.base)
        bits = x.base if fresh else x.materialize()
        view = x if fresh else LazyView(bits)
    else:
        bits = as_bits(x)
        view = None
    _check_query(n, k, bits, direction)
    if view is None:
        view = LazyView(bits)
    w = view.c1
    if w == k:
        cls = view.classify()
        if _undefined(direction, cls, w, k):
            end = "first" if direction is PREV else "last"
            raise DomainError(f"{''.join(map(str, bits))} is a {end} vertex; no {direction.name} neighbor")
    pos = flip_position_fast(n, k, view, direction, bool(flip))
    out = list(bits)
    out[pos] ^= 1
    return tuple(out)


def path_from_first(n: int, x0: Sequence[int], flip: bool = False) -> list[Bits]:
    """The whole oriented path starting at the first vertex ``x0``."""
    x0 = as_bits(x0)
    if len(x0) != 2 * n or not in_class(x0, D_EQ0, n):
        raise InvalidArgument("start vertex must lie in D_{2n}^{=0}(n)")
    path = [x0]
    y = x0
    while True:
        y = paths_step_fast(n, n, y, NEXT, flip)
        path.append(y)
        if weight(y) == n and classify(y) is D_MINUS:
            return path
        if len(path) > 4 * n + 2:
            raise AssertionError(f"path from {x0} did not terminate")


def path_length(x0: Sequence[int]) -> int:
    """Edge count of the unflipped path starting at the Dyck word ``x0``:
    2|left| + 2 for the split x0 = 1 left 0 right."""
    return 2 * len(dyck_split(x0)[0]) + 2


def dyck_split(x: Sequence[int]) -> tuple[Bits, Bits]:
    """Split a nonempty Dyck word as 1 left 0 right with left a Dyck word."""
    h = 0
    for i, b in enumerate(x):
        h += 1 if b else -1
        if h == 0:
            return tuple(x[1:i]), tuple(x[i + 1:])
    raise InvalidArgument("not a Dyck word")
