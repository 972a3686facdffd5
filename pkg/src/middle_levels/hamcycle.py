"""Hamilton cycle in the middle levels graph Q_{2n+1}(n, n+1).

Vertices with last bit 0 follow the paths P_{2n}(n, n+1) forward (or their
flipped versions, per the flip state), vertices with last bit 1 follow
rev_inv(P_{2n}(n, n+1)) backward, and the last bit toggles at first and last
path vertices.  The flip state is decided once per path, at its first vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .bitseq import Bits, LatticeClass, as_bits, middle_level_count, rev_inv
from .errors import InvalidArgument
from .flipsel import FlipPredicate, is_flip_vertex
from .lazyview import LazyView
from .paths import NEXT, PREV, flip_position_fast, paths_step_fast

D_EQ0 = LatticeClass.D_EQ0
D_MINUS = LatticeClass.D_MINUS


def _check_vertex(n: int, x: Sequence[int]) -> Bits:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    x = as_bits(x)
    if len(x) != 2 * n + 1:
        raise InvalidArgument(f"vertex must have length {2 * n + 1}, got {len(x)}")
    if sum(x) not in (n, n + 1):
        raise InvalidArgument(f"vertex weight must be {n} or {n + 1}")
    return x


def default_start(n: int) -> Bits:
    """1^n 0^(n+1)."""
    return (1,) * n + (0,) * (n + 1)


@dataclass
class StepStats:
    """Instrumentation for a run of cycle steps."""

    steps: int = 0
    ops: int = 0
    flip_checks: int = 0
    min_gap: Optional[int] = None  # fewest steps between two flip checks
    _last_check: Optional[int] = field(default=None, repr=False)

    def record_check(self) -> None:
        if self._last_check is not None:
            gap = self.steps - self._last_check - 1
            if self.min_gap is None or gap < self.min_gap:
                self.min_gap = gap
        self._last_check = self.steps
        self.flip_checks += 1


def ham_cycle_flip(
    n: int,
    x: Sequence[int],
    flip: bool,
    is_flip: FlipPredicate = is_flip_vertex,
    stats: Optional[StepStats] = None,
) -> tuple[Bits, bool]:
    """One step along the cycle: (successor of x, updated flip state)."""
    x = _check_vertex(n, x)
    return _step(n, x, flip, is_flip, stats)


def _step(
    n: int, x: Bits, flip: bool, is_flip: FlipPredicate, stats: Optional[StepStats]
) -> tuple[Bits, bool]:
    head = x[:-1]
    if x[-1] == 0:
        view = LazyView(head)
        cls = view.classify() if view.c1 == n else None
        if cls is D_EQ0:
            if stats is not None:
                stats.record_check()
            flip = is_flip(n, head)
            pos = flip_position_fast(n, n, view, NEXT, flip)
        elif cls is D_MINUS:
            if stats is not None:
                stats.ops += view.ops
                stats.steps += 1
            return head + (1,), False
        else:
            pos = flip_position_fast(n, n, view, NEXT, flip)
        out = list(x)
        out[pos] ^= 1
    else:
        y = rev_inv(head)
        view = LazyView(y)
        if view.c1 == n and view.classify() is D_EQ0:
            # rev_inv fixes D_{2n}^{=0}(n) setwise, so this tests head as well
            if stats is not None:
                stats.ops += view.ops
                stats.steps += 1
            return head + (0,), False
        pos = flip_position_fast(n, n, view, PREV, False)
        out = list(x)
        out[2 * n - 1 - pos] ^= 1
        flip = False
    if stats is not None:
        stats.ops += view.ops
        stats.steps += 1
    return tuple(out), flip


def initial_flip(n: int, x: Sequence[int], is_flip: FlipPredicate = is_flip_vertex) -> bool:
    """Flip state in force at x: walk back to the first vertex of its path."""
    x = _check_vertex(n, x)
    if x[-1] == 1:
        return False
    y = x[:-1]
    view = LazyView(y)
    while not (view.c1 == n and view.classify() is D_EQ0):
        y = paths_step_fast(n, n, view, PREV, False)
        view = LazyView(y)
    return is_flip(n, y)


class CycleIterator:
    """Resumable stream of the vertices following ``start`` on the cycle.

    Holds only (n, current vertex, flip state).
    """

    def __init__(
        self,
        n: int,
        start: Optional[Sequence[int]] = None,
        is_flip: FlipPredicate = is_flip_vertex,
        stats: Optional[StepStats] = None,
    ):
        x = default_start(n) if start is None else start
        self.current = _check_vertex(n, x)
        self.n = n
        self.is_flip = is_flip
        self.stats = stats
        self.flip = initial_flip(n, self.current, is_flip)

    def __iter__(self) -> "CycleIterator":
        return self

    def __next__(self) -> Bits:
        self.current, self.flip = _step(self.n, self.current, self.flip, self.is_flip, self.stats)
        return self.current


def iter_new(n: int, x: Optional[Sequence[int]] = None, **kwargs) -> CycleIterator:
    return CycleIterator(n, x, **kwargs)


def iter_next(it: CycleIterator) -> Bits:
    return next(it)


def ham_cycle(n: int, x: Sequence[int], length: int, is_flip: FlipPredicate = is_flip_vertex) -> list[Bits]:
    """The ``length`` vertices following x on the Hamilton cycle."""
    if not isinstance(length, int) or length < 1:
        raise InvalidArgument(f"length must be >= 1, got {length!r}")
    it = CycleIterator(n, x, is_flip)
    return [next(it) for _ in range(length)]


def iter_cycle(n: int, x: Optional[Sequence[int]] = None, count: Optional[int] = None) -> Iterator[Bits]:
    """Generator form; ``count`` defaults to the full cycle length."""
    it = CycleIterator(n, x)
    total = middle_level_count(n) if count is None else count
    for _ in range(total):
        yield next(it)
