"""Compiled batch stepper for long runs of the Hamilton cycle.

Each step of :class:`~middle_levels.hamcycle.CycleIterator` is repeated here
on a uint8 vertex array inside a numba kernel.  Instead of vertices, the
kernel writes the index of the bit that changes.  It stops before every
first vertex that needs a flip decision.  That decision is made in Python
by the tree code, once per path, and fed into the next kernel call.  So the
kernel handles only the cheap steps, and the flip selection logic lives in
a single place.

Operation counts follow the pure-Python stepper exactly: a fresh view costs
its length, each class test one, and each descent level four.
"""
from __future__ import annotations

from typing import Iterator, Optional, Sequence

import numpy as np
from numba import njit

from .flipsel import FlipPredicate, is_flip_vertex
from .hamcycle import _check_vertex, default_start, initial_flip
from .paths import _BASE_FLIPPED_FLIP_INDEX, _BASE_FLIP_INDEX, NEXT

# slots of the persistent stats array
S_STEPS, S_OPS, S_CHECKS, S_MIN_GAP, S_LAST_CHECK = range(5)
NO_GAP = np.iinfo(np.int64).max

DONE, NEED_DECISION, UNDEFINED = 0, 1, 2


def _base_tables() -> tuple[np.ndarray, np.ndarray]:
    # index = 2 * (bits read as a binary number) + (1 if NEXT else 0)
    t1 = np.full(8, -1, np.int64)
    for (bits, d), i in _BASE_FLIP_INDEX.items():
        t1[2 * (2 * bits[0] + bits[1]) + (d is NEXT)] = i
    t2 = np.full(32, -1, np.int64)
    for (bits, d), i in _BASE_FLIPPED_FLIP_INDEX.items():
        v = 8 * bits[0] + 4 * bits[1] + 2 * bits[2] + bits[3]
        t2[2 * v + (d is NEXT)] = i
    return t1, t2


BASE1, BASE2 = _base_tables()


@njit(cache=True)
def _count(counts, L, t, h):
    # physical heights lie in [-L, L]; anything outside holds no pair
    if h < -L or h > L:
        return 0
    return counts[4 * (h + L) + t]


@njit(cache=True)
def _scan(y, L, counts, ph):
    """Build the counters for y[0:L]; return the number of ones."""
    counts[:] = 0
    h = 1 if y[0] else -1
    for j in range(1, L // 2):
        a = y[2 * j - 1]
        b = y[2 * j]
        s = a + b - 1
        mean = h + s
        ph[j] = mean
        counts[4 * (mean + L) + 2 * a + b] += 1
        h += 2 * s
    ones = 0
    for i in range(L):
        ones += y[i]
    return ones


@njit(cache=True)
def _touches(counts, L, c, shift, first):
    x = 3 if c else 0
    t = 0 if first else 1
    t += _count(counts, L, 2 ^ x, -1 - shift)
    t += _count(counts, L, 1 ^ x, -1 - shift)
    t += _count(counts, L, x, -shift)
    t += _count(counts, L, 3 ^ x, -2 - shift)
    return t


@njit(cache=True)
def _nonneg(counts, L, c, shift, first):
    return first == 1 and _count(counts, L, 3 if c else 0, -shift) == 0


@njit(cache=True)
def _descend(n, k, y, L, counts, ph, c1, nxt, flip, base1, base2, stats):
    """Same walk as paths.flip_position_fast on a fresh view of y[0:L]."""
    fp = 0
    lp = L - 1
    lo = 1
    hi = L // 2
    c = 0
    length = L
    shift = 0
    levels = 0
    while True:
        levels += 1
        if n == 1:
            stats[S_OPS] += 4 * levels
            i = base1[2 * (2 * (y[fp] ^ c) + (y[lp] ^ c)) + nxt]
            if i < 0:
                return -1
            return fp if i == 0 else lp
        if n == 2 and k == 2 and flip:
            stats[S_OPS] += 4 * levels
            j = lo
            v = 8 * (y[fp] ^ c) + 4 * (y[2 * j - 1] ^ c) + 2 * (y[2 * j] ^ c) + (y[lp] ^ c)
            i = base2[2 * v + nxt]
            if i < 0:
                return -1
            if i == 0:
                return fp
            if i == 3:
                return lp
            return 2 * j - 2 + i
        if c:
            j = lo
            lo += 1
        else:
            hi -= 1
            j = hi
        p1 = 2 * j
        p2 = lp
        a = y[p1 - 1]
        b = y[p1]
        counts[4 * (ph[j] + L) + 2 * a + b] -= 1
        b1 = b ^ c
        b2 = y[p2] ^ c
        c1 -= b1 + b2
        length -= 2
        lp = p1 - 1
        if k >= n + 1:
            k -= b1 + b2
            n -= 1
            if k > 2 * n - 1:
                stats[S_OPS] += 4 * levels
                return -1
            if k == n and c1 == n:
                first = y[fp] ^ c
                if nxt:
                    end = _touches(counts, L, c, shift, first) == 1
                else:
                    end = _nonneg(counts, L, c, shift, first)
                if end:
                    stats[S_OPS] += 4 * levels
                    return -1
            continue
        if b1:
            if not b2:
                n -= 1
                k = n
                continue
            if c1 == n - 1:
                first = y[fp] ^ c
                if nxt:
                    if _nonneg(counts, L, c, shift, first):
                        stats[S_OPS] += 4 * levels
                        return p1
                elif _touches(counts, L, c, shift, first) == 1:
                    stats[S_OPS] += 4 * levels
                    return p1
            shift -= 2 * c1 - length
            fp, lp = lp, fp
            c1 = length - c1
            c ^= 1
            nxt ^= 1
            n -= 1
            k = n
            continue
        if not b2:
            if c1 == n and _nonneg(counts, L, c, shift, y[fp] ^ c) \
                    and _count(counts, L, 2 if c else 1, 1 - shift) == 0:
                stats[S_OPS] += 4 * levels
                return p2
            n -= 1
            k = n + 1
            continue
        if c1 == n - 1:
            first = y[fp] ^ c
            if _nonneg(counts, L, c, shift, first):
                stats[S_OPS] += 4 * levels
                return p1
            if nxt and _touches(counts, L, c, shift, first) == 1:
                stats[S_OPS] += 4 * levels
                return p1
        elif c1 == n and not nxt and _nonneg(counts, L, c, shift, y[fp] ^ c) \
                and _count(counts, L, 2 if c else 1, 1 - shift) == 0:
            stats[S_OPS] += 4 * levels
            return p2
        flip = False
        n -= 1
        k = n


@njit(cache=True)
def _advance(n, x, flip, decision, limit, out, y, counts, ph, stats, base1, base2):
    """Run up to ``limit`` steps from x (updated in place).

    Returns (steps taken, flip state, status).  With status NEED_DECISION
    the current vertex is a first vertex whose flip bit is not known yet;
    call again with ``decision`` set to 0 or 1.
    """
    L = 2 * n
    steps = 0
    while steps < limit:
        if x[L] == 0:
            for i in range(L):
                y[i] = x[i]
            c1 = _scan(y, L, counts, ph)
            stats[S_OPS] += L
            eq0 = False
            minus = False
            if c1 == n:
                stats[S_OPS] += 1
                first = y[0]
                eq0 = _nonneg(counts, L, 0, 0, first)
                minus = not eq0 and _touches(counts, L, 0, 0, first) == 1
            if eq0:
                if decision < 0:
                    stats[S_OPS] -= L + 1  # redone on the next call
                    return steps, flip, NEED_DECISION
                flip = decision == 1
                decision = -1
                if stats[S_LAST_CHECK] >= 0:
                    gap = stats[S_STEPS] - stats[S_LAST_CHECK] - 1
                    if gap < stats[S_MIN_GAP]:
                        stats[S_MIN_GAP] = gap
                stats[S_LAST_CHECK] = stats[S_STEPS]
                stats[S_CHECKS] += 1
                pos = _descend(n, n, y, L, counts, ph, c1, 1, flip, base1, base2, stats)
            elif minus:
                pos = L
                flip = False
            else:
                pos = _descend(n, n, y, L, counts, ph, c1, 1, flip, base1, base2, stats)
        else:
            for i in range(L):
                y[i] = 1 - x[L - 1 - i]
            c1 = _scan(y, L, counts, ph)
            stats[S_OPS] += L
            done = False
            if c1 == n:
                stats[S_OPS] += 1
                if _nonneg(counts, L, 0, 0, y[0]):
                    pos = L
                    done = True
            if not done:
                p = _descend(n, n, y, L, counts, ph, c1, 0, False, base1, base2, stats)
                pos = -1 if p < 0 else L - 1 - p
            flip = False
        if pos < 0:
            return steps, flip, UNDEFINED
        x[pos] ^= 1
        out[steps] = pos
        steps += 1
        stats[S_STEPS] += 1
    return steps, flip, DONE


class FastCycle:
    """Cycle stepper that emits flip positions in numpy chunks.

    Same start, flip initialization and successor rule as
    :class:`~middle_levels.hamcycle.CycleIterator`; state is (n, x, flip).
    """

    def __init__(
        self,
        n: int,
        start: Optional[Sequence[int]] = None,
        is_flip: FlipPredicate = is_flip_vertex,
    ):
        x = _check_vertex(n, default_start(n) if start is None else start)
        self.n = n
        self.is_flip = is_flip
        self.flip = initial_flip(n, x, is_flip)
        self.x = np.array(x, dtype=np.uint8)
        L = 2 * n
        self._y = np.zeros(L, np.uint8)
        self._counts = np.zeros(4 * (2 * L + 1), np.int64)
        self._ph = np.zeros(n + 1, np.int64)
        self.stats = np.zeros(5, np.int64)
        self.stats[S_MIN_GAP] = NO_GAP
        self.stats[S_LAST_CHECK] = -1

    @property
    def current(self) -> tuple[int, ...]:
        return tuple(int(b) for b in self.x)

    @property
    def steps(self) -> int:
        return int(self.stats[S_STEPS])

    @property
    def ops(self) -> int:
        return int(self.stats[S_OPS])

    @property
    def flip_checks(self) -> int:
        return int(self.stats[S_CHECKS])

    @property
    def min_gap(self) -> Optional[int]:
        g = int(self.stats[S_MIN_GAP])
        return None if g == NO_GAP else g

    def advance(self, count: int, out: Optional[np.ndarray] = None) -> np.ndarray:
        """Take ``count`` steps; return the 0-based index flipped at each."""
        if out is None:
            out = np.empty(count, np.int8)
        elif len(out) < count:
            raise ValueError("output buffer too small")
        done = 0
        decision = -1
        while done < count:
            k, flip, status = _advance(
                self.n, self.x, self.flip, decision, count - done, out[done:],
                self._y, self._counts, self._ph, self.stats, BASE1, BASE2,
            )
            self.flip = bool(flip)
            done += k
            decision = -1
            if status == NEED_DECISION:
                head = tuple(int(b) for b in self.x[:-1])
                decision = 1 if self.is_flip(self.n, head) else 0
            elif status == UNDEFINED:
                raise RuntimeError(f"stepper reached an undefined query at {self.current}")
        return out[:count]

    def chunks(self, count: int, size: int = 1 << 16) -> Iterator[np.ndarray]:
        """``count`` steps in chunks of at most ``size``.

        The chunks are views of one reused buffer; copy them to keep them.
        """
        buf = np.empty(min(size, max(count, 1)), np.int8)
        left = count
        while left > 0:
            k = min(left, len(buf))
            yield self.advance(k, buf)
            left -= k
