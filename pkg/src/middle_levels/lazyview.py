"""Constant-time view of a bitstring under "drop the last two bits" and rev_pi.

The base string is never modified.  Its interior bits split into fixed pairs
(base[2j-1], base[2j]) for j = 1..N-1; the first and last bit stand alone.
Both operations keep this pairing intact:

* dropping the last two logical bits removes the last logical pair's second
  bit and the old last bit, and the pair's first bit becomes the new last bit;
* rev_pi reverses the order of the pairs and complements every bit, but keeps
  the order inside each pair.  First and last bit swap places (complemented).

So the logical string is always (first, pairs[a:b] forward or reversed, last)
with every bit complemented iff an odd number of rev_pi's is pending, and
logical index -> base index is O(1) arithmetic.

Per-height pair counters make the lattice-class tests O(1).  The height of a
pair is the mean of the path heights before and after it, so a pair 10 or 01
sits at its start height and a pair 00 (11) one below (above) it.  Counters
are stored against the pair's height in the base string; logical heights are
base heights plus ``shift``, because dropping from the end leaves prefixes
alone and rev_pi maps every height h to h - H, H the final height.
"""
from __future__ import annotations

from typing import Sequence

from .bitseq import Bits, LatticeClass
from .errors import InvalidArgument, UnderflowError

# pair type = 2*first + second
T00, T01, T10, T11 = 0, 1, 2, 3


class LazyView:
    __slots__ = (
        "base", "first_pos", "last_pos", "lo", "hi", "rev_parity", "pi_parity",
        "c0", "c1", "shift", "counts", "pair_height", "ops",
    )

    def __init__(self, x: Sequence[int]):
        L = len(x)
        if L % 2 or L < 2:
            raise InvalidArgument(f"view needs even length >= 2, got {L}")
        self.base: Bits = tuple(x)
        self.first_pos = 0
        self.last_pos = L - 1
        # logical pairs are base pairs lo..hi-1
        self.lo = 1
        self.hi = L // 2
        self.rev_parity = False
        self.pi_parity = False
        ones = sum(x)
        self.c1 = ones
        self.c0 = L - ones
        self.shift = 0
        # counts[4 * height + pair_type]; missing keys are zero
        counts: dict[int, int] = {}
        get = counts.get
        pair_height = [0]
        h = 1 if x[0] else -1
        it = iter(x[1:-1])
        for a, b in zip(it, it):
            s = a + b - 1
            mean = h + s
            pair_height.append(mean)
            key = 4 * mean + 2 * a + b
            counts[key] = get(key, 0) + 1
            h += 2 * s
        self.counts = counts
        self.pair_height = pair_height
        self.ops = L

    def copy(self) -> "LazyView":
        other = LazyView.__new__(LazyView)
        for name in LazyView.__slots__:
            setattr(other, name, getattr(self, name))
        other.counts = dict(self.counts)
        return other

    def __len__(self) -> int:
        return 2 * (self.hi - self.lo) + 2

    @property
    def complemented(self) -> int:
        return 1 if self.rev_parity else 0

    def phys(self, i: int) -> int:
        """Base index holding logical bit i (complemented iff rev_parity)."""
        m = self.hi - self.lo
        if i == 0:
            return self.first_pos
        if i == 2 * m + 1:
            return self.last_pos
        q, e = divmod(i - 1, 2)
        j = self.hi - 1 - q if self.rev_parity else self.lo + q
        return 2 * j - 1 + e

    def bit(self, i: int) -> int:
        if not 0 <= i < len(self):
            raise InvalidArgument(f"index {i} out of range for length {len(self)}")
        self.ops += 1
        return self.base[self.phys(i)] ^ self.complemented

    def drop_last_two(self) -> None:
        if self.hi - self.lo < 1:
            raise UnderflowError("cannot drop below length 2")
        c = self.complemented
        base = self.base
        if self.rev_parity:
            j = self.lo
            self.lo += 1
        else:
            j = self.hi - 1
            self.hi -= 1
        a = base[2 * j - 1]
        b = base[2 * j]
        self.counts[4 * self.pair_height[j] + 2 * a + b] -= 1
        gone = (b ^ c) + (base[self.last_pos] ^ c)
        self.c1 -= gone
        self.c0 -= 2 - gone
        self.last_pos = 2 * j - 1
        self.ops += 1

    def apply_revpi(self) -> None:
        self.shift -= self.c1 - self.c0
        self.first_pos, self.last_pos = self.last_pos, self.first_pos
        self.c0, self.c1 = self.c1, self.c0
        self.rev_parity = not self.rev_parity
        self.pi_parity = not self.pi_parity
        self.ops += 1

    def pair_count(self, pair: int, height: int) -> int:
        """Number of logical interior pairs of the given type at a height."""
        if self.rev_parity:
            pair ^= 3
        return self.counts.get(4 * (height - self.shift) + pair, 0)

    def classify(self) -> LatticeClass:
        self.ops += 1
        c = self.complemented
        first = self.base[self.first_pos] ^ c
        if first:
            if self.pair_count(T00, 0):
                return LatticeClass.NONE if self._minus_touches(first) != 1 else LatticeClass.D_MINUS
            if self.c1 == self.c0 or self.pair_count(T01, 1):
                return LatticeClass.D_EQ0
            return LatticeClass.D_GT0
        if self._minus_touches(first) == 1:
            return LatticeClass.D_MINUS
        return LatticeClass.NONE

    def _minus_touches(self, first: int) -> int:
        return (
            (0 if first else 1)
            + self.pair_count(T10, -1)
            + self.pair_count(T01, -1)
            + self.pair_count(T00, 0)
            + self.pair_count(T11, -2)
        )

    def in_class(self, cls: LatticeClass, k: int) -> bool:
        return self.c1 == k and self.classify() is cls

    def materialize(self) -> Bits:
        c = self.complemented
        base = self.base
        return tuple(base[self.phys(i)] ^ c for i in range(len(self)))

    def __repr__(self) -> str:
        from .bitseq import format_bits

        return f"LazyView({format_bits(self.materialize())!r})"


def view_new(x: Sequence[int]) -> LazyView:
    return LazyView(x)


def view_drop_last_two(v: LazyView) -> LazyView:
    w = v.copy()
    w.drop_last_two()
    return w


def view_apply_revpi(v: LazyView) -> LazyView:
    w = v.copy()
    w.apply_revpi()
    return w


def view_bit(v: LazyView, i: int) -> int:
    return v.bit(i)


def view_classify(v: LazyView) -> LatticeClass:
    return v.classify()
