"""Bitstrings, the involutions rev_inv and pi_perm, and lattice-path classes.

A bitstring is a plain tuple of 0/1 ints.  Index 0 is the leftmost bit.
Read as a lattice path, 1 is an upstep and 0 a downstep, starting at
height 0.
"""
from __future__ import annotations

import enum
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgument

Bits = tuple[int, ...]


class LatticeClass(enum.Enum):
    D_EQ0 = "D=0"  # never below 0, touches 0 after the start
    D_MINUS = "D-"  # exactly one point at height -1
    D_GT0 = "D>0"  # never below 0, never back at 0
    NONE = "none"


def parse_bits(text: str) -> Bits:
    text = text.strip()
    if any(c not in "01" for c in text):
        raise InvalidArgument(f"not a bitstring: {text!r}")
    return tuple(1 if c == "1" else 0 for c in text)


def format_bits(x: Iterable[int]) -> str:
    return "".join("1" if b else "0" for b in x)


def as_bits(x: Sequence[int] | str) -> Bits:
    """Coerce a string or int sequence into a validated bitstring."""
    if isinstance(x, str):
        return parse_bits(x)
    t = tuple(x)
    for b in t:
        if b != 0 and b != 1:
            raise InvalidArgument(f"bits must be 0 or 1, got {b!r}")
    return tuple(int(b) for b in t)


def weight(x: Sequence[int]) -> int:
    return sum(x)


def rev_inv(x: Sequence[int]) -> Bits:
    """Reverse the bit order and complement every bit."""
    return tuple(1 - b for b in reversed(x))


def pi_perm(x: Sequence[int]) -> Bits:
    """Swap the interior pairs (x[1],x[2]), (x[3],x[4]), ...; keep both ends."""
    m = len(x)
    if m % 2:
        raise InvalidArgument(f"pi_perm needs even length, got {m}")
    out = list(x)
    for i in range(1, m - 1, 2):
        out[i], out[i + 1] = x[i + 1], x[i]
    return tuple(out)


def rev_pi(x: Sequence[int]) -> Bits:
    return rev_inv(pi_perm(x))


def heights(x: Iterable[int]) -> Iterator[int]:
    """Heights of the lattice path after each step (the start is excluded)."""
    h = 0
    for b in x:
        h += 1 if b else -1
        yield h


def classify(x: Sequence[int]) -> LatticeClass:
    if not x:
        return LatticeClass.D_EQ0
    lowest = 0
    zeros = 0
    minus_ones = 0
    for h in heights(x):
        if h < lowest:
            lowest = h
        if h == 0:
            zeros += 1
        elif h == -1:
            minus_ones += 1
    if lowest >= 0:
        return LatticeClass.D_EQ0 if zeros else LatticeClass.D_GT0
    if minus_ones == 1:
        return LatticeClass.D_MINUS
    return LatticeClass.NONE


def in_class(x: Sequence[int], cls: LatticeClass, k: int) -> bool:
    """Membership in D_{len(x)}^{cls}(k), i.e. class and weight together."""
    return sum(x) == k and classify(x) is cls


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def layer(length: int, k: int) -> Iterator[Bits]:
    """All bitstrings of the given length and weight k (the set B_length(k))."""
    for ones in combinations(range(length), k):
        x = [0] * length
        for i in ones:
            x[i] = 1
        yield tuple(x)


def middle_vertices(length: int, k: int) -> Iterator[Bits]:
    """Vertices of Q_length(k, k+1): weight k first, then weight k+1."""
    yield from layer(length, k)
    yield from layer(length, k + 1)


def dyck_words(n: int) -> list[Bits]:
    """All of D_{2n}^{=0}(n) (equivalently all ordered rooted trees with n
    edges), in lexicographic order."""
    out: list[Bits] = []

    def grow(prefix: list[int], ups: int, h: int) -> None:
        if len(prefix) == 2 * n:
            out.append(tuple(prefix))
            return
        if h > 0:
            prefix.append(0)
            grow(prefix, ups, h - 1)
            prefix.pop()
        if ups < n:
            prefix.append(1)
            grow(prefix, ups + 1, h + 1)
            prefix.pop()

    grow([], 0, 0)
    return out


def middle_level_count(n: int) -> int:
    """N = 2 * C(2n+1, n), the number of vertices of Q_{2n+1}(n, n+1)."""
    return 2 * comb(2 * n + 1, n)
