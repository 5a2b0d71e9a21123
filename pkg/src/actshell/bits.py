"""Subsets of a ground set ``{1..n}`` as Python int bitmasks.

Element ``e`` occupies bit ``e - 1``. On the doubled ground set used by the
external activity complex, the barred copy of ``e`` occupies bit ``n + e - 1``.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator


def max_n() -> int:
    """Cap on ground size for exhaustive enumeration (env ``MATROID_MAX_N``)."""
    return int(os.environ.get("MATROID_MAX_N", "12"))


def bit(e: int) -> int:
    return 1 << (e - 1)


def mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements(m: int) -> list[int]:
    """Members of ``m`` in increasing id order."""
    out = []
    e = 1
    while m:
        if m & 1:
            out.append(e)
        m >>= 1
        e += 1
    return out


def iter_bits(m: int) -> Iterator[int]:
    """Yield single-bit masks of ``m``, lowest first."""
    while m:
        low = m & -m
        yield low
        m ^= low


def popcount(m: int) -> int:
    return m.bit_count()


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` including 0 and ``m`` itself."""
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def barred(m: int, n: int) -> int:
    """The barred copy of an unsigned set on the doubled ground set."""
    return m << n


def split_signed(m: int, n: int) -> tuple[int, int]:
    """Return (plain part, barred part) of a signed mask, both as unsigned masks."""
    full = (1 << n) - 1
    return m & full, (m >> n) & full


def signed_labels(m: int, n: int) -> list[int]:
    """Plain elements ascending, then barred elements as negative ids ascending by |id|."""
    plain, bar = split_signed(m, n)
    return elements(plain) + [-e for e in elements(bar)]


def signed_mask(labels: Iterable[int], n: int) -> int:
    """Inverse of :func:`signed_labels`."""
    m = 0
    for v in labels:
        if v > 0:
            m |= 1 << (v - 1)
        elif v < 0:
            m |= 1 << (n - v - 1)
        else:
            raise ValueError("vertex label 0 is not allowed")
    return m
