"""Basis activities, the Tutte polynomial, and Crapo's interval partition."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import bits, kernels
from .matroid import OrderedMatroid, _require_small, coloops, fundamental_circuit, fundamental_cocircuit


@dataclass(frozen=True)
class BasisActivity:
    basis: int
    ea: int
    ep: int
    ia: int
    ip: int

    def to_json(self) -> dict:
        e = bits.elements
        return {"basis": e(self.basis), "EP": e(self.ep), "EA": e(self.ea), "IP": e(self.ip), "IA": e(self.ia)}


def basis_activity(M: OrderedMatroid, B: int) -> BasisActivity:
    M.check_basis(B)
    ea = ia = 0
    for x in bits.iter_bits(M.ground & ~B):
        e = x.bit_length()
        if M.min(fundamental_circuit(M, B, e)) == e:
            ea |= x
    for x in bits.iter_bits(B):
        i = x.bit_length()
        if M.min(fundamental_cocircuit(M, B, i)) == i:
            ia |= x
    return BasisActivity(B, ea, M.ground & ~B & ~ea, ia, B & ~ia)


@lru_cache(maxsize=1024)
def activities(M: OrderedMatroid) -> tuple[BasisActivity, ...]:
    """Activities of every basis, aligned with ``M.bases``."""
    return tuple(basis_activity(M, B) for B in M.bases)


class TuttePolynomial(dict):
    """Sparse coefficient map ``(i, j) -> c`` for ``c * x**i * y**j``."""

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.items())

    def at_y1(self) -> list[int]:
        """Coefficients of T(x, 1), constant term first."""
        deg = max(i for i, _ in self)
        out = [0] * (deg + 1)
        for (i, _), c in self.items():
            out[i] += c
        return out

    def to_json(self) -> list[dict]:
        """Terms sorted by decreasing x-degree, then increasing y-degree."""
        keys = sorted(self, key=lambda ij: (-ij[0], ij[1]))
        return [{"i": i, "j": j, "c": self[i, j]} for i, j in keys]


def tutte_polynomial(M: OrderedMatroid) -> TuttePolynomial:
    counts = Counter((bits.popcount(a.ia), bits.popcount(a.ea)) for a in activities(M))
    return TuttePolynomial(sorted(counts.items()))


@dataclass(frozen=True)
class CrapoReport:
    ok: bool
    witness: int | None = None
    detail: str = ""


def _compress(M: OrderedMatroid, masks):
    """Re-index ground elements to bits 0..size-1 so kernels see a dense universe."""
    elems = sorted(M.order)
    slot = {e: k for k, e in enumerate(elems)}

    def squash(m):
        out = 0
        for e in bits.elements(m):
            out |= 1 << slot[e]
        return out

    def expand(m):
        return bits.mask(elems[k] for k in range(len(elems)) if m >> k & 1)

    return np.array([squash(m) for m in masks], dtype=np.int64), expand


def crapo_partition_check(M: OrderedMatroid) -> CrapoReport:
    """Verify that the intervals [B - IA(B), B + EA(B)] partition all subsets of the ground set
    and that [B - IA(B), B] partition the independent sets.

    Returns the first subset covered a wrong number of times as the witness.
    """
    _require_small(M)
    acts = activities(M)
    lows, expand = _compress(M, [a.basis & ~a.ia for a in acts])
    highs, _ = _compress(M, [a.basis | a.ea for a in acts])
    tops, _ = _compress(M, [a.basis for a in acts])
    size = M.size
    cover = kernels.interval_cover_counts(lows, highs, size)
    bad = np.flatnonzero(cover != 1)
    if bad.size:
        return CrapoReport(False, expand(int(bad[0])), f"covered {int(cover[bad[0]])} times by full intervals")
    cover_in = kernels.interval_cover_counts(lows, tops, size)
    faces = kernels.face_table(tops, size)
    expected = faces.astype(np.int64)
    bad = np.flatnonzero(cover_in != expected)
    if bad.size:
        return CrapoReport(False, expand(int(bad[0])), f"covered {int(cover_in[bad[0]])} times by independent intervals")
    return CrapoReport(True)


def absolute_elements(M: OrderedMatroid) -> tuple[int, int]:
    """Elements externally active (resp. passive) for every basis avoiding them.

    Coloops avoid no basis; by convention they belong to neither set.
    """
    acts = activities(M)
    aea = aep = M.ground & ~coloops(M)
    for a in acts:
        outside = M.ground & ~a.basis
        aea &= ~(outside & a.ep)
        aep &= ~(outside & a.ea)
    return aea, aep

