"""Simplicial complexes attached to an ordered matroid and their shellings.

A complex is a facet list of bitmasks. The independence complex lives on the
ground set; the external activity complex lives on the doubled ground set,
where plain ``e`` is bit ``e - 1`` and barred ``e`` is bit ``n + e - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Sequence

import numpy as np

from . import bits, kernels
from .activity import activities
from .errors import NonPure, NotAnAntichain, NotAPermutation, TooLarge
from .matroid import OrderedMatroid, circuits
from .orders import build_poset, require_linear_extension

_MAX_FACET_BITS = 30


class SignedVertex(NamedTuple):
    element: int
    barred: bool

    def label(self) -> int:
        return -self.element if self.barred else self.element


@dataclass(frozen=True)
class SimplicialComplex:
    """Pure or non-pure complex given by its facets.

    ``ground`` is the ambient vertex universe (a mask); vertices that lie in no
    facet are loops of the complex. ``n`` is the element count used to decode
    signed vertices when ``signed`` is set.
    """

    facets: tuple[int, ...]
    ground: int
    n: int
    signed: bool = False

    def __post_init__(self):
        fs = self.facets
        for i, a in enumerate(fs):
            for b in fs[i + 1 :]:
                if a & ~b == 0 or b & ~a == 0:
                    raise NotAnAntichain("facet list is not an antichain", witness=[self.labels(a), self.labels(b)])

    def labels(self, m: int) -> list[int]:
        return bits.signed_labels(m, self.n) if self.signed else bits.elements(m)

    def vertex(self, slot_bit: int) -> SignedVertex:
        i = slot_bit.bit_length()
        if self.signed and i > self.n:
            return SignedVertex(i - self.n, True)
        return SignedVertex(i, False)

    @property
    def vertices(self) -> int:
        out = 0
        for F in self.facets:
            out |= F
        return out

    def is_pure(self) -> bool:
        return len({bits.popcount(F) for F in self.facets}) == 1

    @property
    def facet_size(self) -> int:
        """Number of vertices in a largest facet (dimension + 1)."""
        return max(bits.popcount(F) for F in self.facets)

    def to_json(self) -> dict:
        return {
            "vertices": self.labels(self.vertices),
            "facets": [self.labels(F) for F in self.facets],
        }


def independence_complex(M: OrderedMatroid) -> SimplicialComplex:
    """Facets are the bases, listed lexicographically."""
    return SimplicialComplex(M.bases, M.ground, M.n)


def act_facet(M: OrderedMatroid, B: int) -> int:
    """B + EP(B) + bar(B + EA(B))."""
    a = activities(M)[M.basis_index[B]]
    return B | a.ep | bits.barred(B | a.ea, M.n)


def external_activity_complex(M: OrderedMatroid) -> SimplicialComplex:
    """Facets F(B) aligned with ``M.bases``."""
    facets = tuple(act_facet(M, B) for B in M.bases)
    return SimplicialComplex(facets, M.ground | bits.barred(M.ground, M.n), M.n, signed=True)


# ----------------------------------------------------------------- helpers


def cone_points(K: SimplicialComplex) -> int:
    inter = K.ground
    for F in K.facets:
        inter &= F
    return inter


def strip_cone(K: SimplicialComplex) -> SimplicialComplex:
    """Delete every cone point; the ground set becomes the remaining vertices."""
    cone = cone_points(K)
    facets = tuple(F & ~cone for F in K.facets)
    ground = 0
    for F in facets:
        ground |= F
    return SimplicialComplex(facets, ground, K.n, K.signed)


class _Dense:
    """Bijection between the bits of a mask and 0..V-1, for kernel calls."""

    def __init__(self, universe: int):
        self.slots = list(bits.iter_bits(universe))
        if len(self.slots) > _MAX_FACET_BITS:
            raise TooLarge(f"{len(self.slots)} vertices exceed the enumeration cap")
        self.index = {b: k for k, b in enumerate(self.slots)}

    @property
    def size(self) -> int:
        return len(self.slots)

    def squash(self, m: int) -> int:
        out = 0
        for b in bits.iter_bits(m):
            out |= 1 << self.index[b]
        return out

    def expand(self, m: int) -> int:
        out = 0
        k = 0
        while m:
            if m & 1:
                out |= self.slots[k]
            m >>= 1
            k += 1
        return out

    def array(self, masks: Sequence[int]) -> np.ndarray:
        return np.array([self.squash(m) for m in masks], dtype=np.int64)


def _base_of_cone(K: SimplicialComplex) -> tuple[_Dense, np.ndarray, int]:
    cone = cone_points(K)
    dense = _Dense(K.vertices & ~cone)
    return dense, dense.array([F & ~cone for F in K.facets]), bits.popcount(cone)


# --------------------------------------------------------- face statistics


def f_vector(K: SimplicialComplex) -> list[int]:
    """``f[i]`` = number of faces with i vertices; ``f[0] = 1`` counts the empty face.

    Faces are enumerated on the complex with its cone points removed; coning
    over c points multiplies the face generating polynomial by (1 + t)**c.
    """
    dense, facets, c = _base_of_cone(K)
    base = kernels.new_face_counts(facets, dense.size).sum(axis=0)
    out = [0] * (dense.size + c + 1)
    for i, fi in enumerate(base.tolist()):
        for j in range(c + 1):
            out[i + j] += fi * comb(c, j)
    return out[: K.facet_size + 1]


def h_from_f(f: Sequence[int]) -> list[int]:
    d = len(f) - 1
    return [sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)]


def h_vector(K: SimplicialComplex) -> list[int]:
    if not K.is_pure():
        raise NonPure("h-vector needs a pure complex")
    return h_from_f(f_vector(K))


def euler_characteristic(K: SimplicialComplex) -> tuple[int, int]:
    """(chi, reduced chi). chi sums (-1)**(i-1) f_i over nonempty faces; reduced chi = chi - 1."""
    f = f_vector(K)
    chi = sum((-1) ** (i - 1) * fi for i, fi in enumerate(f) if i >= 1)
    return chi, chi - 1


def minimal_nonfaces(K: SimplicialComplex) -> list[int]:
    """Minimal non-faces over the ambient ground set, sorted by size then labels.

    Cone points never occur in a minimal non-face, so they are dropped before
    enumeration.
    """
    cone = cone_points(K)
    dense = _Dense(K.ground & ~cone)
    found = kernels.minimal_nonfaces(dense.array([F & ~cone for F in K.facets]), dense.size)
    out = [dense.expand(int(m)) for m in found]
    return sorted(out, key=lambda m: (bits.popcount(m), _label_key(K, m)))


def _label_key(K: SimplicialComplex, m: int):
    return [(v < 0, abs(v)) for v in K.labels(m)]


def circuit_nonface(M: OrderedMatroid, gamma: int) -> int:
    """c + bar(gamma - c) with c the smallest element of the circuit."""
    c = bits.bit(M.min(gamma))
    return c | bits.barred(gamma & ~c, M.n)


@dataclass(frozen=True)
class StanleyReisnerReport:
    ok: bool
    missing: tuple[int, ...] = ()
    extra: tuple[int, ...] = ()


def verify_stanley_reisner(M: OrderedMatroid) -> StanleyReisnerReport:
    """Compare the combinatorial minimal non-faces of Act with the circuit formula."""
    expected = {circuit_nonface(M, g) for g in circuits(M)}
    got = set(minimal_nonfaces(external_activity_complex(M)))
    return StanleyReisnerReport(got == expected, tuple(sorted(expected - got)), tuple(sorted(got - expected)))


# ------------------------------------------------------------------ shelling


@dataclass(frozen=True)
class ShellingReport:
    is_shelling: bool
    order: tuple[int, ...]
    failure_index: int | None = None
    restriction_sets: tuple[int, ...] = ()

    def to_json(self, K: SimplicialComplex) -> dict:
        return {
            "is_shelling": self.is_shelling,
            "failure_index": self.failure_index,
            "order": list(self.order),
            "restriction_sets": [K.labels(R) for R in self.restriction_sets],
        }


class ShellingInconsistency(RuntimeError):
    """New faces of an accepted step do not form the interval [R, F]."""


def _facet_array(K: SimplicialComplex) -> np.ndarray:
    if not K.is_pure():
        raise NonPure("shelling is defined for pure complexes")
    if K.ground.bit_length() > 62:
        raise TooLarge("vertex universe does not fit in 64-bit masks")
    return np.array(K.facets, dtype=np.int64)


def _check_order(K: SimplicialComplex, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(x) for x in order)
    if sorted(order) != list(range(len(K.facets))):
        raise NotAPermutation(f"order must be a permutation of 0..{len(K.facets) - 1}", witness=list(order))
    return order


def check_orders(K: SimplicialComplex, orders) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised shelling test of many facet orders. See ``kernels.shell_orders``."""
    facets = _facet_array(K)
    orders = np.asarray(orders, dtype=np.int64).reshape(-1, len(K.facets))
    return kernels.shell_orders(facets, orders)


def shelling_check(K: SimplicialComplex, order: Sequence[int] | None = None, *, verify: bool = True) -> ShellingReport:
    """Test whether ``order`` (facet indices; default: stored order) is a shelling.

    For each later facet F_j every earlier F_i must satisfy
    F_i & F_j <= F_k & F_j = F_j - f for some earlier F_k and f in F_j. The
    restriction set of F_j is the set of such f. With ``verify`` the number of
    new faces per step is recounted and must equal 2**(|F_j| - |R(F_j)|).
    """
    facets = _facet_array(K)
    order = _check_order(K, range(len(K.facets)) if order is None else order)
    fail, restr = kernels.shell_orders(facets, np.array([order], dtype=np.int64))
    if fail[0] >= 0:
        return ShellingReport(False, order, int(fail[0]))
    rsets = tuple(int(r) for r in restr[0])
    if verify:
        dense, squashed, _ = _base_of_cone(K)
        counts = kernels.new_face_counts(squashed[list(order)], dense.size).sum(axis=1)
        for j, (F, R) in enumerate(zip((K.facets[i] for i in order), rsets)):
            width = bits.popcount(dense.squash(F & ~cone_points(K))) - bits.popcount(R)
            if counts[j] != 1 << width:
                raise ShellingInconsistency(f"step {j}: {counts[j]} new faces, expected 2**{width}")
    return ShellingReport(True, order, None, rsets)


def restriction_sets_predicted(M: OrderedMatroid, order: Sequence[int], which: str = "act") -> list[int]:
    """IP(C) (independence complex) or bar(IP(C)) (activity complex), in order position.

    The order must extend the internal order (``which="in"``) or the
    external/internal order (``which="act"``).
    """
    kind = {"in": "int", "act": "extint"}[which]
    require_linear_extension(build_poset(M, kind), order)
    acts = activities(M)
    if which == "in":
        return [acts[i].ip for i in order]
    return [bits.barred(acts[i].ip, M.n) for i in order]
