"""Ordered matroids stored by explicit basis lists."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import bits
from .bits import bit, popcount
from .errors import (
    ContractLoop,
    DeleteColoop,
    ElementInBasis,
    ElementNotInBasis,
    EmptyBases,
    ExchangeAxiomViolated,
    InvalidElement,
    InvalidRank,
    NotABasis,
    TooLarge,
    UnequalSizes,
)


@dataclass(frozen=True)
class OrderedMatroid:
    """A matroid on a subset of ``{1..n}`` together with a linear order.

    ``order`` lists the ground elements from smallest to largest. ``bases`` are
    bitmasks, kept sorted in lexicographic order with respect to ``order``.
    Deletion and contraction keep element ids, so the ground set of a minor is
    ``ground``, not necessarily all of ``{1..n}``.
    """

    n: int
    ground: int
    order: tuple[int, ...]
    bases: tuple[int, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.order)}

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def basis_index(self) -> dict[int, int]:
        return {B: i for i, B in enumerate(self.bases)}

    @property
    def rank(self) -> int:
        return popcount(self.bases[0])

    @property
    def size(self) -> int:
        return len(self.order)

    def min(self, m: int) -> int:
        """Smallest element of a nonempty set under the stored order."""
        for e in self.order:
            if m & bit(e):
                return e
        raise ValueError("min of an empty set")

    def lex_key(self, m: int) -> tuple[int, ...]:
        pos = self.position
        return tuple(sorted(pos[e] for e in bits.elements(m)))

    def is_basis(self, s: int) -> bool:
        return s in self.basis_set

    def is_independent(self, s: int) -> bool:
        return any(s & ~B == 0 for B in self.bases)

    def check_basis(self, B: int) -> None:
        if B not in self.basis_set:
            raise NotABasis(f"{bits.elements(B)} is not a basis", witness=bits.elements(B))

    def __repr__(self) -> str:
        bs = ", ".join("".join(map(str, bits.elements(B))) or "{}" for B in self.bases)
        return f"OrderedMatroid(order={list(self.order)}, bases=[{bs}])"


def _lex_sorted(bases: Iterable[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {e: i for i, e in enumerate(order)}
    return tuple(sorted(set(bases), key=lambda B: tuple(sorted(pos[e] for e in bits.elements(B)))))


def exchange_violation(bases: Sequence[int]) -> tuple[int, int, int] | None:
    """First (A, B, a) breaking basis exchange, or None."""
    bset = set(bases)
    for A in bases:
        for B in bases:
            if A == B:
                continue
            for a in bits.iter_bits(A & ~B):
                if not any((A ^ a) | b in bset for b in bits.iter_bits(B & ~A)):
                    return A, B, a
    return None


def _make(n: int, ground: int, order: Sequence[int], bases: Iterable[int]) -> OrderedMatroid:
    return OrderedMatroid(n, ground, tuple(order), _lex_sorted(bases, order))


def from_bases(
    n: int,
    bases: Iterable[Iterable[int]],
    order: Sequence[int] | None = None,
    *,
    check: bool = True,
) -> OrderedMatroid:
    """Build and validate a matroid on ``{1..n}`` from its bases.

    Raises EmptyBases, UnequalSizes or ExchangeAxiomViolated (with the offending
    pair as witness); InvalidElement for ids outside ``1..n`` or a bad order.
    """
    if n < 0:
        raise InvalidElement("ground size must be nonnegative")
    masks = []
    for B in bases:
        B = list(B)
        if any(not (1 <= e <= n) for e in B):
            raise InvalidElement(f"basis {B} has elements outside 1..{n}", witness=B)
        if len(set(B)) != len(B):
            raise InvalidElement(f"basis {B} repeats an element", witness=B)
        masks.append(bits.mask(B))
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    if order is None:
        order = list(range(1, n + 1))
    order = list(order)
    if sorted(order) != list(range(1, n + 1)):
        raise InvalidElement(f"order must be a permutation of 1..{n}", witness=order)
    sizes = {popcount(B) for B in masks}
    if len(sizes) > 1:
        raise UnequalSizes(f"bases have sizes {sorted(sizes)}", witness=sorted(sizes))
    masks = sorted(set(masks))
    if check:
        bad = exchange_violation(masks)
        if bad is not None:
            A, B, a = bad
            raise ExchangeAxiomViolated(
                f"no exchange for {bits.elements(a)[0]} from {bits.elements(A)} into {bits.elements(B)}",
                witness={"A": bits.elements(A), "B": bits.elements(B), "a": bits.elements(a)[0]},
            )
    return _make(n, (1 << n) - 1, order, masks)


def uniform(n: int, k: int, order: Sequence[int] | None = None) -> OrderedMatroid:
    if not 0 <= k <= n:
        raise InvalidRank(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    order = list(order) if order is not None else list(range(1, n + 1))
    bases = [bits.mask(c) for c in itertools.combinations(range(1, n + 1), k)]
    return _make(n, (1 << n) - 1, order, bases)


class _Forest:
    def __init__(self):
        self.parent: dict = {}

    def find(self, v):
        self.parent.setdefault(v, v)
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u, v) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[ru] = rv
        return True


def _acyclic(edges: Sequence[tuple[int, int]]) -> bool:
    forest = _Forest()
    return all(forest.union(u, v) for u, v in edges)


def from_graph(
    vertex_count: int,
    edges: Sequence[Sequence[int]],
    order: Sequence[int] | None = None,
) -> OrderedMatroid:
    """Cycle matroid of a multigraph; edge ``i`` (1-based, list order) is element ``i``.

    Self-loops become matroid loops. Vertices are labelled ``1..vertex_count``.
    """
    edges = [tuple(e) for e in edges]
    for e in edges:
        if len(e) != 2 or any(not (1 <= v <= vertex_count) for v in e):
            raise InvalidElement(f"edge {list(e)} is not a pair of vertices in 1..{vertex_count}", witness=list(e))
    n = len(edges)
    forest = _Forest()
    r = sum(forest.union(u, v) for u, v in edges)
    bases = [
        bits.mask(i + 1 for i in combo)
        for combo in itertools.combinations(range(n), r)
        if _acyclic([edges[i] for i in combo])
    ]
    order = list(order) if order is not None else list(range(1, n + 1))
    return _make(n, (1 << n) - 1, order, bases)


def with_order(M: OrderedMatroid, order: Sequence[int]) -> OrderedMatroid:
    """Same matroid, different linear order on the ground set."""
    if sorted(order) != sorted(M.order):
        raise InvalidElement("new order must be a permutation of the ground set", witness=list(order))
    return _make(M.n, M.ground, order, M.bases)


def loops(M: OrderedMatroid) -> int:
    union = 0
    for B in M.bases:
        union |= B
    return M.ground & ~union


def coloops(M: OrderedMatroid) -> int:
    inter = M.ground
    for B in M.bases:
        inter &= B
    return inter


def dual(M: OrderedMatroid) -> OrderedMatroid:
    return _make(M.n, M.ground, M.order, [M.ground & ~B for B in M.bases])


def _check_element(M: OrderedMatroid, e: int) -> int:
    if not (1 <= e <= M.n) or not M.ground & bit(e):
        raise InvalidElement(f"{e} is not in the ground set", witness=e)
    return bit(e)


def delete(M: OrderedMatroid, e: int) -> OrderedMatroid:
    b = _check_element(M, e)
    if coloops(M) & b:
        raise DeleteColoop(f"{e} is a coloop", witness=e)
    return _make(M.n, M.ground & ~b, [x for x in M.order if x != e], [B for B in M.bases if not B & b])


def contract(M: OrderedMatroid, e: int) -> OrderedMatroid:
    b = _check_element(M, e)
    if loops(M) & b:
        raise ContractLoop(f"{e} is a loop", witness=e)
    return _make(M.n, M.ground & ~b, [x for x in M.order if x != e], [B & ~b for B in M.bases if B & b])


def remove_coloops(M: OrderedMatroid) -> OrderedMatroid:
    """Contract every coloop (deletion and contraction agree on coloops)."""
    for e in bits.elements(coloops(M)):
        M = contract(M, e)
    return M


def fundamental_circuit(M: OrderedMatroid, B: int, e: int) -> int:
    """``{x : B + e - x is a basis}`` for a basis B and ``e`` outside it."""
    M.check_basis(B)
    b = _check_element(M, e)
    if B & b:
        raise ElementInBasis(f"{e} lies in the basis", witness=e)
    U = B | b
    return sum(x for x in bits.iter_bits(U) if (U ^ x) in M.basis_set)


def fundamental_cocircuit(M: OrderedMatroid, B: int, i: int) -> int:
    """``{x : B + x - i is a basis}`` for a basis B and ``i`` in it."""
    M.check_basis(B)
    b = _check_element(M, i)
    if not B & b:
        raise ElementNotInBasis(f"{i} is not in the basis", witness=i)
    rest = B ^ b
    return sum(x for x in bits.iter_bits(M.ground & ~rest) if (rest | x) in M.basis_set)


def _require_small(M: OrderedMatroid) -> None:
    if M.size > bits.max_n():
        raise TooLarge(f"ground size {M.size} exceeds MATROID_MAX_N={bits.max_n()}")


@lru_cache(maxsize=1024)
def circuits(M: OrderedMatroid) -> tuple[int, ...]:
    """Minimal dependent sets, sorted lexicographically under the ground order."""
    _require_small(M)
    independent = set()
    for B in M.bases:
        independent.update(bits.submasks(B))
    found = []
    for S in bits.submasks(M.ground):
        if S in independent:
            continue
        if all((S ^ x) in independent for x in bits.iter_bits(S)):
            found.append(S)
    return tuple(sorted(found, key=M.lex_key))


def has_intersecting_circuits(M: OrderedMatroid) -> bool:
    cs = circuits(M)
    return any(a & b for a, b in itertools.combinations(cs, 2))


def _is_u31(bases: frozenset[int], kept: int) -> bool:
    return bases == frozenset(bits.iter_bits(kept))


def has_u31_minor(M: OrderedMatroid) -> bool:
    """Search delete/contract sequences for a minor isomorphic to U_{3,1}.

    Elements are decided in a fixed order (keep, delete or contract), which is
    complete because deletions and contractions of distinct elements commute.
    Kept elements that turn into loops or coloops are pruned: that status is
    inherited by every further minor.
    """
    _require_small(M)
    elems = list(M.order)
    total = len(elems)

    @lru_cache(maxsize=None)
    def search(idx: int, kept: int, bases: frozenset[int]) -> bool:
        nkept = popcount(kept)
        if nkept + (total - idx) < 3:
            return False
        union, inter = 0, -1
        for B in bases:
            union |= B
            inter &= B
        if kept & ~union or kept & inter:
            return False
        if idx == total:
            return _is_u31(bases, kept)
        b = bit(elems[idx])
        if nkept < 3 and search(idx + 1, kept | b, bases):
            return True
        in_all = all(B & b for B in bases)
        in_none = not any(B & b for B in bases)
        if in_all or in_none:
            # loops and coloops: deletion and contraction coincide
            return search(idx + 1, kept, frozenset(B & ~b for B in bases))
        deleted = frozenset(B for B in bases if not B & b)
        contracted = frozenset(B & ~b for B in bases if B & b)
        return search(idx + 1, kept, deleted) or search(idx + 1, kept, contracted)

    return search(0, 0, frozenset(M.bases))


def disjoint_union(*parts: OrderedMatroid) -> OrderedMatroid:
    """Direct sum; elements of later parts are shifted past earlier ones."""
    n = ground = 0
    bases = [0]
    order: list[int] = []
    for P in parts:
        bases = [A | (B << n) for A in bases for B in P.bases]
        order += [e + n for e in P.order]
        ground |= P.ground << n
        n += P.n
    return _make(n, ground, order, bases)
