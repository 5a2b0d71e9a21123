"""Las Vergnas's external, internal and external/internal orders on bases.

Bases are referred to by their index in ``M.bases`` (lexicographic order), so
a linear extension is a tuple of indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .activity import activities
from .bits import popcount
from .errors import NotALinearExtension, NotAPartialOrder, WrongBasisSet
from .matroid import OrderedMatroid, dual

KINDS = ("ext", "int", "extint")


def _act(M: OrderedMatroid, B: int):
    M.check_basis(B)
    return activities(M)[M.basis_index[B]]


def leq_ext(M: OrderedMatroid, A: int, B: int) -> bool:
    """A <=_ext B  iff  A is contained in B + EA(B)."""
    _act(M, A)
    return A & ~(B | _act(M, B).ea) == 0


def leq_int(M: OrderedMatroid, A: int, B: int) -> bool:
    """A <=_int B  iff  A - IA(A) is contained in B."""
    _act(M, B)
    return _act(M, A).ip & ~B == 0


def leq_extint(M: OrderedMatroid, A: int, B: int) -> bool:
    """A <=_extint B  iff  IP(A) and EP(B) are disjoint."""
    return _act(M, A).ip & _act(M, B).ep == 0


LEQ = {"ext": leq_ext, "int": leq_int, "extint": leq_extint}


# -------------------------------------------------- equivalent characterizations


def _lex_restriction_sets(M: OrderedMatroid) -> list[int]:
    from .complexes import independence_complex, shelling_check

    report = shelling_check(independence_complex(M))
    if not report.is_shelling:
        raise NotAPartialOrder("lexicographic order failed to shell the independence complex")
    return list(report.restriction_sets)


def ext_characterizations(M: OrderedMatroid, A: int, B: int) -> dict[int, bool]:
    """All four descriptions of ``A <=_ext B``; they must agree.

    1: containment of lex-shelling restriction sets of the dual's independence
       complex, with complements and the roles of A, B swapped;
    2: A within B + EA(B);  3: A + EA(A) within B + EA(B);
    4: B is the lex-largest basis inside A + B.
    """
    a, b = _act(M, A), _act(M, B)
    D = dual(M)
    R = _lex_restriction_sets(D)
    ra = R[D.basis_index[M.ground & ~A]]
    rb = R[D.basis_index[M.ground & ~B]]
    inside = [C for C in M.bases if C & ~(A | B) == 0]
    return {
        1: rb & ~ra == 0,
        2: A & ~(B | b.ea) == 0,
        3: (A | a.ea) & ~(B | b.ea) == 0,
        4: max(inside, key=M.lex_key) == B,
    }


def int_characterizations(M: OrderedMatroid, A: int, B: int) -> dict[int, bool]:
    """All four descriptions of ``A <=_int B``; they must agree.

    1: containment of lex-shelling restriction sets of the independence complex;
    2: A - IA(A) within B;  3: A - IA(A) within B - IA(B);
    4: A is the lex-smallest basis containing A & B.
    """
    a, b = _act(M, A), _act(M, B)
    R = _lex_restriction_sets(M)
    ra, rb = R[M.basis_index[A]], R[M.basis_index[B]]
    common = A & B
    containing = [C for C in M.bases if common & ~C == 0]
    return {
        1: ra & ~rb == 0,
        2: a.ip & ~B == 0,
        3: a.ip & ~b.ip == 0,
        4: min(containing, key=M.lex_key) == A,
    }


def characterization_tables(M: OrderedMatroid) -> dict[str, np.ndarray]:
    """Relation matrices ``[kind][c][a, b]`` for every characterization, computed in bulk."""
    acts = activities(M)
    k = len(M.bases)
    D = dual(M)
    R_int = _lex_restriction_sets(M)
    R_dual = _lex_restriction_sets(D)
    R_ext = [R_dual[D.basis_index[M.ground & ~B]] for B in M.bases]
    keys = [M.lex_key(B) for B in M.bases]
    index = M.basis_index
    ext = np.zeros((4, k, k), dtype=bool)
    int_ = np.zeros((4, k, k), dtype=bool)
    for x, y in itertools.product(range(k), repeat=2):
        A, B = M.bases[x], M.bases[y]
        a, b = acts[x], acts[y]
        ext[0, x, y] = R_ext[y] & ~R_ext[x] == 0
        ext[1, x, y] = A & ~(B | b.ea) == 0
        ext[2, x, y] = (A | a.ea) & ~(B | b.ea) == 0
        union = A | B
        ext[3, x, y] = max((index[C] for C in M.bases if C & ~union == 0), key=keys.__getitem__) == y
        int_[0, x, y] = R_int[x] & ~R_int[y] == 0
        int_[1, x, y] = a.ip & ~B == 0
        int_[2, x, y] = a.ip & ~b.ip == 0
        common = A & B
        int_[3, x, y] = min((index[C] for C in M.bases if common & ~C == 0), key=keys.__getitem__) == x
    return {"ext": ext, "int": int_}


# ------------------------------------------------------------------- posets


@dataclass(frozen=True, eq=False)
class BasisPoset:
    matroid: OrderedMatroid
    kind: str
    leq: np.ndarray

    @property
    def bases(self) -> tuple[int, ...]:
        return self.matroid.bases

    @property
    def size(self) -> int:
        return len(self.matroid.bases)

    @property
    def less(self) -> np.ndarray:
        return self.leq & ~np.eye(self.size, dtype=bool)


def poset_violation(leq: np.ndarray) -> str | None:
    """Name of the first failing partial-order axiom, or None."""
    k = leq.shape[0]
    if not leq.diagonal().all():
        return "reflexivity"
    if (leq & leq.T & ~np.eye(k, dtype=bool)).any():
        return "antisymmetry"
    li = leq.astype(np.int64)
    if ((li @ li > 0) & ~leq).any():
        return "transitivity"
    return None


def relation_matrix(M: OrderedMatroid, kind: str) -> np.ndarray:
    acts = activities(M)
    bases = np.array(M.bases, dtype=np.int64)
    if kind == "ext":
        up = np.array([a.basis | a.ea for a in acts], dtype=np.int64)
        return (bases[:, None] & ~up[None, :]) == 0
    if kind == "int":
        ip = np.array([a.ip for a in acts], dtype=np.int64)
        return (ip[:, None] & ~bases[None, :]) == 0
    if kind == "extint":
        ip = np.array([a.ip for a in acts], dtype=np.int64)
        ep = np.array([a.ep for a in acts], dtype=np.int64)
        return (ip[:, None] & ep[None, :]) == 0
    raise ValueError(f"unknown order kind {kind!r}; expected one of {KINDS}")


def build_poset(M: OrderedMatroid, kind: str) -> BasisPoset:
    leq = relation_matrix(M, kind)
    bad = poset_violation(leq)
    if bad is not None:
        raise NotAPartialOrder(f"{kind} relation fails {bad}")
    return BasisPoset(M, kind, leq)


def hasse(P: BasisPoset) -> list[tuple[int, int]]:
    """Covering pairs (a, b), a < b, as basis indices, sorted."""
    lt = P.less
    li = lt.astype(np.int64)
    cover = lt & ~((li @ li) > 0)
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def grade_violations(P: BasisPoset, grade: Sequence[int]) -> list[tuple[int, int]]:
    """Covering pairs whose grade does not go up by exactly one."""
    return [(a, b) for a, b in hasse(P) if grade[b] != grade[a] + 1]


def natural_grade(P: BasisPoset) -> list[int]:
    """|EA(B)| for ext, r - |IA(B)| for int."""
    acts = activities(P.matroid)
    if P.kind == "ext":
        return [popcount(a.ea) for a in acts]
    if P.kind == "int":
        return [P.matroid.rank - popcount(a.ia) for a in acts]
    raise ValueError("the external/internal order is not graded in general")


# ------------------------------------------------------- linear extensions


def _check_permutation(P: BasisPoset, order: Sequence[int]) -> None:
    if sorted(order) != list(range(P.size)):
        raise WrongBasisSet(f"order must list each of the {P.size} bases exactly once", witness=list(order))


def is_linear_extension(P: BasisPoset, order: Sequence[int]) -> bool:
    _check_permutation(P, order)
    pos = np.empty(P.size, dtype=np.int64)
    pos[list(order)] = np.arange(P.size)
    a, b = np.nonzero(P.less)
    return bool((pos[a] < pos[b]).all())


def require_linear_extension(P: BasisPoset, order: Sequence[int]) -> None:
    if not is_linear_extension(P, order):
        raise NotALinearExtension(f"order is not a linear extension of the {P.kind} order", witness=list(order))


def lex_order(M: OrderedMatroid) -> tuple[int, ...]:
    return tuple(range(len(M.bases)))


def _cover_lists(P: BasisPoset):
    pairs = hasse(P)
    succ: list[list[int]] = [[] for _ in range(P.size)]
    indeg = [0] * P.size
    for a, b in pairs:
        succ[a].append(b)
        indeg[b] += 1
    return succ, indeg


def iter_linear_extensions(P: BasisPoset) -> Iterator[tuple[int, ...]]:
    """All linear extensions, in lexicographic order of index sequences."""
    succ, indeg = _cover_lists(P)
    k = P.size
    prefix: list[int] = []

    def rec(available: list[int]):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for a in available:
            nxt = [x for x in available if x != a]
            for s in succ[a]:
                indeg[s] -= 1
                if indeg[s] == 0:
                    nxt.append(s)
            nxt.sort()
            prefix.append(a)
            yield from rec(nxt)
            prefix.pop()
            for s in succ[a]:
                indeg[s] += 1

    yield from rec([a for a in range(k) if indeg[a] == 0])


def count_linear_extensions(P: BasisPoset, cap: int) -> int:
    """Number of linear extensions, or ``cap + 1`` if there are more than ``cap``."""
    return sum(1 for _ in itertools.islice(iter_linear_extensions(P), cap + 1))


def _random_extension(succ, indeg0, rng) -> tuple[int, ...]:
    indeg = list(indeg0)
    available = [a for a in range(len(indeg)) if indeg[a] == 0]
    out = []
    while available:
        a = available.pop(int(rng.integers(len(available))))
        out.append(a)
        for s in succ[a]:
            indeg[s] -= 1
            if indeg[s] == 0:
                available.append(s)
    return tuple(out)


def sample_linear_extensions(P: BasisPoset, count: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Up to ``count`` distinct random topological sorts, reproducible from ``seed``."""
    succ, indeg = _cover_lists(P)
    rng = np.random.default_rng(seed)
    seen: dict[tuple[int, ...], None] = {}
    attempts = 0
    while len(seen) < count and attempts < 50 * count:
        seen.setdefault(_random_extension(succ, indeg, rng))
        attempts += 1
    return list(seen)


def linear_extensions(P: BasisPoset, limit: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Every linear extension if there are at most ``limit``; otherwise ``limit`` seeded samples."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    head = list(itertools.islice(iter_linear_extensions(P), limit + 1))
    if len(head) <= limit:
        return head
    return sample_linear_extensions(P, limit, seed)


def extension_orders(
    P: BasisPoset,
    seed: int = 0,
    exhaustive_limit: int = 10_000,
    samples: int = 1_000,
) -> tuple[list[tuple[int, ...]], bool]:
    """Orders for exhaustive sweeps: all extensions when there are at most
    ``exhaustive_limit``, else ``samples`` seeded samples. Second item says which."""
    head = list(itertools.islice(iter_linear_extensions(P), exhaustive_limit + 1))
    if len(head) <= exhaustive_limit:
        return head, True
    return sample_linear_extensions(P, samples, seed), False
