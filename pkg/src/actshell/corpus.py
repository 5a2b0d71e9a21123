"""Small matroids for exhaustive property sweeps.

The corpus is: the five-edge reference example; uniform matroids U(n, k) with
n <= 6; cycle matroids of every connected simple graph on 2..4 vertices
(edges labelled in the order they appear in the complete graph); and seeded
random linear matroids over GF(2) and GF(3) with n <= 7.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import bits
from .matroid import OrderedMatroid, _make, from_graph, uniform
from .reference import reference_matroid


def uniform_family(max_n: int = 6) -> list[tuple[str, OrderedMatroid]]:
    return [(f"U({n},{k})", uniform(n, k)) for n in range(1, max_n + 1) for k in range(n + 1)]


def _connected(vertices: int, edges) -> bool:
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == vertices


def graphic_family(max_vertices: int = 4, max_edges: int = 6) -> list[tuple[str, OrderedMatroid]]:
    out = []
    for v in range(2, max_vertices + 1):
        complete = list(itertools.combinations(range(1, v + 1), 2))
        for m in range(v - 1, min(max_edges, len(complete)) + 1):
            for edges in itertools.combinations(complete, m):
                if _connected(v, edges):
                    name = "G" + "".join(f"{a}{b}" for a, b in edges)
                    out.append((name, from_graph(v, edges)))
    return out


def _rank_mod_p(cols: list[list[int]], p: int) -> int:
    if not cols:
        return 0
    rows = [list(r) for r in zip(*cols)]
    rank = 0
    ncols = len(cols)
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def linear_matroid(matrix, p: int) -> OrderedMatroid:
    """Column matroid of an integer matrix over GF(p); column j is element j + 1."""
    A = np.asarray(matrix, dtype=np.int64) % p
    cols = [A[:, j].tolist() for j in range(A.shape[1])]
    n = len(cols)
    r = _rank_mod_p(cols, p)
    bases = [
        bits.mask(i + 1 for i in combo)
        for combo in itertools.combinations(range(n), r)
        if _rank_mod_p([cols[i] for i in combo], p) == r
    ]
    return _make(n, (1 << n) - 1, range(1, n + 1), bases)


def random_family(count: int = 50, max_n: int = 7, seed: int = 0) -> list[tuple[str, OrderedMatroid]]:
    rng = np.random.default_rng(seed)
    out = []
    for t in range(count):
        n = int(rng.integers(2, max_n + 1))
        r = int(rng.integers(1, n + 1))
        p = int(rng.choice([2, 3]))
        A = rng.integers(0, p, size=(r, n))
        out.append((f"rand{t}:GF({p}),n={n}", linear_matroid(A, p)))
    return out


def full_corpus(seed: int = 0) -> list[tuple[str, OrderedMatroid]]:
    return [("M0", reference_matroid())] + uniform_family() + graphic_family() + random_family(seed=seed)
