"""Bitmask kernels for the exhaustive parts of the engine.

Each kernel has two implementations with identical results:

* ``*_numba``: explicit loops compiled with ``numba.njit``;
* ``*_numpy``: vectorised numpy, used when numba is missing or when the
  environment variable ``ACTSHELL_DISABLE_JIT`` is set to a non-empty value
  other than ``0``.

The public names (``shell_orders``, ``new_face_counts``, ``face_table``,
``minimal_nonfaces``, ``interval_cover_counts``) are bound to one of the two at
import time; ``BACKEND`` records which. All masks are ``int64``.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

_DISABLED = os.environ.get("ACTSHELL_DISABLE_JIT", "") not in ("", "0")
HAVE_NUMBA = numba is not None
BACKEND = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"

_CHUNK = 1 << 16


def _popcount64(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64)).astype(np.int64)


def _all_submasks(m: int) -> np.ndarray:
    """Every submask of ``m`` as an int64 array (order: binary counting over the bits of m)."""
    subs = np.zeros(1, dtype=np.int64)
    while m:
        low = m & -m
        subs = np.concatenate([subs, subs | low])
        m ^= low
    return subs


# ---------------------------------------------------------------- numpy path


def shell_orders_numpy(facets: np.ndarray, orders: np.ndarray):
    """Check many facet orders against the pairwise shelling condition.

    ``facets`` holds k pure, distinct facet masks; ``orders`` is an (m, L)
    array of facet indices. Returns ``(fail, restr)``: ``fail[t]`` is the first
    position where order t violates the condition (-1 if it is a shelling) and
    ``restr[t, j]`` the restriction set of the facet at position j (valid up to
    the failure position).
    """
    facets = np.asarray(facets, dtype=np.int64)
    orders = np.asarray(orders, dtype=np.int64)
    m, L = orders.shape
    fail = np.full(m, -1, dtype=np.int64)
    restr = np.zeros((m, L), dtype=np.int64)
    if m == 0 or L == 0:
        return fail, restr
    F = facets[orders]
    size = _popcount64(F)
    alive = np.ones(m, dtype=bool)
    for j in range(1, L):
        Fj = F[:, j : j + 1]
        inter = F[:, :j] & Fj
        codim1 = _popcount64(inter) == size[:, j : j + 1] - 1
        R = np.bitwise_or.reduce(np.where(codim1, Fj & ~inter, 0), axis=1)
        ok = ((R[:, None] & ~inter) != 0).all(axis=1)
        fail[alive & ~ok] = j
        alive &= ok
        restr[:, j] = np.where(alive, R, 0)
        if not alive.any():
            break
    return fail, restr


def _contained_in_any(subs: np.ndarray, earlier: np.ndarray) -> np.ndarray:
    if earlier.size == 0:
        return np.zeros(subs.shape[0], dtype=bool)
    out = np.empty(subs.shape[0], dtype=bool)
    comp = ~earlier
    for s in range(0, subs.shape[0], _CHUNK):
        block = subs[s : s + _CHUNK]
        out[s : s + _CHUNK] = ((block[:, None] & comp[None, :]) == 0).any(axis=1)
    return out


def new_face_counts_numpy(facets: np.ndarray, nbits: int) -> np.ndarray:
    """``counts[j, i]``: faces of size i first appearing with facet j (facets taken in the given order)."""
    facets = np.asarray(facets, dtype=np.int64)
    k = facets.shape[0]
    counts = np.zeros((k, nbits + 1), dtype=np.int64)
    for j in range(k):
        subs = _all_submasks(int(facets[j]))
        new = subs[~_contained_in_any(subs, facets[:j])]
        counts[j] = np.bincount(_popcount64(new), minlength=nbits + 1)[: nbits + 1]
    return counts


def face_table_numpy(facets: np.ndarray, nbits: int) -> np.ndarray:
    """Boolean table over all ``2**nbits`` masks: is the mask a face?"""
    table = np.zeros(1 << nbits, dtype=bool)
    for f in np.asarray(facets, dtype=np.int64):
        table[_all_submasks(int(f))] = True
    return table


def minimal_nonfaces_numpy(facets: np.ndarray, nbits: int) -> np.ndarray:
    table = face_table_numpy(facets, nbits)
    idx = np.arange(1 << nbits, dtype=np.int64)
    cand = ~table
    for b in range(nbits):
        has = (idx >> b) & 1 == 1
        cand &= ~has | table[idx ^ (1 << b)]
    return idx[cand]


def interval_cover_counts_numpy(lows: np.ndarray, highs: np.ndarray, nbits: int) -> np.ndarray:
    """For every mask over ``nbits`` bits, how many intervals [low, high] contain it."""
    lows = np.asarray(lows, dtype=np.int64)
    highs = np.asarray(highs, dtype=np.int64)
    idx = np.arange(1 << nbits, dtype=np.int64)
    out = np.zeros(idx.shape[0], dtype=np.int64)
    for s in range(0, idx.shape[0], _CHUNK):
        block = idx[s : s + _CHUNK, None]
        inside = ((lows[None, :] & ~block) == 0) & ((block & ~highs[None, :]) == 0)
        out[s : s + _CHUNK] = inside.sum(axis=1)
    return out


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _pc(x):
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @numba.njit(cache=True)
    def _shell_orders_nb(facets, orders):
        m, L = orders.shape
        fail = np.full(m, -1, dtype=np.int64)
        restr = np.zeros((m, L), dtype=np.int64)
        for t in range(m):
            for j in range(1, L):
                Fj = facets[orders[t, j]]
                size = _pc(Fj)
                R = 0
                for i in range(j):
                    inter = facets[orders[t, i]] & Fj
                    if _pc(inter) == size - 1:
                        R |= Fj & ~inter
                ok = True
                for i in range(j):
                    inter = facets[orders[t, i]] & Fj
                    if R & ~inter == 0:
                        ok = False
                        break
                if not ok:
                    fail[t] = j
                    break
                restr[t, j] = R
        return fail, restr

    @numba.njit(cache=True)
    def _new_face_counts_nb(facets, nbits):
        k = facets.shape[0]
        counts = np.zeros((k, nbits + 1), dtype=np.int64)
        for j in range(k):
            F = facets[j]
            sub = F
            while True:
                seen = False
                for i in range(j):
                    if sub & ~facets[i] == 0:
                        seen = True
                        break
                if not seen:
                    counts[j, _pc(sub)] += 1
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return counts

    @numba.njit(cache=True)
    def _face_table_nb(facets, nbits):
        table = np.zeros(1 << nbits, dtype=np.bool_)
        for F in facets:
            sub = F
            while True:
                table[sub] = True
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return table

    @numba.njit(cache=True)
    def _minimal_nonfaces_nb(facets, nbits):
        table = _face_table_nb(facets, nbits)
        out = []
        for m in range(1 << nbits):
            if table[m]:
                continue
            minimal = True
            x = m
            while x:
                low = x & -x
                if not table[m ^ low]:
                    minimal = False
                    break
                x ^= low
            if minimal:
                out.append(m)
        res = np.empty(len(out), dtype=np.int64)
        for i in range(len(out)):
            res[i] = out[i]
        return res

    @numba.njit(cache=True)
    def _interval_cover_counts_nb(lows, highs, nbits):
        total = 1 << nbits
        out = np.zeros(total, dtype=np.int64)
        for m in range(total):
            c = 0
            for t in range(lows.shape[0]):
                if lows[t] & ~m == 0 and m & ~highs[t] == 0:
                    c += 1
            out[m] = c
        return out

    def shell_orders_numba(facets, orders):
        facets = np.ascontiguousarray(facets, dtype=np.int64)
        orders = np.ascontiguousarray(orders, dtype=np.int64)
        if orders.ndim != 2:
            raise ValueError("orders must be 2-D")
        return _shell_orders_nb(facets, orders)

    def new_face_counts_numba(facets, nbits):
        return _new_face_counts_nb(np.ascontiguousarray(facets, dtype=np.int64), nbits)

    def face_table_numba(facets, nbits):
        return _face_table_nb(np.ascontiguousarray(facets, dtype=np.int64), nbits)

    def minimal_nonfaces_numba(facets, nbits):
        return _minimal_nonfaces_nb(np.ascontiguousarray(facets, dtype=np.int64), nbits)

    def interval_cover_counts_numba(lows, highs, nbits):
        return _interval_cover_counts_nb(
            np.ascontiguousarray(lows, dtype=np.int64),
            np.ascontiguousarray(highs, dtype=np.int64),
            nbits,
        )

else:  # pragma: no cover
    shell_orders_numba = shell_orders_numpy
    new_face_counts_numba = new_face_counts_numpy
    face_table_numba = face_table_numpy
    minimal_nonfaces_numba = minimal_nonfaces_numpy
    interval_cover_counts_numba = interval_cover_counts_numpy


IMPLEMENTATIONS = {
    "numpy": {
        "shell_orders": shell_orders_numpy,
        "new_face_counts": new_face_counts_numpy,
        "face_table": face_table_numpy,
        "minimal_nonfaces": minimal_nonfaces_numpy,
        "interval_cover_counts": interval_cover_counts_numpy,
    },
    "numba": {
        "shell_orders": shell_orders_numba,
        "new_face_counts": new_face_counts_numba,
        "face_table": face_table_numba,
        "minimal_nonfaces": minimal_nonfaces_numba,
        "interval_cover_counts": interval_cover_counts_numba,
    },
}

shell_orders = IMPLEMENTATIONS[BACKEND]["shell_orders"]
new_face_counts = IMPLEMENTATIONS[BACKEND]["new_face_counts"]
face_table = IMPLEMENTATIONS[BACKEND]["face_table"]
minimal_nonfaces = IMPLEMENTATIONS[BACKEND]["minimal_nonfaces"]
interval_cover_counts = IMPLEMENTATIONS[BACKEND]["interval_cover_counts"]
