import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actshell import kernels

NAMES = ["shell_orders", "new_face_counts", "face_table", "minimal_nonfaces", "interval_cover_counts"]
needs_numba = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")

NBITS = 8


def pure_facets(d):
    return st.lists(st.integers(0, (1 << NBITS) - 1).filter(lambda m: bin(m).count("1") == d), min_size=1, max_size=8, unique=True)


facet_sets = st.integers(1, 5).flatmap(pure_facets)


def antichain(facets):
    return [f for f in facets if not any(g != f and f & ~g == 0 for g in facets)]


@pytest.mark.parametrize("name", NAMES)
def test_public_name_bound_to_backend(name):
    assert getattr(kernels, name) is kernels.IMPLEMENTATIONS[kernels.BACKEND][name]


def test_simplex_counts():
    for impl in kernels.IMPLEMENTATIONS.values():
        counts = impl["new_face_counts"](np.array([0b111]), 3)
        assert counts.tolist() == [[1, 3, 3, 1]]


def test_two_triangles_sharing_an_edge():
    facets = np.array([0b0111, 0b1110])
    for impl in kernels.IMPLEMENTATIONS.values():
        fail, restr = impl["shell_orders"](facets, np.array([[0, 1], [1, 0]]))
        assert fail.tolist() == [-1, -1]
        assert restr.tolist() == [[0, 0b1000], [0, 0b0001]]
        assert impl["minimal_nonfaces"](facets, 4).tolist() == [0b1001]


def test_disconnected_pair_fails():
    facets = np.array([0b0011, 0b1100])
    for impl in kernels.IMPLEMENTATIONS.values():
        fail, _ = impl["shell_orders"](facets, np.array([[0, 1]]))
        assert fail.tolist() == [1]


def test_interval_counts():
    for impl in kernels.IMPLEMENTATIONS.values():
        out = impl["interval_cover_counts"](np.array([0, 0b01]), np.array([0b01, 0b11]), 2)
        assert out.tolist() == [1, 2, 0, 1]


@needs_numba
@settings(max_examples=120, deadline=None)
@given(facet_sets, st.randoms(use_true_random=False))
def test_backends_agree(facets, rnd):
    facets = np.array(facets, dtype=np.int64)
    k = len(facets)
    orders = np.array([rnd.sample(range(k), k) for _ in range(6)], dtype=np.int64)
    a, b = kernels.IMPLEMENTATIONS["numpy"], kernels.IMPLEMENTATIONS["numba"]
    fa, ra = a["shell_orders"](facets, orders)
    fb, rb = b["shell_orders"](facets, orders)
    assert (fa == fb).all()
    for t in range(len(orders)):
        stop = fa[t] if fa[t] >= 0 else k
        assert (ra[t, :stop] == rb[t, :stop]).all()
    assert (a["new_face_counts"](facets, NBITS) == b["new_face_counts"](facets, NBITS)).all()
    assert (a["face_table"](facets, NBITS) == b["face_table"](facets, NBITS)).all()
    ac = np.array(antichain(facets.tolist()), dtype=np.int64)
    assert (a["minimal_nonfaces"](ac, NBITS) == b["minimal_nonfaces"](ac, NBITS)).all()
    lows = facets & (facets >> 1)
    assert (a["interval_cover_counts"](lows, facets, NBITS) == b["interval_cover_counts"](lows, facets, NBITS)).all()


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", None)])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, ACTSHELL_DISABLE_JIT=flag)
    out = subprocess.run(
        [sys.executable, "-c", "from actshell import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.strip()
    assert out == (expected or ("numba" if kernels.HAVE_NUMBA else "numpy"))
