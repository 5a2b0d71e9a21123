"""Time the numba and numpy kernel backends on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is called once untimed (JIT warm-up), then timed ``repeat`` times;
the best time is reported. Outputs of the two backends are compared as well.
"""

import argparse
import time

import numpy as np

from actshell import kernels
from actshell.activity import activities
from actshell.complexes import _base_of_cone, external_activity_complex
from actshell.matroid import uniform
from actshell.orders import build_poset, sample_linear_extensions


def cases():
    M = uniform(10, 5)
    act = external_activity_complex(M)
    facets = np.array(act.facets, dtype=np.int64)
    orders = np.array(sample_linear_extensions(build_poset(M, "extint"), 200, seed=0), dtype=np.int64)
    dense, squashed, _ = _base_of_cone(act)
    small = uniform(8, 4)
    _, sq_small, _ = _base_of_cone(external_activity_complex(small))
    acts = activities(uniform(12, 6))
    lows = np.array([a.basis & ~a.ia for a in acts], dtype=np.int64)
    highs = np.array([a.basis | a.ea for a in acts], dtype=np.int64)
    return [
        ("shell_orders  U(10,5), 200 orders", "shell_orders", (facets, orders)),
        ("new_face_counts  reduced Act U(10,5)", "new_face_counts", (squashed, dense.size)),
        ("minimal_nonfaces  reduced Act U(8,4)", "minimal_nonfaces", (sq_small, 12)),
        ("interval_cover_counts  U(12,6)", "interval_cover_counts", (lows, highs, 12)),
    ]


def best_of(fn, args, repeat):
    out = fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        print("numba is not installed; only the numpy backend is available")
    backends = [b for b in ("numpy", "numba") if b == "numpy" or kernels.HAVE_NUMBA]
    print(f"{'case':42s}" + "".join(f"{b:>12s}" for b in backends) + "   agree")
    for label, name, inputs in cases():
        times, outs = [], []
        for b in backends:
            dt, out = best_of(kernels.IMPLEMENTATIONS[b][name], inputs, args.repeat)
            times.append(dt)
            outs.append(out)
        agree = all(same(outs[0], o) for o in outs[1:])
        print(f"{label:42s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + f"   {agree}")


if __name__ == "__main__":
    main()
