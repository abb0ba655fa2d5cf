"""Compare the compiled and pure-Python kernels on twisted-class computations.

    python3 benchmarks/bench_kernels.py [--cases D7:flip E6:delta0] [--repeat 3]
"""

import argparse
import time

import numpy as np

from weyltwist import build_root_system, enumerate_weyl, resolve_automorphism
from weyltwist.kernels import load_backend


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", nargs="+", default=["E6:delta0", "D6:flip", "D7:flip", "B7:id"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {}
    for name in ("cython", "python"):
        try:
            backends[name] = load_backend(name)
        except ImportError:
            print(f"{name} backend unavailable, skipping")

    print(f"{'case':<14}{'|W|':>9}  {'backend':<8}{'orbits s':>10}{'stats s':>10}")
    for case in args.cases:
        name, sel = case.split(":")
        rs = build_root_system(name)
        g = enumerate_weyl(rs)
        twist = resolve_automorphism(rs, sel).zero_based
        results = {}
        for bname, mod in backends.items():
            t_orb, (labels, n) = best_of(lambda: mod.twisted_orbit_labels(g.left, g.right, twist), args.repeat)
            t_st, stats = best_of(lambda: mod.class_statistics(labels, g.lengths, n), args.repeat)
            results[bname] = (labels, stats)
            print(f"{case:<14}{len(g):>9}  {bname:<8}{t_orb:>10.4f}{t_st:>10.4f}")
        if len(results) == 2:
            (la, sa), (lb, sb) = results.values()
            same = np.array_equal(la, lb) and all(np.array_equal(x, y) for x, y in zip(sa, sb))
            print(f"{'':<14}{'':>9}  backends agree: {same}")


if __name__ == "__main__":
    main()
