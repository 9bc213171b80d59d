"""Compare the compiled and pure-Python nested-sum kernels.

    python3 benchmarks/bench_kernels.py [--N 100000] [--repeat 3]
"""
import argparse
import timeit

from mzcycles import _kernels_py

try:
    from mzcycles import _kernels
except ImportError:
    _kernels = None

CASES = [((2,), (1.0,)), ((2, 1), (1.0, 1.0)), ((2, 1, 1), (0.5, 1.0, 1.0))]


def main(argv=None):
    p = argparse.ArgumentParser()
    p.add_argument("--N", type=int, default=100_000)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    cps = [args.N // 4, args.N // 2, args.N]
    print(f"{'ks':12} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for ks, zs in CASES:
        py = min(timeit.repeat(lambda: _kernels_py.li_checkpoints(ks, zs, args.N, cps), number=1,
                               repeat=args.repeat))
        if _kernels is None:
            print(f"{str(ks):12} {py:10.4f} {'n/a':>11} {'n/a':>8}")
            continue
        cy = min(timeit.repeat(lambda: _kernels.li_checkpoints(ks, zs, args.N, cps), number=1,
                               repeat=args.repeat))
        a = _kernels_py.li_checkpoints(ks, zs, args.N, cps)[-1]
        b = _kernels.li_checkpoints(ks, zs, args.N, cps)[-1]
        assert abs(a - b) < 1e-12, (a, b)
        print(f"{str(ks):12} {py:10.4f} {cy:11.5f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
