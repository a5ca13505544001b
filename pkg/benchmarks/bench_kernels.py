"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs under both backends; the results are checked equal
before timings are reported.
"""

import argparse
import statistics
import time

import numpy as np

from levelscope import kernels
from levelscope.curves import homogenize, random_curve
from levelscope.level import level_chain
from levelscope.multipoly import mul, parse_poly, power

QUINTIC = "y^2*z^3 - x^5 - 2*z^5"


def _mul():
    f = power(parse_poly("x + 2*y + 3*z + 5", 101), 30)
    g = power(parse_poly("x - y + 7*z - 1", 101), 30)
    return mul(f, g)


def _power():
    return power(parse_poly("x^2 + 3*x*y - y^2 + x*z + 2*z^2", 13), 12 * 13 + 12)


def _rref():
    rng = np.random.default_rng(0)
    rows = rng.integers(0, 10007, size=(180, 240)).tolist()
    return kernels.rref(rows, 10007)


def _level_quintic():
    return level_chain(parse_poly(QUINTIC, 13)).level


def _level_genus4():
    return level_chain(homogenize(random_curve(4, 31, 1))).level


WORKLOADS = [
    ("poly mul, 2 x 5456 terms", _mul),
    ("power, degree 336", _power),
    ("rref 180 x 240 mod 10007", _rref),
    ("level chain, quintic p=13", _level_quintic),
    ("level chain, genus 4 p=31", _level_genus4),
]


def timed(fn, repeat):
    out, times = None, []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    start = kernels.BACKEND
    print(f"{'workload':<30} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    try:
        for name, fn in WORKLOADS:
            results, times = [], []
            for b in backends:
                kernels.set_backend(b)
                out, t = timed(fn, args.repeat)
                results.append(out)
                times.append(t)
            if any(r != results[0] for r in results[1:]):
                raise SystemExit(f"backends disagree on {name}")
            speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
            print(f"{name:<30} " + " ".join(f"{t * 1000:>8.1f}ms" for t in times) + f"  {speed}")
    finally:
        kernels.set_backend(start)


if __name__ == "__main__":
    main()
