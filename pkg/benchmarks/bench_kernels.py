"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--max-n 24] [--repeat 3]

Prints kernel micro-benchmarks, then the time to build the point-determining
bipartite table from scratch with each backend.
"""

import argparse
import random
import timeit

from cycleindex import _kernels
from cycleindex.bipartite import BipartitePipeline, table_rows
from cycleindex.partitions import partitions
from cycleindex.powersum import PowerSumPoly


def _random_poly(n, rng, size):
    lams = partitions(n)
    picks = rng.sample(lams, min(size, len(lams)))
    return PowerSumPoly(n, {lam: rng.randint(1, 10**6) for lam in picks})


def micro(repeat):
    rng = random.Random(12345)
    a = _random_poly(12, rng, 60).scaled_terms()
    b = _random_poly(11, rng, 60).scaled_terms()
    mus = [tuple(lam) for lam in partitions(10)]
    cases = {
        "mul_accumulate 60x60": lambda: _kernels.mul_accumulate({}, a, b, 7),
        "add_accumulate 60": lambda: _kernels.add_accumulate(dict(a), b, 3),
        "gcd_cross_sum p(10)^2": lambda: [
            _kernels.gcd_cross_sum(m, n) for m in mus[:20] for n in mus[:20]],
        "gcd_pairwise_sum p(10)": lambda: [_kernels.gcd_pairwise_sum(m) for m in mus],
    }
    out = {}
    for backend in _kernels.available_backends():
        _kernels.use_backend(backend)
        for name, fn in cases.items():
            t = min(timeit.repeat(fn, number=200, repeat=repeat)) / 200
            out[name, backend] = t
    return cases.keys(), out


def pipeline(max_n):
    out = {}
    for backend in _kernels.available_backends():
        _kernels.use_backend(backend)
        t0 = timeit.default_timer()
        rows = table_rows(BipartitePipeline().pbp(), max_n)
        out[backend] = (timeit.default_timer() - t0, rows[-1])
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=24)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is timed")

    names, micro_times = micro(args.repeat)
    print(f"{'kernel':<26}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for name in names:
        row = [micro_times[name, b] for b in backends]
        speed = row[-1] / row[0] if len(row) == 2 else 1.0
        print(f"{name:<26}" + "".join(f"{t * 1e6:>10.1f}us" for t in row) + f"   {speed:6.2f}x")

    res = pipeline(args.max_n)
    print()
    print(f"PBP table to n={args.max_n}, fresh pipeline:")
    for b in backends:
        print(f"  {b:<8} {res[b][0]:8.2f}s")
    if len(backends) == 2:
        assert res["cython"][1] == res["python"][1], "backends disagree"
        print(f"  speedup  {res['python'][0] / res['cython'][0]:8.2f}x  (results identical)")
    _kernels.use_backend(backends[0])


if __name__ == "__main__":
    main()
