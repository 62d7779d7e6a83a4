"""Compare the compiled kernels with the pure-Python fallback.

Run ``python3 benchmarks/bench_kernels.py [--repeat N]``. Each workload is
timed with both backends on identical inputs, and the outputs are checked
to be equal before any timing is reported.
"""

import argparse
import random
import timeit

from gmpy2 import mpq

from antibracket._kernels import compiled_kernels, python_kernels


def random_poly(rng, nvars, terms, degree):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, degree) for _ in range(nvars))
        out[e] = out.get(e, 0) + mpq(rng.randint(-9, 9), rng.randint(1, 5))
    return {e: c for e, c in out.items() if c}


def random_superpoly(rng, nodd, nvars, masks, terms, degree):
    return {rng.randrange(1 << nodd): random_poly(rng, nvars, terms, degree) for _ in range(masks)}


def random_rows(rng, count, ncols, density):
    rows = []
    for _ in range(count):
        row = {c: mpq(rng.randint(-5, 5), rng.randint(1, 3)) for c in rng.sample(range(ncols), density)}
        rows.append({c: v for c, v in row.items() if v})
    return rows


def workloads(seed):
    rng = random.Random(seed)
    a = random_poly(rng, 3, 40, 6)
    b = random_poly(rng, 3, 40, 6)
    sa = random_superpoly(rng, 4, 2, 8, 12, 5)
    sb = random_superpoly(rng, 4, 2, 8, 12, 5)
    ua = [mpq(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(60)]
    ub = [mpq(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(60)]
    rows = random_rows(rng, 120, 100, 12)
    masks = [(rng.randrange(1 << 20), rng.randrange(1 << 20)) for _ in range(2000)]

    def signs(k):
        return [k.grassmann_sign(x, y) for x, y in masks]

    def eliminate(k):
        pivots = {}
        for r in rows:
            k.insert_row(r, pivots)
        return sorted(pivots)

    return {
        "grassmann_sign x2000": signs,
        "poly_mul 40x40 terms": lambda k: k.poly_mul(a, b),
        "superpoly_mul 8x8 masks": lambda k: k.superpoly_mul(sa, sb),
        "upoly_mul 60x60 dense": lambda k: k.upoly_mul(ua, ub),
        "row reduction 120x100": eliminate,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)
    if compiled_kernels is None:
        print("compiled kernels are not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'workload':28s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in workloads(args.seed).items():
        if fn(python_kernels) != fn(compiled_kernels):
            raise SystemExit(f"backends disagree on {name}")
        tp = min(timeit.repeat(lambda: fn(python_kernels), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: fn(compiled_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:28s} {tp:10.3f} {tc:12.3f} {tp / tc:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
