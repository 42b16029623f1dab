"""Compare the compiled and pure-Python subset-search kernels.

    python3 benchmarks/bench_kernels.py [--arity 4 8 12 16] [--repeat 5]

Each case is a random Boolean firing table of the given arity plus a
random actual input row; the timed call is ``minimal_sufficient``.
"""

import argparse
import random
import timeit

from ncause import kernels


def case(k, rng):
    # mostly-true table so there are sizeable implicants to find
    table = kernels.as_table([0 if rng.random() < 0.1 else 1 for _ in range(2 ** k)])
    actual = [rng.randrange(2) for _ in range(k)]
    target = table[int("".join(map(str, actual)), 2)] if k else table[0]
    return table, actual, target


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arity", type=int, nargs="+", default=[4, 8, 12, 16])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = sorted(kernels.BACKENDS)
    if "fast" not in backends:
        print("compiled kernel not built; only the pure backend is available")
    print(f"{'arity':>5}  " + "  ".join(f"{b:>12}" for b in backends) + "   speedup")
    before = kernels.backend()
    try:
        for k in args.arity:
            table, actual, target = case(k, random.Random(args.seed + k))
            best = {}
            results = {}
            for b in backends:
                mod = kernels.BACKENDS[b]
                fn = lambda: mod.minimal_sufficient(table, actual, 2, target)
                results[b] = fn()
                n = 1 if k >= 14 and b == "pure" else 3
                best[b] = min(timeit.repeat(fn, number=n, repeat=args.repeat)) / n
            assert len({tuple(r) for r in results.values()}) == 1, "backends disagree"
            speed = (best["pure"] / best["fast"]) if "fast" in best else float("nan")
            cells = "  ".join(f"{best[b] * 1e3:10.3f}ms" for b in backends)
            print(f"{k:>5}  {cells}   {speed:7.1f}x")
    finally:
        kernels.use_backend(before)


if __name__ == "__main__":
    main()
