"""Numba loops vs numpy fallbacks on random type C meanders.

    python benchmarks/bench_kernels.py --sizes 100 1000 100000 --repeat 20

Run with SEAWEED_NUMBA=0 to time only the fallbacks.
"""

from __future__ import annotations

import argparse
import random
import timeit

import numpy as np

from seaweed import kernels
from seaweed._accel import backend
from seaweed.compositions import random_composition

PAIRS = [
    ("partner_map", kernels.partner_map_loop, kernels.partner_map_numpy),
    ("sigma_stats", kernels.sigma_stats_loop, kernels.sigma_stats_numpy),
    ("components", kernels.components_loop, kernels.components_numpy),
]


def make_case(rng: random.Random, n: int):
    a = kernels.as_array(random_composition(rng, rng.randint(n // 2, n)))
    b = kernels.as_array(random_composition(rng, rng.randint(n // 2, n)))
    top = kernels.partner_map_numpy(a, n)
    bottom = kernels.partner_map_numpy(b, n)
    tail = kernels.tail_mask(n, int(a.sum()), int(b.sum()))
    return {"partner_map": (a, n), "sigma_stats": (top, bottom, tail), "components": (top, bottom, tail)}


def same(x, y) -> bool:
    if isinstance(x, tuple):
        return all(np.array_equal(u, v) for u, v in zip(x, y))
    return np.array_equal(x, y)


def best_of(fn, args, repeat: int) -> float:
    fn(*args)  # warm up / compile
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10000, 100000])
    p.add_argument("--repeat", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"backend: {backend()}")
    print(f"{'kernel':<12} {'n':>8} {'loop ms':>10} {'numpy ms':>10} {'ratio':>7}")
    for n in args.sizes:
        case = make_case(rng, n)
        for name, loop, vec in PAIRS:
            assert same(loop(*case[name]), vec(*case[name])), name
            t_loop = best_of(loop, case[name], args.repeat)
            t_vec = best_of(vec, case[name], args.repeat)
            print(f"{name:<12} {n:>8} {1e3 * t_loop:>10.3f} {1e3 * t_vec:>10.3f} {t_vec / t_loop:>7.1f}")


if __name__ == "__main__":
    main()
