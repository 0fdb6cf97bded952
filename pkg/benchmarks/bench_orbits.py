"""Time the compiled and pure-Python orbit kernels on the Berman counts.

    python benchmarks/bench_orbits.py [--max-n 40] [--repeat 3]

Both backends receive identical precomputed inputs (Cayley table, inverse
map, power maps, regularity mask); results are checked for equality.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from coxeterk.groups import (
    A5xC2,
    D,
    DxC2,
    FiniteField,
    Padic,
    RATIONALS,
    cayley,
    galois_subgroup,
    regular_lcm,
)
from coxeterk.numtheory import prime_factors
from coxeterk.orbits import count_fconj_orbits_compiled, count_fconj_orbits_py


def workload(max_n: int) -> list[tuple]:
    groups = [g for n in range(3, max_n + 1) for g in (D(n), DxC2(n))] + [A5xC2]
    jobs = []
    for g in groups:
        data = cayley(g)
        fields = [RATIONALS] + [f(p) for p in prime_factors(g.order) for f in (Padic, FiniteField)]
        for f in fields:
            p = f.characteristic
            m = regular_lcm(g, p)
            exps = sorted(galois_subgroup(f, m).elements) if m > 1 else [1]
            powers = np.stack([data.power_map(t) for t in exps]).astype(np.intc)
            regular = np.array([p == 0 or k % p != 0 for k in data.orders.tolist()], dtype=np.uint8)
            jobs.append((data.mul, data.inv, powers, regular))
    return jobs


def run_compiled(jobs) -> list[int]:
    return [count_fconj_orbits_compiled(*job) for job in jobs]


def run_python(jobs) -> list[int]:
    lists = [(m.tolist(), i.tolist(), p.tolist(), r.tolist()) for m, i, p, r in jobs]
    return [count_fconj_orbits_py(*job) for job in lists]


def best_of(fn, jobs, repeat: int) -> tuple[float, list[int]]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(jobs)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs = workload(args.max_n)
    print(f"{len(jobs)} orbit counts (D_n, D_n x Z_2 for n <= {args.max_n}, A_5 x Z_2)")
    t_py, r_py = best_of(run_python, jobs, args.repeat)
    print(f"python    {t_py:8.3f} s")
    if count_fconj_orbits_compiled is None:
        print("compiled  not built")
        return
    t_c, r_c = best_of(run_compiled, jobs, args.repeat)
    print(f"compiled  {t_c:8.3f} s   speedup x{t_py / t_c:.1f}")
    if r_py != r_c:
        raise SystemExit("backends disagree")
    print("results identical")


if __name__ == "__main__":
    main()
