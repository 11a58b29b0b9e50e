"""Compare the compiled kernels with the numpy fallback on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends get identical inputs; results are checked for equality before timing.
"""
import argparse
import timeit

import numpy as np

from findual import kernels
from findual.dlattice import from_upsets
from findual.freedl import generate_free
from findual.modal import RelSpace, algebra_from_space
from findual.poset import random_poset
from findual.tense import tense_from_space


def workloads():
    rng = np.random.default_rng(1)
    free4, _ = generate_free(4)
    ups = from_upsets(random_poset(rng, 9, density=0.2))
    space = RelSpace(rng.random((12, 12)) < 0.3)
    small = RelSpace(rng.random((8, 8)) < 0.3)
    alg = algebra_from_space(small)
    tense = tense_from_space(space)
    arrow = kernels.residual_table(free4.meet, free4.join, free4.leq, free4.bottom)
    return [
        ("box_table (12 worlds)", "box_table",
         (np.asarray(space.succ, dtype=np.int64), space.size)),
        (f"tables_from_masks ({ups.size} sets)", "tables_from_masks",
         (np.asarray(ups.sets, dtype=np.uint64),)),
        ("residual_table (free lattice, 168)", "residual_table",
         (free4.meet, free4.join, free4.leq, free4.bottom)),
        ("residuation_violation (168)", "residuation_violation", (free4.meet, free4.leq, arrow)),
        ("distributivity_violation (168)", "distributivity_violation", (free4.meet, free4.join)),
        ("box_meet_violation (256)", "box_meet_violation", (np.asarray(alg.box), alg.base.meet)),
        ("conjugate_violation (12 worlds)", "conjugate_violation",
         (np.asarray(tense.box_f), np.asarray(tense.box_p), space.size)),
    ]


def _equal(a, b):
    if isinstance(a, tuple) and a and isinstance(a[0], np.ndarray):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    impls = kernels.implementations()
    if "cython" not in impls:
        print("compiled extension not built; only the fallback is available")
    names = list(impls)
    print(f"{'kernel':40}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn, fargs in workloads():
        results = [getattr(impls[n], fn)(*fargs) for n in names]
        if not all(_equal(results[0], r) for r in results[1:]):
            raise SystemExit(f"{label}: backends disagree")
        times = []
        for n in names:
            f = getattr(impls[n], fn)
            number = 1
            while timeit.timeit(lambda: f(*fargs), number=number) < 0.05:
                number *= 4
            best = min(timeit.repeat(lambda: f(*fargs), number=number, repeat=args.repeat))
            times.append(best / number)
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:40}" + "".join(f"{t * 1e3:10.3f}ms" for t in times) + f" {speed}")


if __name__ == "__main__":
    main()
