"""Compare the compiled and pure-Python packing kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]

Each workload is run through ``kappa3`` with each available backend; the
results must agree, and the best wall time over the repeats is reported.
"""

from __future__ import annotations

import argparse
import random
import time

from treeconn import _kernel
from treeconn.constructions import build_h, figure_fixture, smooth_many
from treeconn.packing import kappa3
from treeconn.sampling import connected_sample


def workloads():
    yield "figures 1-6", [figure_fixture(i) for i in range(1, 7)]
    yield "H(3)", [build_h(3)]
    yield "H(4)", [build_h(4)]
    yield "H(4) smoothed x2", [smooth_many(build_h(4), 2)]
    yield "40 random n<=9", connected_sample(random.Random(1), 40, (6, 9), (0.3, 0.5, 0.7))


def run(graphs, backend):
    return [kappa3(g, backend=backend).kappa for g in graphs]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = ["python"] + (["cython"] if _kernel.compiled_pack is not None else [])
    print(f"{'workload':<20}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for name, graphs in workloads():
        times, answers = {}, {}
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                answers[b] = run(graphs, b)
                best = min(best, time.perf_counter() - t0)
            times[b] = best
        if len({tuple(a) for a in answers.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree: {answers}")
        speed = f"{times['python'] / times['cython']:10.1f}x" if "cython" in times else "         -"
        print(f"{name:<20}" + "".join(f"{times[b]:11.3f}s" for b in backends) + speed)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
