"""Times the compiled kernels against the pure-Python fallback on the same
workloads and checks that both give identical results.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time
from pathlib import Path

from neutra import enumerate_maps, enumerate_substructures, kernels, minimal_generating_set
from neutra import _kernels_py
from neutra.dsl import parse_workspace

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def structure(fixture, name="M"):
    return parse_workspace((FIXTURES / fixture).read_text()).structure(name)


WORKLOADS = [
    ("substructures, mixed 11", lambda: enumerate_substructures(structure("mixed_subspace.neu"))),
    ("substructures, cube 8", lambda: enumerate_substructures(structure("group_la_generators_z2.neu"))),
    ("generators, Z20 semigroup", lambda: minimal_generating_set(structure("semigroup_generators_z20.neu"))),
    ("generators, +-12", lambda: minimal_generating_set(structure("generators_pm.neu"))),
    ("maps, semila Z4", lambda: enumerate_maps(*[structure("operators/op_10_semila_z4.neu")] * 2)),
]


def _raw_table(n):
    # Z_n addition with every sum allowed: each closed subset is a subgroup
    return [(a + b) % n for a in range(n) for b in range(n)]


def raw_closed_subsets():
    n = 18
    return kernels.closed_subsets(n, [0] * n, 0, _raw_table(n), 1)


def raw_min_generating():
    n = 24
    cover = [1 << v for v in range(n)]
    return kernels.min_generating(n, cover, _raw_table(n), 0, list(range(1, n)), (1 << n) - 1)


WORKLOADS += [
    ("raw closed_subsets, Z18", raw_closed_subsets),
    ("raw min_generating, Z24", raw_min_generating),
]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled kernels not built; run pip install -e . --no-build-isolation")
    compiled = kernels._impl
    print(f"{'workload':28} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for label, fn in WORKLOADS:
        kernels._impl = compiled
        fast, a = timed(fn, args.repeat)
        kernels._impl = _kernels_py
        slow, b = timed(fn, args.repeat)
        kernels._impl = compiled
        if a != b:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:28} {fast * 1e3:9.1f}ms {slow * 1e3:9.1f}ms {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
