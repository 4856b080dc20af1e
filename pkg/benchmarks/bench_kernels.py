"""Compare the compiled and pure-Python GF(2) kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints the best-of-N wall time per case for each available backend and the
speedup of the compiled one. Both backends must return identical results;
the script checks that before timing.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from embedcert import _backend
from embedcert.complex import SimplicialComplex, from_facets
from embedcert.cycles import cycle_basis


def _random_basis(rng: random.Random, r: int, ncols: int) -> list[int]:
    return [rng.getrandbits(ncols) | (1 << i) for i in range(r)]


def kernel_cases(quick: bool):
    rng = random.Random(12345)
    sizes = [(14, 64), (18, 256)] if quick else [(16, 64), (20, 256), (22, 128)]
    for r, ncols in sizes:
        basis = _random_basis(rng, r, ncols)
        yield f"gray walk r={r} cols={ncols}", lambda k, b=basis, n=ncols: k.min_weight_combination(b, n, 0)
    for nrows, ncols in ([(200, 200)] if quick else [(300, 300), (800, 1200)]):
        rows = [rng.getrandbits(ncols) for _ in range(nrows)]
        yield f"rref {nrows}x{ncols}", lambda k, x=rows, n=ncols: k.rref(x, n)


def random_cubic_graph(n: int, seed: int) -> SimplicialComplex:
    """Simple 3-regular graph from the pairing model (retry until simple)."""
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = {tuple(sorted(stubs[i:i + 2])) for i in range(0, len(stubs), 2)}
        if len(edges) == 3 * n // 2 and all(u != v for u, v in edges):
            return from_facets([[str(u), str(v)] for u, v in sorted(edges)])


def girth_cases(quick: bool):
    # full walk over a real cycle space (stop_at=0 disables the early exit, as
    # happens whenever the girth sits above the verified lower bound)
    sizes = [28, 32] if quick else [32, 36, 40]
    for n in sizes:
        cx = random_cubic_graph(n, seed=n)
        basis = [b.bits for b in cycle_basis(cx)]
        nedges = cx.f(1)
        yield (f"cycle space cubic n={n} (r={len(basis)})",
               lambda k, b=basis, m=nedges: k.min_weight_combination(b, m, 0))


def best_time(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller sizes for a fast smoke run")
    args = ap.parse_args(argv)

    backends = _backend.available()
    if _backend.compiled_kernels is None:
        print("note: compiled backend not built; timing the Python fallback only", file=sys.stderr)
    names = [k.NAME for k in backends]
    header = f"{'case':<36}" + "".join(f"{n + ' (s)':>14}" for n in names)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in [*kernel_cases(args.quick), *girth_cases(args.quick)]:
        results = [fn(k) for k in backends]
        if any(r != results[0] for r in results):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        times = [best_time(lambda k=k: fn(k), args.repeat) for k in backends]
        line = f"{label:<36}" + "".join(f"{t:>14.4f}" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
