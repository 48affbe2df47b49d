"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best wall time per backend and checks that both
backends returned the same answer.
"""

from __future__ import annotations

import argparse
import time

from tdgraph.graph import build_td, build_td_closed, tensor_product
from tdgraph.invariants import clique_loop_number, clique_number, domination_number
from tdgraph.kernels import available_backends, orthogonality_rows
from tdgraph.ring import parse_ring_spec
from tdgraph.vectors import coordinate_table


def _ortho_case(spec: str, n: int):
    r = parse_ring_spec(spec)
    coords = coordinate_table(r, n)
    add, mul = r.tables()
    return lambda impl: orthogonality_rows(coords, add, mul, impl).tobytes()


def _solver_case(solver, builder, spec: str, n: int):
    g = builder(parse_ring_spec(spec), n)
    return lambda impl: solver(g, impl=impl).value


def _tensor_domination(a: str, n: int, b: str, m: int):
    g = tensor_product(build_td(parse_ring_spec(a), n), build_td(parse_ring_spec(b), m))
    return lambda impl: domination_number(g, impl=impl).value


CASES = [
    ("orthogonality Z5^4", _ortho_case("Z5", 4)),
    ("orthogonality Z2xZ3^3", _ortho_case("Z2xZ3", 3)),
    ("orthogonality GF(9)^3", _ortho_case("GF(9)", 3)),
    ("domination TD(Z3,3)", _solver_case(domination_number, build_td, "Z3", 3)),
    ("domination TD(GF(4),3)", _solver_case(domination_number, build_td, "GF(4)", 3)),
    ("domination TD(Z6,2)", _solver_case(domination_number, build_td, "Z6", 2)),
    ("domination TD(Z2,3)xTD(Z3,2)", _tensor_domination("Z2", 3, "Z3", 2)),
    ("domination TD(Z2,3)xTD(Z2,3)", _tensor_domination("Z2", 3, "Z2", 3)),
    ("clique TD(Z5,3)", _solver_case(clique_number, build_td, "Z5", 3)),
    ("clique TD(Z2,5)", _solver_case(clique_number, build_td, "Z2", 5)),
    ("clique-loop TDbar(Z5,3)", _solver_case(clique_loop_number, build_td_closed, "Z5", 3)),
]


def best_time(fn, impl, repeat: int):
    result, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available")
    names = list(backends)
    print(f"{'case':32}" + "".join(f"{n + ' ms':>14}" for n in names) + f"{'speedup':>10}  agree")
    mismatches = 0
    for label, fn in CASES:
        results, times = [], []
        for name in names:
            res, t = best_time(fn, backends[name], args.repeat)
            results.append(res)
            times.append(t)
        agree = all(r == results[0] for r in results)
        mismatches += not agree
        speedup = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
        print(f"{label:32}" + "".join(f"{t * 1000:14.2f}" for t in times) + f"{speedup:>10}  {agree}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
