"""Benchmark the pure-Python search kernels against the compiled ones.

Usage: python benchmarks/bench_kernels.py [repeats]

Times the three hot paths on representative instances: exact minimum
submodule covers, maximal-submodule enumeration (invariant cores), and
punctured coset search.  The same module-level searches run through both
backends and must return identical results.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from covercalc import _kernels, oracle, parser  # noqa: E402

INSTANCES = [
    ("sigma  (Z/2)^6", "Z: R/(2)^6", "sigma"),
    ("sigma  (Z/3)^4", "Z: R/(3)^4", "sigma"),
    ("sigma  (Z/7)^2 x Z/4", "Z: R/(7)^2 + R/(4)", "sigma"),
    ("sigma  Z/64 + Z/64", "Z: R/(64) + R/(64)", "sigma"),
    ("sigma  F4 plane (F_2[t])", "Fp[t] p=2: R/(t^2+t+1)^2", "sigma"),
    ("phi    Z/24", "Z: R/(24)", "phi"),
    ("phi    (Z/2)^3 x Z/3", "Z: R/(2)^3 + R/(3)", "phi"),
    ("phi    (Z[i]/(1+i))^5", "Zi: R/(1+i)^5", "phi"),
]


def run_instance(spec, mode, max_size=4096):
    d = parser.parse_spec(spec)[1]
    mod = oracle.materialize(d, max_size=max_size)
    if mode == "sigma":
        return oracle.min_submodule_cover(mod, max_size=max_size)[0]
    return oracle.min_coset_cover_punctured(mod, 0, max_size=max_size)[0]


def bench(backend_name, repeats):
    os.environ["COVERCALC_KERNEL"] = backend_name
    # rebind the kernel functions the oracle uses
    import importlib
    import covercalc._kernels as k
    importlib.reload(k)
    import covercalc.oracle as o
    importlib.reload(o)
    results = {}
    for label, spec, mode in INSTANCES:
        d = parser.parse_spec(spec)[1]
        mod = o.materialize(d)
        best = None
        value = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            if mode == "sigma":
                value = o.min_submodule_cover(mod)[0]
            else:
                value = o.min_coset_cover_punctured(mod, 0, max_size=mod.size)[0]
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        results[label] = (value, best)
    return results


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    try:
        _kernels.load("c")
        backends = ["pure", "c"]
    except Exception:
        print("compiled kernel unavailable; benchmarking pure only")
        backends = ["pure"]
    all_results = {b: bench(b, repeats) for b in backends}
    width = max(len(label) for label, _, _ in INSTANCES)
    header = f"{'instance':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for label, _, _ in INSTANCES:
        vals = [all_results[b][label] for b in backends]
        answers = {v[0] for v in vals}
        assert len(answers) == 1, f"backends disagree on {label}: {vals}"
        row = f"{label:<{width}}  " + "  ".join(f"{v[1] * 1000:>8.2f}ms" for v in vals)
        if len(backends) == 2:
            row += f"  {vals[0][1] / vals[1][1]:>7.1f}x"
        print(row + f"   (answer: {vals[0][0]})")


if __name__ == "__main__":
    main()
