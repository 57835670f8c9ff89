"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical histograms; the script prints the
time per backend and the speedup.
"""
from __future__ import annotations

import argparse
import time

from repzeta import counting, kernels, schemes
from repzeta.counting import Alt, Mat, Sym, space_template

WORKLOADS = [
    ("Mat(3) mod 2", lambda: (space_template(Mat(3)), 9, 2, 1, False)),
    ("Sym(3) mod 3", lambda: (space_template(Sym(3)), 6, 3, 1, False)),
    ("Alt(4) mod 4", lambda: (space_template(Alt(4)), 6, 2, 2, False)),
    ("G_2 types mod 9", lambda: (counting.commutator_template(schemes.G(2)), 4, 3, 2, True)),
    ("F_{2,0} types mod 9", lambda: (counting.commutator_template(schemes.F(2, 0)), 6, 3, 2, True)),
]


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'workload':24s} {'vectors':>10s} " + " ".join(f"{b:>10s}" for b in backends) + "    speedup")
    for name, make in WORKLOADS:
        template, d, p, N, prim = make()
        results = {}
        for b in backends:
            results[b] = _time(lambda b=b: kernels.tally_types(template, d, p, N, primitive=prim, backend=b),
                               args.repeat)
        hists = [h for _, h in results.values()]
        if any(h != hists[0] for h in hists):
            raise SystemExit(f"backends disagree on {name}")
        times = [results[b][0] for b in backends]
        speed = f"{times[1] / times[0]:9.1f}x" if len(times) == 2 else "        -"
        print(f"{name:24s} {kernels.work(d, p, N, primitive=prim):10d} "
              + " ".join(f"{t:9.4f}s" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
