"""Compare compiled and pure-Python canonical-signature kernels.

    python3 benchmarks/bench_kernels.py [--points 6] [--repeat 3]

Times the census minimisation (order code plus temperature codes for every
poset of the given size) with each backend and checks they agree.
"""

import argparse
import statistics
import time

from tempered_kit import _pykernels
from tempered_kit.census import _natural_posets, _up_from_down


def _run(mod, posets, n):
    out = []
    for up in posets:
        a, perms = mod.minimal_order_code(n, up)
        out.append((a, tuple(sorted(set(mod.minimal_temperature_codes(n, perms))))))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.points
    posets = [_up_from_down(d) for d in _natural_posets(n)]
    backends = [("python", _pykernels)]
    try:
        from tempered_kit import _ckernels

        backends.append(("cython", _ckernels))
    except ImportError:
        print("compiled kernels not built; timing Python only")
    results = {}
    for name, mod in backends:
        times = []
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            results[name] = _run(mod, posets, n)
            times.append(time.perf_counter() - t0)
        print(f"{name:>7}: {len(posets)} labelled posets, n={n}, median {statistics.median(times):.3f}s")
    if len(results) == 2:
        assert results["python"] == results["cython"], "backends disagree"
        print("backends agree")


if __name__ == "__main__":
    main()
