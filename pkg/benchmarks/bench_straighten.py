"""Time the compiled and pure-Python straightening kernels on the same columns.

    python benchmarks/bench_straighten.py [--repeat 3] [--quick]

Each run uses a fresh straightener so no cache is shared between kernels.
"""

import argparse
import statistics
import time

from qfock import _straighten_py
from qfock.charge import beta_numbers, enumerate_multipartitions, tau_inv

try:
    from qfock import _straighten as _compiled
except ImportError:  # extension not built
    _compiled = None

CASES = [
    # (n, l, charge, m)
    (3, 2, (1, 0), 3),
    (3, 2, (4, -3), 3),
    (2, 2, (-4, 4), 4),
    (2, 3, (1, -2, 1), 4),
    (3, 3, (-4, 0, 4), 4),
]


def reversed_words(n, l, mc, m):
    out = []
    for mp in enumerate_multipartitions(l, m, mc, n):
        lam, s = tau_inv(mp, mc, n)
        out.append(tuple(reversed(beta_numbers(lam, s, lam.size()).values)))
    return out


def run_kernel(kernel, n, l, words):
    st = kernel.Straightener(n, l)
    t = time.perf_counter()
    results = [st.straighten(w) for w in words]
    return time.perf_counter() - t, results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the largest case")
    args = ap.parse_args()
    cases = CASES[:-1] if args.quick else CASES
    kernels = [("python", _straighten_py)] + ([("cython", _compiled)] if _compiled else [])
    print(f"{'case':<28}{'words':>6}" + "".join(f"{name:>12}" for name, _ in kernels) + f"{'speedup':>10}")
    for n, l, mc, m in cases:
        words = reversed_words(n, l, mc, m)
        medians, outputs = [], []
        for _, kernel in kernels:
            times = []
            for _ in range(args.repeat):
                dt, res = run_kernel(kernel, n, l, words)
                times.append(dt)
            medians.append(statistics.median(times))
            outputs.append(res)
        if len(outputs) == 2:
            assert outputs[0] == outputs[1], "kernels disagree"
        label = f"n={n} l={l} s={','.join(map(str, mc))} m={m}"
        speed = f"{medians[0] / medians[1]:.1f}x" if len(medians) == 2 else "-"
        print(f"{label:<28}{len(words):>6}" + "".join(f"{t:>11.3f}s" for t in medians) + f"{speed:>10}")


if __name__ == "__main__":
    main()
