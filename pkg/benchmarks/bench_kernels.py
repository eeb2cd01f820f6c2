"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--scale 1.0]

Each case is run on both backends, the results are checked for equality and
the best wall time of ``--repeat`` runs is printed with the speedup.
"""
import argparse
import time

import numpy as np

from listupdate import kernels
from listupdate.adversary import CruelSpec, cruel_mfm


def cases(scale):
    rng = np.random.default_rng(0)
    n = int(200_000 * scale)
    l = 64
    cruel = [x - 1 for x in cruel_mfm(CruelSpec(l, max(1, n // (l // 2 + 1))))]
    zipf_w = np.arange(1, 257, dtype=float) ** -1.1
    zipf = rng.choice(256, size=n, p=zipf_w / zipf_w.sum()).tolist()
    words = rng.zipf(1.3, size=n)
    words = (words[words < 5000] - 1).tolist()
    perm = rng.permutation(n).tolist()
    return [
        ("mfm cruel l=64", lambda b: kernels.serve(list(range(l)), cruel, kernels.MFM, backend=b)),
        ("mtf bytes zipf", lambda b: kernels.serve(list(range(256)), zipf, kernels.MTF, backend=b)),
        ("fc bytes zipf", lambda b: kernels.serve(list(range(256)), zipf, kernels.FC, backend=b)),
        ("mtp8 bytes zipf", lambda b: kernels.serve(list(range(256)), zipf, kernels.MTP, 8, backend=b)),
        ("mfm words dynamic", lambda b: kernels.serve([], words, kernels.MFM, dynamic=True, backend=b)),
        ("inversions", lambda b: kernels.count_inversions(perm, backend=b)),
    ]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", type=float, default=1.0)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'case':<20} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in cases(args.scale):
        tp, rp = best_of(lambda: fn("python"), args.repeat)
        tc, rc = best_of(lambda: fn("compiled"), args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<20} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
