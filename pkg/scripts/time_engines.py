"""Wall time of the exact determinant engines on symbol matrices of growing size."""

import argparse
import time

from legdet.arith import primes_between
from legdet.detengine import det_bareiss, det_modular
from legdet.matrixgen import build_numeric, family


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=400)
    ap.add_argument("--bareiss-limit", type=int, default=250, help="skip Bareiss above this p")
    args = ap.parse_args()

    fam = family("j^2+j*k+2*k^2, 2:j+k", "0..(p-1)/2", vars="")
    print(f"{'p':>5} {'size':>5} {'modular s':>10} {'bareiss s':>10} digits")
    for p in primes_between(50, args.max)[::6]:
        m = build_numeric(fam.at(p)).tolist()
        t0 = time.perf_counter()
        d = det_modular(m)
        tm = time.perf_counter() - t0
        tb = float("nan")
        if p <= args.bareiss_limit:
            t0 = time.perf_counter()
            assert det_bareiss(m) == d
            tb = time.perf_counter() - t0
        print(f"{p:>5} {len(m):>5} {tm:>10.3f} {tb:>10.3f} {len(str(abs(d)))}")


if __name__ == "__main__":
    main()
