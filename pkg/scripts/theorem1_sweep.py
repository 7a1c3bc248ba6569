"""Sweep the all-but-one construction over (n, d) and seeds; print one line per run."""

import argparse
import time

from koszultail.lefschetz import TheoremViolation, verify_theorem1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--d", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--trials", type=int, default=3)
    args = ap.parse_args()

    print(f"{'n':>2} {'d':>2} {'seed':>4} {'points':>6} {'dims':>10} {'verdict':>9} {'secs':>6}")
    bad = 0
    for n in args.n:
        for d in args.d:
            for seed in range(args.seeds):
                t0 = time.perf_counter()
                try:
                    rec = verify_theorem1(n, d, seed, args.trials)
                    verdict, pts, dims = "ok", rec.sizes["total"], f"{rec.dims[0]},{rec.dims[1]}"
                except TheoremViolation as exc:
                    bad += 1
                    verdict, pts, dims = "VIOLATION", "-", "-"
                    print(exc)
                print(f"{n:>2} {d:>2} {seed:>4} {pts:>6} {dims:>10} {verdict:>9} {time.perf_counter() - t0:6.2f}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
