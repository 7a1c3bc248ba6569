"""Recompute every worked example and print the tables next to the stored ones."""

import argparse

from koszultail.fixtures import (
    EXAMPLE1_BETTI,
    EXAMPLE3_BETTI,
    PAIR_BETTI,
    ideal_fixture,
    load_fixture,
)
from koszultail.geometry import artinian_reduction
from koszultail.groebner import ArtinianAlgebra, buchberger
from koszultail.invariants import BettiTable, betti_table, detect_koszul_tails, euler_check
from koszultail.lefschetz import verify_example2, wlp


def show(title, A, expected=None, seed=0):
    B = betti_table(A)
    print(f"== {title}")
    print(f"h-vector: {list(A.h_vector)}")
    print(B.render())
    print(f"Koszul tails: {detect_koszul_tails(B).describe()}")
    print(f"WLP: {wlp(A, seed=seed).verdict}   Euler check: {euler_check(B, A.h_vector)}")
    if expected is not None:
        want = BettiTable.from_rows(A.n_vars, expected)
        print("matches stored table" if B == want else "DIFFERS from stored table:\n" + want.render())
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    show("example1 X", artinian_reduction(load_fixture("example1"), args.seed), EXAMPLE1_BETTI, args.seed)
    show("example1 X_f", artinian_reduction(load_fixture("example1_Xf"), args.seed), seed=args.seed)
    show("example3", artinian_reduction(load_fixture("example3"), args.seed), EXAMPLE3_BETTI, args.seed)
    for name in ("pair_wlp_ideal", "pair_failwlp_ideal"):
        names, gens = ideal_fixture(name)
        show(name, ArtinianAlgebra(buchberger(gens, n_vars=len(names))), PAIR_BETTI, args.seed)
    print("== example2")
    print(verify_example2(seed=args.seed).render())


if __name__ == "__main__":
    main()
