"""Random Artinian quotients of K[x, y]: count how many fail WLP (expected: none)."""

import argparse
from collections import Counter

import numpy as np

from koszultail.groebner import ArtinianAlgebra, buchberger
from koszultail.lefschetz import wlp
from koszultail.polyring import Polynomial


def random_algebra(rng, max_deg):
    gens = []
    for _ in range(int(rng.integers(2, 5))):
        d = int(rng.integers(1, max_deg + 1))
        gens.append(Polynomial(2, {(d - i, i): int(rng.integers(0, 32003)) for i in range(d + 1)}))
    gb = buchberger(gens, n_vars=2)
    return ArtinianAlgebra(gb) if gb.is_artinian() else None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-deg", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    verdicts, socles = Counter(), Counter()
    done = 0
    while done < args.count:
        A = random_algebra(rng, args.max_deg)
        if A is None:
            continue
        done += 1
        verdicts[wlp(A, seed=done).verdict] += 1
        socles[A.socle_degree] += 1
    print(f"{done} algebras: {dict(verdicts)}")
    print("socle degrees:", dict(sorted(socles.items())))


if __name__ == "__main__":
    main()
