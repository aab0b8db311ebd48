"""Time direct evaluation against the matrix path on random coverings.

    python scripts/matrix_benchmark.py --sizes 50 100 200 --members 10 --lattice lukasiewicz
"""

import argparse
import time

import numpy as np

from lrough.approx import OPERATORS
from lrough.covering import max_beta, validate_covering
from lrough.fuzzy_set import FuzzySet, Universe
from lrough.io import parse_lattice_arg
from lrough.lmatrix import approx_via_matrix


def random_instance(rng, L, n, m):
    U = Universe(tuple(f"x{i}" for i in range(1, n + 1)))
    draw = (lambda: tuple(int(v) for v in rng.integers(0, len(L), n))) if L.is_finite else \
        (lambda: tuple(float(v) for v in rng.random(n)))
    members = [FuzzySet(U, L, draw()) for _ in range(m)]
    members.append(FuzzySet(U, L, (L.top,) * n))
    return validate_covering(members, max_beta(members)), FuzzySet(U, L, draw())


def best_of(f, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        f()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100])
    ap.add_argument("--members", type=int, default=8)
    ap.add_argument("--lattice", default="lukasiewicz")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    L = parse_lattice_arg(args.lattice)
    rng = np.random.default_rng(args.seed)
    print(f"{'|U|':>6} {'op':>7} {'direct s':>10} {'matrix s':>10} {'max dev':>9}")
    for n in args.sizes:
        C, X = random_instance(rng, L, n, args.members)
        for (pair, d), op in OPERATORS.items():
            a, b = op(C, X).values, approx_via_matrix(C, X, pair, d).values
            dev = 0 if L.is_finite and a == b else max(abs(u - v) for u, v in zip(a, b))
            td = best_of(lambda: op(C, X), args.repeat)
            tm = best_of(lambda: approx_via_matrix(C, X, pair, d), args.repeat)
            print(f"{n:>6} {d + str(pair):>7} {td:>10.4f} {tm:>10.4f} {dev:>9.2g}")


if __name__ == "__main__":
    main()
