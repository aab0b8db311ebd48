"""Recompute every worked example from the fixture files and print a table.

    python scripts/reproduce_examples.py [--fixtures DIR]

Each row shows the stated vector, the computed one and whether they agree
within 1e-9.  Exit status is 1 when any row disagrees.
"""

import argparse
import json
import sys
from pathlib import Path

from lrough.approx import approx
from lrough.fuzzy_set import intersection_beta, subsethood_beta
from lrough.io import load_problem
from lrough.lmatrix import relation_matrix
from lrough.reduction import core, reduct

ROOT = Path(__file__).resolve().parents[1]
KEYS = {f"{d}{p}": (p, d) for p in (1, 2, 3) for d in ("lower", "upper")}


def fmt(vec):
    return "(" + ", ".join(f"{v:g}" if isinstance(v, float) else str(v) for v in vec) + ")"


def rows(path):
    prob = load_problem(path)
    expected = json.loads(Path(path).read_text()).get("expected", {})
    name = Path(path).stem
    if "N_beta" in expected:
        L, beta = prob.lattice, prob.beta
        A, B = prob.target("A"), prob.target("B")
        yield name, "N_beta", expected["N_beta"], L.format(intersection_beta(A, B, beta))
        yield name, "S_beta", expected["S_beta"], L.format(subsethood_beta(A, B, beta))
        return
    C = prob.covering()
    for key, (pair, d) in KEYS.items():
        if key in expected:
            got = approx(C, prob.target("X"), pair, d).values
            yield name, key, expected[key], [round(v, 9) for v in got]
    if "relation" in expected:
        yield name, "M_R", expected["relation"], [[round(v, 9) for v in r] for r in relation_matrix(C).to_rows()]
    if "reduct" in expected:
        yield name, "reduct", expected["reduct"], list(reduct(C).surviving)
    if "core" in expected:
        yield name, "core", expected["core"], list(core(C).surviving)


def agree(a, b):
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(agree(x, y) for x, y in zip(a, b))
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        return abs(a - b) <= 1e-9
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fixtures", default=str(ROOT / "fixtures"))
    args = ap.parse_args(argv)
    bad = 0
    for path in sorted(Path(args.fixtures).glob("e*.json")):
        for name, key, want, got in rows(path):
            ok = agree(want, got)
            bad += not ok
            if key == "M_R":
                want, got = f"{len(want)}x{len(want[0])} matrix", "matches" if ok else "differs"
            print(f"{name:6} {key:8} {'ok ' if ok else 'DIFF'} stated {fmt(want) if isinstance(want, list) else want}"
                  + ("" if ok else f"  computed {fmt(got) if isinstance(got, list) else got}"))
    print(f"{bad} disagreement(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
