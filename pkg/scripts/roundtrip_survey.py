"""Exhaustive survey of operator -> covering -> operator round trips.

    python scripts/roundtrip_survey.py --lattices boolean table1 --max-universe 2

For every covering of at most ``max_members`` members over each lattice
and every admissible beta, tabulate all six operators, check the axiom set
of their characterisation and rebuild a covering with each reconstruction
method.  Prints one line of counts per (lattice, pair, direction).
"""

import argparse
import collections
import itertools
import sys
import time
from dataclasses import dataclass, field

from lrough.axioms import THEOREMS, OperatorTable, check_axiom, lattice_meets
from lrough.axioms import _canonical_family, _family_covering, _proof_family
from lrough.covering import max_beta, validate_covering
from lrough.errors import NotACovering
from lrough.fuzzy_set import FuzzySet, Universe
from lrough.io import parse_lattice_arg


@dataclass
class SurveyConfig:
    lattices: list = field(default_factory=lambda: ["boolean", "table1"])
    max_universe: int = 2
    max_members: int = 2
    methods: tuple = ("proof", "canonical")


def coverings(U, L, max_members):
    sets = list(itertools.product(L.elements, repeat=len(U)))
    for k in range(1, max_members + 1):
        for fam in itertools.combinations(sets, k):
            members = [FuzzySet(U, L, s) for s in fam]
            mb = max_beta(members)
            for b in L.elements:
                if L.above_bottom(b) and L.le(b, mb):
                    yield validate_covering(members, b)


def rebuild(g, beta, pair, d, method):
    fam = _proof_family if method == "proof" else _canonical_family
    try:
        K = _family_covering(g, beta, fam(g, beta, pair, d))
    except NotACovering:
        return False
    return OperatorTable.from_covering(K, pair, d) == g


def survey(cfg: SurveyConfig, out=sys.stdout):
    for spec in cfg.lattices:
        L = parse_lattice_arg(spec)
        stats = collections.defaultdict(collections.Counter)
        seen = set()
        t0 = time.perf_counter()
        for n in range(1, cfg.max_universe + 1):
            U = Universe(tuple("xyz"[:n]))
            for C in coverings(U, L, cfg.max_members):
                for (pair, d), (axioms, _) in THEOREMS.items():
                    g = OperatorTable.from_covering(C, pair, d)
                    key = (g.key(), C.beta, pair, d)
                    if key in seen:
                        continue
                    seen.add(key)
                    s = stats[(pair, d)]
                    s["operators"] += 1
                    s["axioms fail"] += any(not check_axiom(g, C.beta, a).holds for a in axioms)
                    for m in cfg.methods:
                        s[f"{m} ok"] += rebuild(g, C.beta, pair, d, m)
        secs = time.perf_counter() - t0
        for (pair, d), s in sorted(stats.items()):
            unmet = lattice_meets(L, THEOREMS[(pair, d)][1])
            note = f"  (lattice not {' and '.join(unmet)})" if unmet else ""
            counts = ", ".join(f"{k} {v}" for k, v in s.items())
            out.write(f"{spec:10} {d}{pair}: {counts}{note}\n")
        out.write(f"{spec:10} {secs:.1f}s\n")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lattices", nargs="+", default=SurveyConfig().lattices,
                    help="preset names or kind:n, e.g. boolean table1 finite_lukasiewicz:3")
    ap.add_argument("--max-universe", type=int, default=SurveyConfig.max_universe, choices=(1, 2, 3))
    ap.add_argument("--max-members", type=int, default=SurveyConfig.max_members)
    args = ap.parse_args(argv)
    survey(SurveyConfig(args.lattices, args.max_universe, args.max_members))


if __name__ == "__main__":
    main()
