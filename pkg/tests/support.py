"""Shared helpers for the test suite: fixtures, lattice catalogue, generators."""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

from lrough.covering import max_beta, validate_covering
from lrough.fuzzy_set import FuzzySet, Universe
from lrough.io import load_problem
from lrough.lattice import (
    all_finite_lattices,
    finite_lukasiewicz,
    godel,
    lukasiewicz,
    product,
    table1,
)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

FINITE = list(all_finite_lattices(4)) + [table1(), finite_lukasiewicz(5)]
SMALL_FINITE = [L for L in FINITE if len(L) <= 3]
UNIT = [godel(), lukasiewicz(), product()]
ALL = FINITE + UNIT


def fixture(name):
    """(Problem, expected dict) for fixtures/<name>.json."""
    path = FIXTURES / f"{name}.json"
    with open(path, encoding="utf-8") as fh:
        expected = json.load(fh).get("expected", {})
    return load_problem(path), expected


def fixture_path(name):
    return str(FIXTURES / f"{name}.json")


def universe(n):
    return Universe(tuple("xyzuvw"[:n]) if n <= 6 else tuple(f"x{i}" for i in range(1, n + 1)))


def lattice_name(L):
    return getattr(L, "kind", None) or type(L).__name__


# ---------------------------------------------------------------- strategies


def values(L):
    if L.is_finite:
        return st.sampled_from(L.elements)
    return st.one_of(
        st.sampled_from([round(0.1 * i, 1) for i in range(11)]),
        st.floats(0.0, 1.0, allow_nan=False, allow_infinity=False),
    )


def above_bottom(L):
    return values(L).filter(L.above_bottom)


@st.composite
def fuzzy_sets(draw, U, L):
    return FuzzySet(U, L, tuple(draw(values(L)) for _ in U.labels))


@st.composite
def contexts(draw, lattices=None, max_n=4):
    """(lattice, universe)."""
    L = draw(st.sampled_from(lattices or ALL))
    U = universe(draw(st.integers(1, max_n)))
    return L, U


@st.composite
def coverings(draw, lattices=None, max_n=4, max_m=4):
    """A valid beta-covering; beta is drawn at or below the tightest threshold."""
    L, U = draw(contexts(lattices, max_n))
    m = draw(st.integers(1, max_m))
    members = [draw(fuzzy_sets(U, L)) for _ in range(m)]
    # make sure the join is above bottom everywhere so some beta exists
    top_at = draw(st.integers(0, m - 1))
    for i in range(len(U)):
        if not L.above_bottom(L.join_all(c.values[i] for c in members)):
            vals = list(members[top_at].values)
            vals[i] = L.top
            members[top_at] = FuzzySet(U, L, tuple(vals))
    mb = max_beta(members)
    if not L.above_bottom(mb):
        # incomparable joins (diamond) can still meet at bottom
        members[top_at] = FuzzySet(U, L, (L.top,) * len(U))
        mb = max_beta(members)
    if L.is_finite:
        betas = [b for b in L.elements if L.above_bottom(b) and L.le(b, mb)]
        beta = draw(st.sampled_from(betas))
    else:
        beta = draw(st.sampled_from([mb, mb * 0.5, mb * 0.9])) if mb > 0 else 1.0
        if beta <= L.eq_tolerance:
            beta = mb
    return validate_covering(members, beta)


# ---------------------------------------------------------------- numpy RNG instances


def random_set(rng, U, L, decimals=True):
    if L.is_finite:
        return FuzzySet(U, L, tuple(int(v) for v in rng.integers(0, len(L), len(U))))
    if decimals:
        return FuzzySet(U, L, tuple(float(v) / 10 for v in rng.integers(0, 11, len(U))))
    return FuzzySet(U, L, tuple(float(v) for v in rng.random(len(U))))


def random_covering(rng, L, n, m, decimals=True, distinct=False):
    """A random beta-covering with a random admissible beta."""
    U = universe(n)
    while True:
        members = [random_set(rng, U, L, decimals) for _ in range(m)]
        if distinct and any(a == b for a, b in itertools.combinations(members, 2)):
            continue
        mb = max_beta(members)
        if not L.above_bottom(mb):
            continue
        if L.is_finite:
            betas = [b for b in L.elements if L.above_bottom(b) and L.le(b, mb)]
            beta = betas[int(rng.integers(0, len(betas)))]
        else:
            beta = float(mb) if rng.random() < 0.3 else float(mb) * float(rng.uniform(0.2, 1.0))
            if not L.above_bottom(beta):
                beta = float(mb)
        return validate_covering(members, beta)


def all_coverings(U, L, max_members=3):
    """Every family of at most ``max_members`` distinct sets and every admissible beta."""
    sets = list(itertools.product(L.elements, repeat=len(U)))
    for k in range(1, max_members + 1):
        for fam in itertools.combinations(sets, k):
            members = [FuzzySet(U, L, s) for s in fam]
            mb = max_beta(members)
            for b in L.elements:
                if L.above_bottom(b) and L.le(b, mb):
                    yield validate_covering(members, b)


def crisp_lattices():
    return [L for L in FINITE if len(L) == 2]


# ---------------------------------------------------------------- set-functional laws


def set_law_violations(U, L, betas=None, limit=1):
    """Exhaustive check of the S/N laws, their beta versions, monotonicity,
    decomposition and the pseudo-subsethood conditions over all of L^U.

    Returns a list of (law, witness) pairs, at most ``limit`` per law.
    """
    E = list(L.elements)
    sets = list(itertools.product(E, repeat=len(U)))
    T, I, le = L.tnorm, L.implies, L.le
    pw = lambda f, A, B: tuple(f(a, b) for a, b in zip(A, B))  # noqa: E731
    leq = lambda A, B: all(le(a, b) for a, b in zip(A, B))  # noqa: E731
    S = {(A, B): L.meet_all(I(a, b) for a, b in zip(A, B)) for A in sets for B in sets}
    N = {(A, B): L.join_all(T(a, b) for a, b in zip(A, B)) for A in sets for B in sets}
    out = {}

    def bad(law, **w):
        out.setdefault(law, [])
        if len(out[law]) < limit:
            out[law].append(w)

    if betas is None:
        betas = [b for b in E if L.above_bottom(b)]
    for beta in [L.top] + [b for b in betas if b != L.top]:
        tag = "" if beta == L.top else "^b"
        Sb = {k: I(beta, v) for k, v in S.items()}
        Nb = {k: T(v, beta) for k, v in N.items()}
        for A in sets:
            for B in sets:
                s, n = Sb[(A, B)], Nb[(A, B)]
                if (s == L.top) != le(beta, S[(A, B)]):
                    bad("S1" + tag, A=A, B=B, beta=beta)
                if beta == L.top and (s == L.top) != leq(A, B):
                    bad("S1", A=A, B=B)
                if n != Nb[(B, A)]:
                    bad("N1" + tag, A=A, B=B, beta=beta)
                for a in E:
                    aB, aTB = pw(I, (a,) * len(U), B), pw(T, (a,) * len(U), B)
                    if Sb[(A, aB)] != I(a, s):
                        bad("S3" + tag, A=A, B=B, alpha=a, beta=beta)
                    if not le(T(a, s), Sb[(A, aTB)]):
                        bad("S4" + tag, A=A, B=B, alpha=a, beta=beta)
                    if Nb[(A, aTB)] != T(a, n):
                        bad("N3" + tag, A=A, B=B, alpha=a, beta=beta)
                    if not le(Nb[(A, aB)], I(a, n)):
                        bad("N4" + tag, A=A, B=B, alpha=a, beta=beta)
                    if I(n, a) != Sb[(A, pw(I, B, (a,) * len(U)))]:
                        bad("NS" + tag, A=A, B=B, alpha=a, beta=beta)
                for C in sets:
                    m, j = pw(L.meet, B, C), pw(L.join, B, C)
                    if Sb[(A, m)] != L.meet(Sb[(A, B)], Sb[(A, C)]):
                        bad("S2" + tag, A=A, A1=B, A2=C, beta=beta)
                    if Nb[(A, j)] != L.join(Nb[(A, B)], Nb[(A, C)]):
                        bad("N2" + tag, A=A, A1=B, A2=C, beta=beta)
                    # decomposition over the first argument: A1=A, A2=B, target C
                    jAB = pw(L.join, A, B)
                    if Sb[(jAB, C)] != L.meet(Sb[(A, C)], Sb[(B, C)]):
                        bad("decomposition S", A1=A, A2=B, B=C, beta=beta)
                    if Nb[(jAB, C)] != L.join(Nb[(A, C)], Nb[(B, C)]):
                        bad("decomposition N", A1=A, A2=B, B=C, beta=beta)
                    if leq(A, B):
                        if not le(Sb[(B, C)], Sb[(A, C)]):
                            bad("monotone S", A=A, B=B, C=C, beta=beta)
                        if not le(Nb[(A, C)], Nb[(B, C)]):
                            bad("monotone N", A=A, B=B, C=C, beta=beta)
                        # pseudo-subsethood: A <= B <= C and A <= B
                        if leq(B, C) and not le(Sb[(C, A)], Sb[(B, A)]):
                            bad("SM3(i)", A=A, B=B, C=C, beta=beta)
                        if not le(Sb[(C, A)], Sb[(C, B)]):
                            bad("SM3(ii)", A=A, B=B, C=C, beta=beta)
                if s == L.top and not le(beta, S[(A, B)]):
                    bad("SM1", A=A, B=B, beta=beta)
    return [(k, w) for k, ws in out.items() for w in ws]


def lid(L):
    """Short readable test id for a lattice."""
    if not L.is_finite:
        return L.kind
    shape = "chain" if L.is_chain() else "diamond"
    flags = ("R" if L.is_regular() else "") + ("H" if L.is_heyting() else "")
    pos = next((i for i, M in enumerate(FINITE) if M is L), None)
    return f"{shape}{len(L)}{flags or '-'}" + ("" if pos is None else f"#{pos}")


# ---------------------------------------------------------------- residuated-lattice laws


def _carrier_families(L):
    elems = list(L.elements)
    for k in range(len(elems) + 1):
        yield from itertools.combinations(elems, k)


def lattice_law_violations(L, regular=False):
    """Exhaustive check of I1-I8 (and I9-I11 when ``regular``) on a finite lattice.

    Families range over every subset of the carrier, the empty one included.
    Returns a list of (law, witness) pairs, one per law at most.
    """
    E = list(L.elements)
    T, I, le, n = L.tnorm, L.implies, L.le, L.neg
    out = {}

    def bad(law, *w):
        out.setdefault(law, w)

    for a, b in itertools.product(E, repeat=2):
        if T(a, b) != T(b, a) or (I(a, b) == L.top) != le(a, b) or I(L.top, a) != a:
            bad("I1", a, b)
        if not le(T(a, I(a, b)), b):
            bad("I2", a, b)
        if not le(b, I(a, T(a, b))):
            bad("I8", a, b)
        if regular:
            if I(a, b) != I(n(b), n(a)):
                bad("I9", a, b)
            if I(a, b) != n(T(a, n(b))):
                bad("I10", a, b)
    for a, b, c in itertools.product(E, repeat=3):
        if not (I(a, I(b, c)) == I(T(a, b), c) == I(b, I(a, c))):
            bad("I3", a, b, c)
        if le(T(a, b), c) != le(a, I(b, c)):
            bad("I7", a, b, c)
    for fam in _carrier_families(L):
        for a in E:
            if T(a, L.join_all(fam)) != L.join_all(T(a, b) for b in fam):
                bad("I4", a, fam)
            if I(L.join_all(fam), a) != L.meet_all(I(b, a) for b in fam):
                bad("I5", a, fam)
            if I(a, L.meet_all(fam)) != L.meet_all(I(a, b) for b in fam):
                bad("I6", a, fam)
        if regular and n(L.meet_all(fam)) != L.join_all(n(b) for b in fam):
            bad("I11", fam)
    return sorted(out.items())
