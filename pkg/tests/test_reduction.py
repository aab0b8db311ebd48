import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrough.approx import OPERATORS
from lrough.axioms import OperatorTable
from lrough.covering import relation_arrow, validate_covering
from lrough.errors import ContextMismatch, UnknownMember
from lrough.fuzzy_set import FuzzySet, all_sets, constant
from lrough.lattice import boolean, godel, table1
from lrough.reduction import (
    core,
    is_independent,
    is_reducible,
    operators_agree,
    reduct,
    same_family,
    same_operators,
    subset_search,
)
from support import FINITE, coverings, fixture, fuzzy_sets, universe

SMALL = [L for L in FINITE if len(L) <= 4]


def test_reduct_example():
    prob, exp = fixture("e6-1")
    rep = reduct(prob.covering())
    assert rep.removed == exp["removed"]
    assert list(rep.surviving) == exp["reduct"]
    assert is_reducible(prob.covering(), "C4") == ["C1", "C2"]
    assert is_reducible(prob.covering(), "C1") is None


def test_core_example():
    prob, exp = fixture("e6-4")
    rep = core(prob.covering())
    assert rep.removed == exp["removed"]
    assert list(rep.surviving) == exp["core"]
    assert is_independent(prob.covering(), "C4") == ["C1", "C2"]
    assert is_independent(prob.covering(), "C3") is None


def test_unknown_member():
    prob, _ = fixture("e6-1")
    with pytest.raises(UnknownMember):
        is_reducible(prob.covering(), "C9")


def test_duplicates_removed_first():
    U, L = universe(2), godel()
    A = FuzzySet(U, L, (0.4, 1.0))
    B = FuzzySet(U, L, (1.0, 0.3))
    C = validate_covering([A, B, A], 0.5, ["A", "B", "A2"])
    rep = reduct(C)
    assert rep.removed == {"A2": ["A"]}
    assert rep.surviving == ("A", "B")
    assert core(C).removed == {"A2": ["A"]}


def test_report_serialises():
    prob, _ = fixture("e6-1")
    d = reduct(prob.covering()).to_dict()
    assert d["kind"] == "reduct" and d["removed"] == {"C4": ["C1", "C2"]}
    assert list(d["covering"]["covering"]) == ["C1", "C2", "C3"]


def test_context_mismatch():
    a, _ = fixture("e6-1")
    b, _ = fixture("e5-1")
    with pytest.raises(ContextMismatch):
        same_operators(a.covering(), b.covering(), 1)


# ---------------------------------------------------------------- properties


def _targets(C, rng_draw, k=20):
    if C.lattice.is_finite and len(C.lattice) ** len(C.universe) <= 81:
        return list(all_sets(C.universe, C.lattice))
    return [rng_draw(fuzzy_sets(C.universe, C.lattice)) for _ in range(k)]


@given(coverings(max_m=5), st.data())
def test_removing_reducible_keeps_first_and_third_pair(C, data):
    targets = _targets(C, data.draw)
    for name in C.names:
        if is_reducible(C, name) is None:
            continue
        D = C.subfamily([n for n in C.names if n != name])
        assert relation_arrow(D).equals(relation_arrow(C))
        assert operators_agree(C, D, 1, targets)
        assert operators_agree(C, D, 3, targets)


@given(coverings(max_m=5), st.data())
def test_removing_independent_keeps_second_pair(C, data):
    targets = _targets(C, data.draw)
    for name in C.names:
        if is_independent(C, name) is None:
            continue
        D = C.subfamily([n for n in C.names if n != name])
        assert operators_agree(C, D, 2, targets)


@given(coverings(max_m=5))
def test_reduct_and_core_are_stable_coverings(C):
    for f in (reduct, core):
        once = f(C).covering
        validate_covering(once.members, once.beta, once.names)
        twice = f(once).covering
        assert twice.names == once.names
    assert relation_arrow(reduct(C).covering).equals(relation_arrow(C))


@given(coverings(lattices=SMALL, max_m=5))
def test_decision_agrees_with_subset_search(C):
    for name in C.names:
        for upward, fast in ((False, is_reducible), (True, is_independent)):
            w = fast(C, name)
            oracle = subset_search(C, name, upward=upward)
            assert (w is None) == (oracle is None)
            if w is not None:
                L, k = C.lattice, C.names.index(name)
                fold = L.meet_all if upward else L.join_all
                for x in range(len(C.universe)):
                    assert L.eq(fold(C.member(n).values[x] for n in w), C.members[k].values[x])


@given(coverings(lattices=SMALL, max_n=2, max_m=4), st.data())
def test_same_operators_is_sound(C, data):
    other = data.draw(coverings(lattices=[C.lattice], max_n=2, max_m=4))
    if other.universe != C.universe:
        return
    other = validate_covering(other.members, C.beta, other.names) if _covers(other, C.beta) else None
    if other is None:
        return
    targets = list(all_sets(C.universe, C.lattice))
    for pair in (1, 2, 3):
        if same_operators(C, other, pair):
            assert operators_agree(C, other, pair, targets)


def _covers(C, beta):
    L = C.lattice
    return all(L.le(beta, L.join_all(m.values[i] for m in C.members)) for i in range(len(C.universe)))


# ---------------------------------------------------------------- pinned counterexamples


def _cov(L, beta, *members, n=2):
    U = universe(n)
    return validate_covering([FuzzySet(U, L, m) for m in members], beta)


def test_same_operators_converse_fails_without_reducible_witness():
    """Equal operators do not force equal reducts: a constant member that is
    neither a join nor a meet of others can be redundant for the operators."""
    T = table1()
    one, a = T.top, T.value("a")
    C1 = _cov(T, one, (one, one))
    C2 = _cov(T, one, (one, one), (a, a))
    targets = list(all_sets(C1.universe, T))
    for pair in (1, 2, 3):
        assert operators_agree(C1, C2, pair, targets)
        assert not same_operators(C1, C2, pair)
    B = boolean()
    D1 = _cov(B, 1, (1, 1))
    D2 = _cov(B, 1, (1, 1), (0, 0))
    for pair in (1, 2, 3):
        assert operators_agree(D1, D2, pair, list(all_sets(D1.universe, B)))
        assert not same_operators(D1, D2, pair)


def test_first_pair_upper_equal_lower_different_on_non_regular_lattice():
    T = table1()
    a, one = T.value("a"), T.top
    C1 = _cov(T, a, (0, a), (a, one))
    C2 = _cov(T, a, (0, one), (a, a))
    up1, up2 = (OperatorTable.from_covering(C, 1, "upper") for C in (C1, C2))
    lo1, lo2 = (OperatorTable.from_covering(C, 1, "lower") for C in (C1, C2))
    assert up1 == up2
    assert lo1 != lo2


def _tables(C, pair):
    return [OperatorTable.from_covering(C, pair, d) for d in ("lower", "upper")]


@pytest.mark.parametrize("L", [L for L in FINITE if len(L) <= 3], ids=lambda L: repr(L.names))
def test_lower_equal_iff_upper_equal_where_it_holds(L):
    """Exhaustive on two-point universes with up to two members: pairs 2 and 3
    always, pair 1 on regular lattices."""
    U = universe(2)
    sets = list(itertools.product(L.elements, repeat=2))
    fams = [f for k in (1, 2) for f in itertools.combinations(sets, k)]
    for beta in [b for b in L.elements if L.above_bottom(b)]:
        covs = []
        for f in fams:
            members = [FuzzySet(U, L, s) for s in f]
            if all(L.le(beta, L.join_all(m.values[i] for m in members)) for i in range(2)):
                covs.append(validate_covering(members, beta))
        pairs = (1, 2, 3) if L.is_regular() else (2, 3)
        for pair in pairs:
            keys = [tuple(t.key() for t in _tables(C, pair)) for C in covs]
            for k1, k2 in itertools.combinations(keys, 2):
                assert (k1[0] == k2[0]) == (k1[1] == k2[1]), (pair, beta)


def test_same_family_ignores_names_and_order():
    U, L = universe(2), godel()
    A, B = constant(U, L, 1.0), FuzzySet(U, L, (0.2, 0.6))
    assert same_family(validate_covering([A, B], 0.5, ["p", "q"]),
                       validate_covering([B, A], 0.5, ["r", "s"]))
