"""The three pairs of lower/upper approximation operators, evaluated directly.

For a covering C with threshold beta and a target X:

    lower1(X)(x) = join_C  C(x) * S^b(C, X)
    upper1(X)(x) = meet_C  C(x) -> N^b(C, X)
    lower2(X)(x) = meet_C  C(x) -> S^b(C, X)
    upper2(X)(x) = join_C  C(x) * N^b(C, X)
    lower3(X)(x) = S^b(R(-, x), X)
    upper3(X)(x) = N^b(R(-, x), X)

where R is the arrow relation of the covering.
"""

from __future__ import annotations

from .errors import LatticeMismatch, UniverseMismatch
from .fuzzy_set import FuzzySet, intersection_beta, subsethood_beta


def _check(C, X):
    if X.universe != C.universe:
        raise UniverseMismatch("target and covering live on different universes")
    if X.lattice != C.lattice:
        raise LatticeMismatch("target and covering use different lattices")


def _member_terms(C, X, functional):
    return [functional(m, X, C.beta) for m in C.members]


def _combine(C, terms, op, fold):
    L = C.lattice
    n = len(C.universe)
    out = []
    for i in range(n):
        out.append(fold(op(m.values[i], t) for m, t in zip(C.members, terms)))
    return FuzzySet(C.universe, L, tuple(out))


def lower1(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    L = C.lattice
    return _combine(C, _member_terms(C, X, subsethood_beta), L.tnorm, L.join_all)


def upper1(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    L = C.lattice
    return _combine(C, _member_terms(C, X, intersection_beta), L.implies, L.meet_all)


def lower2(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    L = C.lattice
    return _combine(C, _member_terms(C, X, subsethood_beta), L.implies, L.meet_all)


def upper2(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    L = C.lattice
    return _combine(C, _member_terms(C, X, intersection_beta), L.tnorm, L.join_all)


def _relation_columns(C):
    R = C.arrow
    return [FuzzySet(C.universe, C.lattice, R.column(j)) for j in range(R.cols)]


def lower3(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    vals = tuple(subsethood_beta(col, X, C.beta) for col in _relation_columns(C))
    return FuzzySet(C.universe, C.lattice, vals)


def upper3(C, X: FuzzySet) -> FuzzySet:
    _check(C, X)
    vals = tuple(intersection_beta(col, X, C.beta) for col in _relation_columns(C))
    return FuzzySet(C.universe, C.lattice, vals)


OPERATORS = {
    (1, "lower"): lower1,
    (1, "upper"): upper1,
    (2, "lower"): lower2,
    (2, "upper"): upper2,
    (3, "lower"): lower3,
    (3, "upper"): upper3,
}


def approx(C, X: FuzzySet, pair: int, direction: str) -> FuzzySet:
    try:
        op = OPERATORS[(int(pair), direction)]
    except (KeyError, ValueError, TypeError):
        raise ValueError(f"no operator for pair={pair!r}, direction={direction!r}") from None
    return op(C, X)
