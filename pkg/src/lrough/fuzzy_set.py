"""L-fuzzy sets on a finite universe and the S / N functionals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BetaZero, LatticeMismatch, UniverseMismatch, UnknownLabel
from .lattice import ResiduatedLattice


@dataclass(frozen=True)
class Universe:
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        if not labels:
            raise ValueError("a universe must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValueError("universe labels must be unique")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_pos", {s: i for i, s in enumerate(labels)})

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label) -> int:
        try:
            return self._pos[str(label)]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not in the universe") from None


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """A dense membership vector in universe order."""

    universe: Universe
    lattice: ResiduatedLattice
    values: tuple = field(default=())

    def __post_init__(self):
        vals = tuple(self.lattice.check(v) for v in self.values)
        if len(vals) != len(self.universe):
            raise ValueError(f"expected {len(self.universe)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, label):
        return self.values[self.universe.index(label)]

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        if self.universe != other.universe or self.lattice != other.lattice:
            return False
        return all(self.lattice.eq(a, b) for a, b in zip(self.values, other.values))

    __hash__ = None

    def __le__(self, other):
        _same_context(self, other)
        return all(self.lattice.le(a, b) for a, b in zip(self.values, other.values))

    def __ge__(self, other):
        return other.__le__(self)

    def to_dict(self, digits=9):
        fmt = self.lattice.format
        return {x: fmt(v, digits) for x, v in zip(self.universe.labels, self.values)}

    def __repr__(self):
        fmt = self.lattice.format
        body = ", ".join(f"{x}: {fmt(v, 4)}" for x, v in zip(self.universe.labels, self.values))
        return f"FuzzySet({{{body}}})"


def fuzzy_set(universe, lattice, values) -> FuzzySet:
    if not isinstance(universe, Universe):
        universe = Universe(tuple(universe))
    return FuzzySet(universe, lattice, tuple(values))


def _same_context(A: FuzzySet, B: FuzzySet):
    if A.universe != B.universe:
        raise UniverseMismatch("fuzzy sets live on different universes")
    if A.lattice != B.lattice:
        raise LatticeMismatch("fuzzy sets take values in different lattices")


def characteristic(U: Universe, S, lattice: ResiduatedLattice) -> FuzzySet:
    """1 on the labels in ``S``, 0 elsewhere."""
    inside = {U.index(s) for s in S}
    vals = tuple(lattice.top if i in inside else lattice.bottom for i in range(len(U)))
    return FuzzySet(U, lattice, vals)


def constant(U: Universe, lattice: ResiduatedLattice, a) -> FuzzySet:
    return FuzzySet(U, lattice, (a,) * len(U))


_OPS = {
    "tnorm": "tnorm",
    "implication": "implies",
    "meet": "meet",
    "join": "join",
}


def pointwise(op: str, A, B) -> FuzzySet:
    """Apply a binary lattice operation elementwise; either side may be a scalar."""
    if op not in _OPS:
        raise ValueError(f"unknown pointwise operation {op!r}")
    if isinstance(A, FuzzySet) and isinstance(B, FuzzySet):
        _same_context(A, B)
        ref, a_vals, b_vals = A, A.values, B.values
    elif isinstance(A, FuzzySet):
        b = A.lattice.check(B)
        ref, a_vals, b_vals = A, A.values, (b,) * len(A)
    elif isinstance(B, FuzzySet):
        a = B.lattice.check(A)
        ref, a_vals, b_vals = B, (a,) * len(B), B.values
    else:
        raise TypeError("pointwise needs at least one fuzzy set")
    f = getattr(ref.lattice, _OPS[op])
    return FuzzySet(ref.universe, ref.lattice, tuple(f(a, b) for a, b in zip(a_vals, b_vals)))


def negate(A: FuzzySet) -> FuzzySet:
    L = A.lattice
    return FuzzySet(A.universe, L, tuple(L.neg(a) for a in A.values))


def subsethood(A: FuzzySet, B: FuzzySet):
    """S(A, B): meet over x of A(x) -> B(x)."""
    _same_context(A, B)
    L = A.lattice
    acc = L.top
    for a, b in zip(A.values, B.values):
        acc = L.meet(acc, L.implies(a, b))
    return acc


def intersection_degree(A: FuzzySet, B: FuzzySet):
    """N(A, B): join over x of A(x) * B(x)."""
    _same_context(A, B)
    L = A.lattice
    acc = L.bottom
    for a, b in zip(A.values, B.values):
        acc = L.join(acc, L.tnorm(a, b))
    return acc


def check_beta(L: ResiduatedLattice, beta):
    beta = L.check(beta)
    if not L.above_bottom(beta):
        raise BetaZero()
    return beta


def subsethood_beta(A: FuzzySet, B: FuzzySet, beta):
    beta = check_beta(A.lattice, beta)
    return A.lattice.implies(beta, subsethood(A, B))


def intersection_beta(A: FuzzySet, B: FuzzySet, beta):
    beta = check_beta(A.lattice, beta)
    return A.lattice.tnorm(intersection_degree(A, B), beta)


def le_beta(A: FuzzySet, B: FuzzySet, beta) -> bool:
    """A <=_beta B, i.e. S(A, B) >= beta."""
    beta = check_beta(A.lattice, beta)
    return A.lattice.le(beta, subsethood(A, B))


def all_sets(U: Universe, lattice: ResiduatedLattice):
    """Every fuzzy set on ``U`` over a finite lattice, in lexicographic index order."""
    if not lattice.is_finite:
        raise ValueError("enumeration needs a finite lattice")
    for vals in itertools.product(lattice.elements, repeat=len(U)):
        yield FuzzySet(U, lattice, vals)
