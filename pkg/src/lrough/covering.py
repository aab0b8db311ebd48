"""L-fuzzy beta-coverings and the relations they induce."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ContextMismatch, NotACovering, UnknownMember
from .fuzzy_set import FuzzySet, Universe, _same_context, check_beta
from .lattice import ResiduatedLattice
from .lmatrix import LatticeMatrix


@dataclass(frozen=True, eq=False)
class BetaCovering:
    universe: Universe
    lattice: ResiduatedLattice
    names: tuple
    members: tuple
    beta: object

    def __len__(self):
        return len(self.members)

    def member(self, name) -> FuzzySet:
        try:
            return self.members[self.names.index(name)]
        except ValueError:
            raise UnknownMember(f"{name!r} is not a member of the covering") from None

    def items(self):
        return zip(self.names, self.members)

    @property
    def duplicates(self):
        """Pairs (earlier, later) of value-identical members."""
        out = []
        for j in range(len(self.members)):
            for i in range(j):
                if self.members[i] == self.members[j]:
                    out.append((self.names[i], self.names[j]))
        return out

    @cached_property
    def arrow(self) -> LatticeMatrix:
        return relation_arrow(self)

    def subfamily(self, names) -> "BetaCovering":
        keep = [n for n in self.names if n in set(names)]
        return validate_covering([self.member(n) for n in keep], self.beta, keep)

    def same_context(self, other: "BetaCovering") -> bool:
        return (self.universe == other.universe and self.lattice == other.lattice
                and self.lattice.eq(self.beta, other.beta))

    def to_dict(self, digits=9):
        fmt = self.lattice.format
        return {
            "lattice": self.lattice.descriptor(),
            "beta": fmt(self.beta, digits),
            "universe": list(self.universe.labels),
            "covering": {n: [fmt(v, digits) for v in m.values] for n, m in self.items()},
        }


def default_names(m):
    return [f"C{i + 1}" for i in range(m)]


def max_beta(members):
    """Meet over x of the join of all members at x."""
    if not members:
        raise ValueError("max_beta needs at least one member")
    L = members[0].lattice
    n = len(members[0].universe)
    return L.meet_all(L.join_all(m.values[i] for m in members) for i in range(n))


def validate_covering(members, beta, names=None) -> BetaCovering:
    members = list(members)
    if not members:
        raise ValueError("a covering needs at least one member")
    first = members[0]
    for m in members[1:]:
        _same_context(first, m)
    L = first.lattice
    beta = check_beta(L, beta)
    names = tuple(str(s) for s in (names if names is not None else default_names(len(members))))
    if len(names) != len(members):
        raise ValueError("one name per member is required")
    if len(set(names)) != len(names):
        raise ValueError("member names must be unique")
    for i, x in enumerate(first.universe.labels):
        j = L.join_all(m.values[i] for m in members)
        if not L.le(beta, j):
            raise NotACovering(x, L.format(j), L.format(beta))
    return BetaCovering(first.universe, L, names, tuple(members), beta)


def relation_arrow(C: BetaCovering) -> LatticeMatrix:
    """R(x, y) = meet over members of C(x) -> C(y)."""
    L, n = C.lattice, len(C.universe)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = L.top
            for m in C.members:
                acc = L.meet(acc, L.implies(m.values[i], m.values[j]))
            row.append(acc)
        rows.append(row)
    return LatticeMatrix(L, np.array(rows, dtype=L.dtype))


def relation_sym(C: BetaCovering) -> LatticeMatrix:
    """R(x, y) = join over members of C(x) * C(y)."""
    L, n = C.lattice, len(C.universe)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = L.bottom
            for m in C.members:
                acc = L.join(acc, L.tnorm(m.values[i], m.values[j]))
            row.append(acc)
        rows.append(row)
    return LatticeMatrix(L, np.array(rows, dtype=L.dtype))


def require_same_context(C1: BetaCovering, C2: BetaCovering):
    if not C1.same_context(C2):
        raise ContextMismatch("coverings differ in universe, lattice or beta")
