"""Finite-scale checks of the axiomatic side of the theory.

An ``OperatorTable`` is an explicit map g: L^U -> L^U over a small finite
lattice.  The module checks the axioms L1-L9 / U1-U9 on such tables,
rebuilds coverings from operators, evaluates the Galois maps of a
relation and checks the lower/upper duality identities.

Sets are handled as raw tuples of carrier indices in this module; the
enumeration order of L^U is ``itertools.product`` order (first label most
significant).  Failure witnesses are the first violation in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .approx import OPERATORS as _OPERATORS
from .covering import BetaCovering, validate_covering
from .errors import (AxiomsNotSatisfied, LatticePreconditionUnmet, NotACovering, TableTooLarge,
                     UnknownAxiom, UnknownCounterexample)
from .fuzzy_set import FuzzySet, Universe, check_beta, intersection_beta, subsethood_beta
from .lattice import FiniteLattice, ResiduatedLattice, finite_chain, table1
from .lmatrix import LatticeMatrix

MAX_UNIVERSE = 3
MAX_CARRIER = 4


# ---------------------------------------------------------------- tables


def _check_size(universe, lattice):
    if not getattr(lattice, "is_finite", False):
        raise TableTooLarge("operator tables need a finite lattice")
    if len(universe) > MAX_UNIVERSE or len(lattice) > MAX_CARRIER:
        raise TableTooLarge(f"tables are limited to |U| <= {MAX_UNIVERSE}, |L| <= {MAX_CARRIER}")


@dataclass(frozen=True, eq=False)
class OperatorTable:
    universe: Universe
    lattice: FiniteLattice
    mapping: dict

    def __post_init__(self):
        _check_size(self.universe, self.lattice)
        dom = domain(self.universe, self.lattice)
        missing = [X for X in dom if X not in self.mapping]
        if missing:
            raise ValueError(f"operator table is not total: no image for {missing[0]}")
        m = {X: tuple(self.lattice.check(v) for v in self.mapping[X]) for X in dom}
        object.__setattr__(self, "mapping", m)

    @classmethod
    def from_function(cls, universe, lattice, f):
        """Tabulate ``f`` (FuzzySet -> FuzzySet) on every fuzzy set."""
        _check_size(universe, lattice)
        mp = {}
        for X in domain(universe, lattice):
            mp[X] = f(FuzzySet(universe, lattice, X)).values
        return cls(universe, lattice, mp)

    @classmethod
    def from_covering(cls, C: BetaCovering, pair: int, direction: str):
        op = _OPERATORS[(pair, direction)]
        return cls.from_function(C.universe, C.lattice, lambda X: op(C, X))

    def __call__(self, X):
        return self.mapping[tuple(X)]

    def apply(self, X: FuzzySet) -> FuzzySet:
        return FuzzySet(self.universe, self.lattice, self.mapping[X.values])

    def key(self):
        return tuple(self.mapping[X] for X in domain(self.universe, self.lattice))

    def first_difference(self, other: "OperatorTable"):
        for X in domain(self.universe, self.lattice):
            if self.mapping[X] != other.mapping[X]:
                return X
        return None

    def __eq__(self, other):
        if not isinstance(other, OperatorTable):
            return NotImplemented
        return (self.universe == other.universe and self.lattice == other.lattice
                and self.first_difference(other) is None)

    __hash__ = None


def domain(universe, lattice):
    return list(itertools.product(lattice.elements, repeat=len(universe)))


def _const(L, n, a):
    return (a,) * n


def _pw(f, A, B):
    return tuple(f(a, b) for a, b in zip(A, B))


def _smul(L, a, X):
    return tuple(L.tnorm(a, x) for x in X)


def _simp(L, a, X):
    return tuple(L.implies(a, x) for x in X)


def _leq(L, A, B):
    return all(L.le(a, b) for a, b in zip(A, B))


def _char(L, n, members):
    return tuple(L.top if i in members else L.bottom for i in range(n))


def _neg(L, A):
    return tuple(L.neg(a) for a in A)


# ---------------------------------------------------------------- axioms


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: dict | None = None

    def describe(self, universe=None, lattice=None):
        if self.witness is None:
            return None
        out = {}
        for k, v in self.witness.items():
            if isinstance(v, tuple) and universe is not None and lattice is not None and len(v) == len(universe) \
                    and all(isinstance(e, int) for e in v):
                out[k] = {x: lattice.format(e) for x, e in zip(universe.labels, v)}
            elif k in ("x", "y") and universe is not None:
                out[k] = universe.labels[v]
            elif k == "alpha" and lattice is not None:
                out[k] = lattice.format(v)
            elif k == "family" and universe is not None and lattice is not None:
                out[k] = [{x: lattice.format(e) for x, e in zip(universe.labels, S)} for S in v]
            else:
                out[k] = v
        return out


class _Axiom:
    def __init__(self, ident, text, instances, holds):
        self.ident = ident
        self.text = text
        self.instances = instances
        self.holds = holds


def _inst_none(g, beta):
    yield {}


def _inst_points(g, beta):
    for i in range(len(g.universe)):
        yield {"x": i}


def _inst_sets(g, beta):
    for X in domain(g.universe, g.lattice):
        yield {"X": X}


def _inst_alpha_sets(g, beta):
    for a in g.lattice.elements:
        for X in domain(g.universe, g.lattice):
            yield {"alpha": a, "X": X}


def _inst_ordered_pairs(g, beta):
    L = g.lattice
    dom = domain(g.universe, L)
    for A in dom:
        for B in dom:
            if _leq(L, A, B):
                yield {"A": A, "B": B}


def _inst_families(g, beta):
    dom = domain(g.universe, g.lattice)
    yield {"family": ()}
    for X in dom:
        yield {"family": (X,)}
    for i, X in enumerate(dom):
        for Y in dom[i + 1:]:
            yield {"family": (X, Y)}


def _inst_point_pairs(g, beta):
    n = len(g.universe)
    for x in range(n):
        for y in range(n):
            yield {"x": x, "y": y}


def _strict_le(L, A, B):
    return _leq(L, A, B) and A != B


def _L1(g, beta, w):
    L, n = g.lattice, len(g.universe)
    return L.le(beta, g(_const(L, n, L.top))[w["x"]])


def _mono(g, beta, w):
    return _leq(g.lattice, g(w["A"]), g(w["B"]))


def _L3(g, beta, w):
    L = g.lattice
    return _leq(L, g(w["X"]), _simp(L, beta, w["X"]))


def _L3s(g, beta, w):
    L = g.lattice
    return _strict_le(L, g(w["X"]), _simp(L, beta, w["X"]))


def _L4(g, beta, w):
    L = g.lattice
    gX = g(w["X"])
    return _leq(L, gX, g(_smul(L, beta, gX)))


def _L5(g, beta, w):
    L, a, X = g.lattice, w["alpha"], w["X"]
    return _leq(L, _smul(L, a, g(X)), g(_smul(L, a, X)))


def _L6(g, beta, w):
    L, a, X = g.lattice, w["alpha"], w["X"]
    return _simp(L, a, g(X)) == g(_simp(L, a, X))


def _L7(g, beta, w):
    L, n, fam = g.lattice, len(g.universe), w["family"]
    meet = _const(L, n, L.top)
    images = _const(L, n, L.top)
    for X in fam:
        meet = _pw(L.meet, meet, X)
        images = _pw(L.meet, images, g(X))
    return g(meet) == images


def _L8(g, beta, w):
    L, n, x, y = g.lattice, len(g.universe), w["x"], w["y"]
    a = g(_char(L, n, set(range(n)) - {x}))[y]
    b = g(_char(L, n, set(range(n)) - {y}))[x]
    return a == b and L.le(L.neg(beta), a)


def _L9(g, beta, w):
    L = g.lattice
    gX = g(w["X"])
    return _leq(L, _simp(L, beta, gX), g(gX))


def _U1(g, beta, w):
    L, n = g.lattice, len(g.universe)
    zero = _const(L, n, L.bottom)
    return g(zero) == zero


def _U3(g, beta, w):
    L = g.lattice
    return _leq(L, _smul(L, beta, w["X"]), g(w["X"]))


def _U3s(g, beta, w):
    L = g.lattice
    return _strict_le(L, _smul(L, beta, w["X"]), g(w["X"]))


def _U4(g, beta, w):
    L = g.lattice
    gX = g(w["X"])
    return _leq(L, g(_simp(L, beta, gX)), gX)


def _U5(g, beta, w):
    L, a, X = g.lattice, w["alpha"], w["X"]
    return _leq(L, g(_simp(L, a, X)), _simp(L, a, g(X)))


def _U6(g, beta, w):
    L, a, X = g.lattice, w["alpha"], w["X"]
    return _smul(L, a, g(X)) == g(_smul(L, a, X))


def _U7(g, beta, w):
    L, n, fam = g.lattice, len(g.universe), w["family"]
    join = _const(L, n, L.bottom)
    images = _const(L, n, L.bottom)
    for X in fam:
        join = _pw(L.join, join, X)
        images = _pw(L.join, images, g(X))
    return g(join) == images


def _U8(g, beta, w):
    L, n, x, y = g.lattice, len(g.universe), w["x"], w["y"]
    a = g(_char(L, n, {x}))[y]
    b = g(_char(L, n, {y}))[x]
    return a == b and L.le(a, beta)


def _U9(g, beta, w):
    L = g.lattice
    gX = g(w["X"])
    return _leq(L, g(gX), _smul(L, beta, gX))


AXIOMS = {
    a.ident: a for a in [
        _Axiom("L1", "g(1_U) >= beta", _inst_points, _L1),
        _Axiom("L2", "A <= B implies g(A) <= g(B)", _inst_ordered_pairs, _mono),
        _Axiom("L3", "g(X) <= beta -> X", _inst_sets, _L3),
        _Axiom("L3<", "g(X) < beta -> X (strict reading)", _inst_sets, _L3s),
        _Axiom("L4", "g(X) <= g(beta * g(X))", _inst_sets, _L4),
        _Axiom("L5", "alpha * g(X) <= g(alpha * X)", _inst_alpha_sets, _L5),
        _Axiom("L6", "alpha -> g(X) = g(alpha -> X)", _inst_alpha_sets, _L6),
        _Axiom("L7", "g(meet X_t) = meet g(X_t)", _inst_families, _L7),
        _Axiom("L8", "g(1_{U-x})(y) = g(1_{U-y})(x) >= not beta", _inst_point_pairs, _L8),
        _Axiom("L9", "gg(X) >= beta -> g(X)", _inst_sets, _L9),
        _Axiom("U1", "g(0) = 0", _inst_none, _U1),
        _Axiom("U2", "A <= B implies g(A) <= g(B)", _inst_ordered_pairs, _mono),
        _Axiom("U3", "g(X) >= beta * X", _inst_sets, _U3),
        _Axiom("U3>", "g(X) > beta * X (strict reading)", _inst_sets, _U3s),
        _Axiom("U4", "g(A) >= g(beta -> g(A))", _inst_sets, _U4),
        _Axiom("U5", "alpha -> g(A) >= g(alpha -> A)", _inst_alpha_sets, _U5),
        _Axiom("U6", "alpha * g(X) = g(alpha * X)", _inst_alpha_sets, _U6),
        _Axiom("U7", "g(join X_t) = join g(X_t)", _inst_families, _U7),
        _Axiom("U8", "g(1_x)(y) = g(1_y)(x) <= beta", _inst_point_pairs, _U8),
        _Axiom("U9", "gg(X) <= beta * g(X)", _inst_sets, _U9),
    ]
}

BASIC_AXIOMS = tuple(a for a in AXIOMS if not a.endswith(("<", ">")))

# axiom set and lattice requirement of each characterisation
THEOREMS = {
    (1, "lower"): (("L1", "L2", "L3", "L4", "L5"), ()),
    (1, "upper"): (("U1", "U2", "U3", "U4", "U5"), ("regular",)),
    (2, "upper"): (("U3", "U6", "U7", "U8"), ("heyting",)),
    (2, "lower"): (("L3", "L6", "L7", "L8"), ("regular", "heyting")),
    (3, "upper"): (("U3", "U6", "U7", "U9"), ("heyting",)),
    (3, "lower"): (("L3", "L6", "L7", "L9"), ("regular", "heyting")),
}


def _axiom(axiom):
    try:
        return AXIOMS[axiom]
    except KeyError:
        raise UnknownAxiom(f"unknown axiom {axiom!r}") from None


def check_axiom(g: OperatorTable, beta, axiom: str) -> AxiomVerdict:
    ax = _axiom(axiom)
    beta = check_beta(g.lattice, beta)
    for w in ax.instances(g, beta):
        if not ax.holds(g, beta, w):
            return AxiomVerdict(axiom, False, w)
    return AxiomVerdict(axiom, True, None)


def violates(g: OperatorTable, beta, axiom: str, witness: dict) -> bool:
    """Re-evaluate an axiom at one witness; True when it is violated there."""
    ax = _axiom(axiom)
    return not ax.holds(g, check_beta(g.lattice, beta), witness)


def classify_operator(g: OperatorTable, beta, axioms=BASIC_AXIOMS) -> set:
    return {a for a in axioms if check_axiom(g, beta, a).holds}


def lattice_meets(L: ResiduatedLattice, requirements) -> list:
    missing = []
    if "regular" in requirements and not L.is_regular():
        missing.append("regular")
    if "heyting" in requirements and not L.is_heyting():
        missing.append("heyting")
    return missing


def theorem_applies(L, pair, direction) -> bool:
    return not lattice_meets(L, THEOREMS[(pair, direction)][1])


# ---------------------------------------------------------------- reconstruction


def _proof_family(g: OperatorTable, beta, pair, direction):
    L, n = g.lattice, len(g.universe)
    everything = set(range(n))
    if (pair, direction) == (1, "lower"):
        return [X for X in domain(g.universe, L) if _smul(L, beta, g(X)) == X]
    if (pair, direction) == (1, "upper"):
        return [A for A in domain(g.universe, L) if A == _neg(L, g(_neg(L, A)))]
    if pair == 2:
        fam = []
        for x in range(n):
            for y in range(n):
                if direction == "upper":
                    v = g(_char(L, n, {x}))[y]
                else:
                    v = L.neg(g(_char(L, n, everything - {x}))[y])
                fam.append(tuple(v if z in (x, y) else L.bottom for z in range(n)))
        return fam
    if (pair, direction) == (3, "upper"):
        return [g(_char(L, n, {x})) for x in range(n)]
    if (pair, direction) == (3, "lower"):
        return [_neg(L, g(_char(L, n, everything - {x}))) for x in range(n)]
    raise ValueError(f"no operator for pair={pair!r}, direction={direction!r}")


def _canonical_family(g: OperatorTable, beta, pair, direction):
    """Largest family whose every member respects g.

    For pairs 1 and 2 each member A contributes a term t_A(X) that is
    joined (lower1, upper2) or met (upper1, lower2).  Keeping every A with
    t_A <= g (resp. >= g) everywhere gives back g whenever some covering
    induces g, because that covering is contained in the family.  For
    pair 3 the family consists of the sets A with R(x, y) * A(x) <= A(y)
    for the relation R(x, y) = beta -> g(1_x)(y) (upper) or
    R(x, y) = beta -> not g(1_{U-x})(y) (lower).
    """
    L, n = g.lattice, len(g.universe)
    dom = domain(g.universe, L)
    U = g.universe
    if pair in (1, 2):
        op = _OPERATORS[(pair, direction)]
        joined = (pair, direction) in ((1, "lower"), (2, "upper"))
        fam = []
        for A in dom:
            single = BetaCovering(U, L, ("A",), (FuzzySet(U, L, A),), beta)
            ok = True
            for X in dom:
                t = op(single, FuzzySet(U, L, X)).values
                if joined and not _leq(L, t, g(X)):
                    ok = False
                    break
                if not joined and not _leq(L, g(X), t):
                    ok = False
                    break
            if ok:
                fam.append(A)
        return fam
    everything = set(range(n))
    if direction == "upper":
        R = [[L.implies(beta, g(_char(L, n, {x}))[y]) for y in range(n)] for x in range(n)]
    else:
        R = [[L.implies(beta, L.neg(g(_char(L, n, everything - {x}))[y]))
              for y in range(n)] for x in range(n)]
    for x in range(n):
        R[x][x] = L.top
    return [A for A in dom
            if all(L.le(L.tnorm(R[x][y], A[x]), A[y]) for x in range(n) for y in range(n))]


def _family_covering(g, beta, fam):
    unique = list(dict.fromkeys(fam))
    if not unique:
        raise NotACovering(g.universe.labels[0])
    members = [FuzzySet(g.universe, g.lattice, A) for A in unique]
    return validate_covering(members, beta, [f"K{i + 1}" for i in range(len(members))])


def _induces(C, g, pair, direction):
    return OperatorTable.from_covering(C, pair, direction).first_difference(g) is None


def reconstruct_covering(g: OperatorTable, beta, pair: int, direction: str,
                         method: str = "auto", check_axioms: bool = True) -> BetaCovering:
    """Build a covering inducing ``g`` as the (pair, direction) operator.

    ``method="proof"`` uses the construction of the characterisation
    proof as is.  ``method="canonical"`` uses the largest compatible
    family (see ``_canonical_family``).  ``method="auto"`` tries the
    first, checks the round trip exhaustively and falls back to the
    second.  Duplicate members are dropped.
    """
    if (pair, direction) not in THEOREMS:
        raise ValueError(f"no operator for pair={pair!r}, direction={direction!r}")
    if method not in ("auto", "proof", "canonical"):
        raise ValueError(f"unknown reconstruction method {method!r}")
    beta = check_beta(g.lattice, beta)
    axioms, reqs = THEOREMS[(pair, direction)]
    missing = lattice_meets(g.lattice, reqs)
    if missing:
        raise LatticePreconditionUnmet(f"lattice is not {' and '.join(missing)}")
    if check_axioms:
        failing = [a for a in axioms if not check_axiom(g, beta, a).holds]
        if failing:
            raise AxiomsNotSatisfied(failing)
    if method in ("proof", "auto"):
        try:
            C = _family_covering(g, beta, _proof_family(g, beta, pair, direction))
            if method == "proof" or _induces(C, g, pair, direction):
                return C
        except NotACovering:
            if method == "proof":
                raise
    return _family_covering(g, beta, _canonical_family(g, beta, pair, direction))


def round_trip(g: OperatorTable, beta, pair: int, direction: str, method: str = "auto"):
    """(ok, reconstructed covering or None, first differing X or error text)."""
    try:
        C = reconstruct_covering(g, beta, pair, direction, method=method)
    except (NotACovering, AxiomsNotSatisfied, LatticePreconditionUnmet) as exc:
        return False, None, str(exc)
    h = OperatorTable.from_covering(C, pair, direction)
    diff = g.first_difference(h)
    return diff is None, C, diff


# ---------------------------------------------------------------- Galois maps


@dataclass(frozen=True)
class GaloisMaps:
    """The four maps of a relation R on X x Y (tuples in, tuples out).

    up(A)(y)     = N^b(A, R(-, y))       A on X
    down(B)(x)   = S^b(R(x, -), B)       B on Y
    up2(A)(y)    = S^b(R(-, y), A)       A on X   (the double up arrow)
    down2(B)(x)  = N^b(B, R(x, -))       B on Y   (the double down arrow)
    """

    lattice: ResiduatedLattice
    R: tuple
    beta: object
    corrupt: tuple | None = field(default=None)

    @property
    def shape(self):
        return len(self.R), len(self.R[0])

    def _S(self, A, B):
        L = self.lattice
        return L.implies(self.beta, L.meet_all(L.implies(a, b) for a, b in zip(A, B)))

    def _N(self, A, B):
        L = self.lattice
        return L.tnorm(L.join_all(L.tnorm(a, b) for a, b in zip(A, B)), self.beta)

    def _col(self, y):
        return tuple(row[y] for row in self.R)

    def up(self, A):
        out = [self._N(A, self._col(y)) for y in range(self.shape[1])]
        if self.corrupt is not None:
            y, v = self.corrupt
            if tuple(A) == tuple([self.lattice.top] * self.shape[0]):
                out[y] = v
        return tuple(out)

    def down(self, B):
        return tuple(self._S(self.R[x], B) for x in range(self.shape[0]))

    def up2(self, A):
        return tuple(self._S(self._col(y), A) for y in range(self.shape[1]))

    def down2(self, B):
        return tuple(self._N(B, self.R[x]) for x in range(self.shape[0]))


def galois_maps(R: LatticeMatrix, beta) -> GaloisMaps:
    L = R.lattice
    beta = check_beta(L, beta)
    return GaloisMaps(L, tuple(tuple(row) for row in R.to_rows()), beta)


def _S_plain(L, A, B):
    return L.meet_all(L.implies(a, b) for a, b in zip(A, B))


def check_galois(R, beta=None) -> AxiomVerdict:
    """S(A, down B) = S(up A, B) and S(B, up2 A) = S(down2 B, A), exhaustively."""
    maps = R if isinstance(R, GaloisMaps) else galois_maps(R, beta)
    L = maps.lattice
    nx, ny = maps.shape
    XS = list(itertools.product(L.elements, repeat=nx))
    YS = list(itertools.product(L.elements, repeat=ny))
    ups = {A: maps.up(A) for A in XS}
    up2s = {A: maps.up2(A) for A in XS}
    downs = {B: maps.down(B) for B in YS}
    down2s = {B: maps.down2(B) for B in YS}
    for A in XS:
        for B in YS:
            if _S_plain(L, A, downs[B]) != _S_plain(L, ups[A], B):
                return AxiomVerdict("galois", False, {"pair": "up/down", "A": A, "B": B})
            if _S_plain(L, B, up2s[A]) != _S_plain(L, down2s[B], A):
                return AxiomVerdict("galois", False, {"pair": "down2/up2", "A": A, "B": B})
    return AxiomVerdict("galois", True, None)


def membership_relation(C: BetaCovering) -> LatticeMatrix:
    """The U x C relation R(x, C) = C(x), i.e. the covering matrix."""
    from .lmatrix import m_covering

    return m_covering(C)


# ---------------------------------------------------------------- duality


def duality_grid(values=(), step=0.05):
    k = int(round(1 / step))
    grid = {round(i * step, 12) for i in range(k + 1)}
    grid.update(float(v) for v in values)
    return sorted(grid)


def _duality_b_values(C, X, pair):
    L = C.lattice
    if L.is_finite:
        return list(L.elements)
    vals = list(X.values)
    if pair in (1, 2):
        for m in C.members:
            vals.extend(m.values)
            vals.append(subsethood_beta(m, X, C.beta))
            vals.append(intersection_beta(m, X, C.beta))
    else:
        R = C.arrow
        for j in range(R.cols):
            col = FuzzySet(C.universe, L, R.column(j))
            vals.extend(col.values)
            vals.append(subsethood_beta(col, X, C.beta))
            vals.append(intersection_beta(col, X, C.beta))
    for d in ("lower", "upper"):
        vals.extend(_OPERATORS[(pair, d)](C, X).values)
    return duality_grid(vals)


def check_duality(C: BetaCovering, X: FuzzySet, pair: int) -> AxiomVerdict:
    """Check the b-indexed duality between the two operators of ``pair``.

    pair 1:    upper(X) = meet_b (lower(X -> b) -> b)
    pairs 2,3: lower(X) = meet_b (upper(X -> b) -> b)
    """
    L, n = C.lattice, len(C.universe)
    if pair == 1:
        lhs_op, rhs_op = _OPERATORS[(1, "upper")], _OPERATORS[(1, "lower")]
    elif pair in (2, 3):
        lhs_op, rhs_op = _OPERATORS[(pair, "lower")], _OPERATORS[(pair, "upper")]
    else:
        raise ValueError(f"pair must be 1, 2 or 3, not {pair!r}")
    lhs = lhs_op(C, X).values
    rhs = [L.top] * n
    for b in _duality_b_values(C, X, pair):
        Xb = FuzzySet(C.universe, L, tuple(L.implies(x, b) for x in X.values))
        img = rhs_op(C, Xb).values
        rhs = [L.meet(r, L.implies(v, b)) for r, v in zip(rhs, img)]
    for i in range(n):
        if not L.eq(lhs[i], rhs[i]):
            return AxiomVerdict(f"duality{pair}", False,
                                {"x": i, "lhs": L.format(lhs[i]), "rhs": L.format(rhs[i])})
    return AxiomVerdict(f"duality{pair}", True, None)


# ---------------------------------------------------------------- counterexamples


@dataclass(frozen=True)
class Counterexample:
    name: str
    table: OperatorTable
    beta: object
    axioms: tuple  # the axiom set the example is about
    fails: str  # the single axiom it violates
    pair: tuple


def _table(labels, L, rule):
    U = Universe(tuple(labels))
    n = len(U)
    mp = {}
    for X in domain(U, L):
        support = frozenset(labels[i] for i in range(n) if X[i] != L.bottom)
        mp[X] = rule(X, support)
    return OperatorTable(U, L, mp)


def _crisp(labels, subset):
    return tuple(1 if s in subset else 0 for s in labels)


def _is_crisp_set(X, L):
    return all(v in (L.bottom, L.top) for v in X)


def _build_counterexamples():
    B2 = finite_chain(2)
    T1 = table1()
    T1b = table1(names=("0", "b", "1"))
    xy, xyz = ("x", "y"), ("x", "y", "z")
    out = {}

    def add(name, table, beta, pair, fails):
        axioms = THEOREMS[pair][0]
        out[name] = Counterexample(name, table, beta, axioms, fails, pair)

    add("e4-1-1", _table(xy, B2, lambda X, s: (0, 0)), 1, (1, "lower"), "L1")
    add("e4-1-2", _table(xy, B2, lambda X, s: (0, 0) if not s else (1, 1)), 1, (1, "lower"), "L3")
    top2 = (T1.top,) * 2
    add("e4-2", _table(xy, T1, lambda X, s: top2 if X == top2 else (0, 0)), T1.top, (1, "lower"), "L5")

    def e431(X, s):
        pairs = {frozenset("xy"): "x", frozenset("yz"): "y", frozenset("zx"): "z"}
        if s == frozenset(xyz):
            return (1, 1, 1)
        if s in pairs:
            return _crisp(xyz, {pairs[s]})
        return (0, 0, 0)

    add("e4-3-1", _table(xyz, B2, e431), 1, (1, "lower"), "L4")
    add("e4-3-2", _table(xyz, B2, lambda X, s: (0, 0, 0) if len(s) == 2 else X), 1, (1, "lower"), "L2")

    def e441(X, s):
        return (0, 0) if s in (frozenset(), frozenset("x")) else (0, 1)

    add("e4-4-1", _table(xy, B2, e441), 1, (2, "upper"), "U3")

    def e442(X, s):
        if not s:
            return (0, 0)
        if s == frozenset("x"):
            return (1, 0)
        return (1, 1)

    add("e4-4-2", _table(xy, B2, e442), 1, (2, "upper"), "U8")
    add("e4-5", _table(xy, T1b, lambda X, s: (0, 0) if not s else (T1b.top,) * 2), T1b.top,
        (2, "upper"), "U6")
    add("e4-6", _table(xyz, B2, lambda X, s: X if len(s) <= 1 else (1, 1, 1)), 1, (2, "upper"), "U7")
    # the same operators read against the third-pair axioms
    add("e4-4-1/3", out["e4-4-1"].table, 1, (3, "upper"), "U3")
    add("e4-5/3", out["e4-5"].table, T1b.top, (3, "upper"), "U6")
    add("e4-6/3", out["e4-6"].table, 1, (3, "upper"), "U7")

    def u9(X, s):
        single = {frozenset("z"): {"y", "z"}, frozenset("x"): {"z", "x"}, frozenset("y"): {"x", "y"}}
        if not s:
            return (0, 0, 0)
        if s in single:
            return _crisp(xyz, single[s])
        return (1, 1, 1)

    add("u9", _table(xyz, B2, u9), 1, (3, "upper"), "U9")
    return out


_COUNTEREXAMPLES = None


def counterexample_names():
    return list(_counterexamples())


def _counterexamples():
    global _COUNTEREXAMPLES
    if _COUNTEREXAMPLES is None:
        _COUNTEREXAMPLES = _build_counterexamples()
    return _COUNTEREXAMPLES


def counterexample(name: str) -> Counterexample:
    try:
        return _counterexamples()[name]
    except KeyError:
        raise UnknownCounterexample(f"unknown counterexample {name!r}") from None


def weak_double_negation(L: FiniteLattice, a) -> bool:
    """a = meet_b ((a -> b) -> b)."""
    return L.meet_all(L.implies(L.implies(a, b), b) for b in L.elements) == a


__all__ = [
    "OperatorTable", "AxiomVerdict", "AXIOMS", "THEOREMS", "check_axiom", "violates",
    "classify_operator", "reconstruct_covering", "round_trip", "galois_maps", "check_galois",
    "check_duality", "counterexample", "counterexample_names", "weak_double_negation",
    "membership_relation", "theorem_applies",
]
