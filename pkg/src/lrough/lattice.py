"""Complete residuated lattices.

Two families are provided.  Unit-interval lattices (Goedel, Lukasiewicz,
product) store values as floats and compare them with ``eq_tolerance``.
Finite lattices store values as indices into a named carrier; their
operation tables are checked exhaustively when the lattice is built.

Every lattice exposes scalar operations (``tnorm``, ``implies``, ``meet``,
``join``, ``le``, ``eq``) and numpy-vectorised twins (``tnorm_v``,
``implies_v``, ``meet_reduce``, ``join_reduce``) used by the matrix kernel.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from numbers import Integral, Real

import numpy as np

from .errors import BadCarrier, ForeignValue, ParseError, TableNotResiduated, Undecidable

DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV = "LROUGH_TOLERANCE"


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is None or raw == "":
        return DEFAULT_TOLERANCE
    try:
        tol = float(raw)
    except ValueError as exc:
        raise ParseError(f"{TOLERANCE_ENV}={raw!r} is not a number") from exc
    if tol < 0:
        raise ParseError(f"{TOLERANCE_ENV} must be non-negative")
    return tol


class ResiduatedLattice:
    kind: str = "abstract"
    is_finite: bool = False
    eq_tolerance: float = DEFAULT_TOLERANCE
    bottom = None
    top = None
    dtype = None

    # scalar operations, overridden by subclasses
    def tnorm(self, a, b):
        raise NotImplementedError

    def implies(self, a, b):
        raise NotImplementedError

    def meet(self, a, b):
        raise NotImplementedError

    def join(self, a, b):
        raise NotImplementedError

    def le(self, a, b) -> bool:
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def neg(self, a):
        return self.implies(a, self.bottom)

    def lt(self, a, b) -> bool:
        return self.le(a, b) and not self.eq(a, b)

    def meet_all(self, values):
        acc = self.top
        for v in values:
            acc = self.meet(acc, v)
        return acc

    def join_all(self, values):
        acc = self.bottom
        for v in values:
            acc = self.join(acc, v)
        return acc

    def above_bottom(self, a) -> bool:
        return not self.eq(a, self.bottom)

    def contains(self, v) -> bool:
        raise NotImplementedError

    def check(self, v):
        """Return ``v`` normalised to this lattice or raise ForeignValue."""
        raise NotImplementedError

    def parse(self, token):
        """Read a value from its serialised form (number or carrier name)."""
        raise NotImplementedError

    def format(self, v, digits: int = 9):
        raise NotImplementedError

    def is_regular(self) -> bool:
        raise Undecidable(f"regularity of {self.kind} has no closed form here")

    def is_heyting(self) -> bool:
        raise Undecidable(f"Heyting property of {self.kind} has no closed form here")

    def descriptor(self) -> dict:
        raise NotImplementedError

    @property
    def elements(self):
        return None

    # vectorised operations
    def tnorm_v(self, a, b):
        raise NotImplementedError

    def implies_v(self, a, b):
        raise NotImplementedError

    def meet_reduce(self, arr, axis):
        raise NotImplementedError

    def join_reduce(self, arr, axis):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor()})"


# ---------------------------------------------------------------- unit interval


class UnitIntervalLattice(ResiduatedLattice):
    bottom = 0.0
    top = 1.0
    dtype = np.float64

    def __init__(self, eq_tolerance: float | None = None):
        self.eq_tolerance = default_tolerance() if eq_tolerance is None else float(eq_tolerance)

    def __eq__(self, other):
        return type(self) is type(other) and self.eq_tolerance == other.eq_tolerance

    def __hash__(self):
        return hash((self.kind, self.eq_tolerance))

    def meet(self, a, b):
        return a if a <= b else b

    def join(self, a, b):
        return a if a >= b else b

    def le(self, a, b):
        return a <= b + self.eq_tolerance

    def eq(self, a, b):
        return abs(a - b) <= self.eq_tolerance

    def contains(self, v):
        if isinstance(v, bool) or not isinstance(v, Real):
            return False
        return -self.eq_tolerance <= float(v) <= 1.0 + self.eq_tolerance

    def check(self, v):
        if not self.contains(v):
            raise ForeignValue(f"{v!r} is not a value of the {self.kind} lattice")
        return min(1.0, max(0.0, float(v)))

    def parse(self, token):
        if isinstance(token, str):
            try:
                token = float(Fraction(token.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"cannot read {token!r} as a number") from exc
        return self.check(token)

    def format(self, v, digits=9):
        return round(float(v), digits)

    def descriptor(self):
        return {"kind": self.kind}

    def meet_reduce(self, arr, axis):
        return np.min(arr, axis=axis)

    def join_reduce(self, arr, axis):
        return np.max(arr, axis=axis)


class GodelLattice(UnitIntervalLattice):
    kind = "godel"

    def tnorm(self, a, b):
        return a if a <= b else b

    def implies(self, a, b):
        return 1.0 if a <= b + self.eq_tolerance else b

    def tnorm_v(self, a, b):
        return np.minimum(a, b)

    def implies_v(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        return np.where(a <= b + self.eq_tolerance, 1.0, b)

    def is_regular(self):
        return False

    def is_heyting(self):
        return True


class LukasiewiczLattice(UnitIntervalLattice):
    kind = "lukasiewicz"

    # lo - (1 - hi) and 1 - (a - b) keep results near 0 and 1 exact where
    # a + b - 1 would round, e.g. 1e-9 * 1 = 1e-9
    def tnorm(self, a, b):
        lo, hi = (a, b) if a <= b else (b, a)
        s = lo - (1.0 - hi)
        return s if s > 0.0 else 0.0

    def implies(self, a, b):
        return 1.0 if a <= b + self.eq_tolerance else 1.0 - (a - b)

    def tnorm_v(self, a, b):
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        return np.maximum(lo - (1.0 - hi), 0.0)

    def implies_v(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        return np.where(a <= b + self.eq_tolerance, 1.0, 1.0 - (a - b))

    def is_regular(self):
        return True

    def is_heyting(self):
        return False


class ProductLattice(UnitIntervalLattice):
    kind = "product"

    def tnorm(self, a, b):
        return a * b

    def implies(self, a, b):
        return 1.0 if a <= b + self.eq_tolerance else b / a

    def tnorm_v(self, a, b):
        return np.multiply(a, b)

    def implies_v(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        le = a <= b + self.eq_tolerance
        # where a > b + tol the divisor is above tol, so no overflow
        safe = np.where(le, 1.0, a)
        return np.where(le, 1.0, b / safe)

    def is_regular(self):
        return False

    def is_heyting(self):
        return False


# ---------------------------------------------------------------- finite


class FiniteLattice(ResiduatedLattice):
    """A finite residuated lattice given by its operation tables.

    Values are carrier indices.  The order is read off the implication
    table (a <= b iff a -> b is the top), then every law is checked.
    """

    is_finite = True
    dtype = np.int64

    def __init__(self, names, tnorm_table, impl_table, *, kind="table", params=None,
                 eq_tolerance=None):
        self.kind = kind
        self.params = dict(params or {})
        self.eq_tolerance = default_tolerance() if eq_tolerance is None else float(eq_tolerance)
        names = tuple(str(s) for s in names)
        n = len(names)
        if n < 2:
            raise BadCarrier("carrier needs at least a bottom and a top")
        if len(set(names)) != n:
            raise BadCarrier("carrier names must be unique")
        t = _square(tnorm_table, n, "tnorm")
        r = _square(impl_table, n, "impl")
        self.names = names
        self.bottom = 0
        self.top = n - 1
        self._t = t
        self._r = r
        self._leq = tuple(tuple(r[a][b] == self.top for b in range(n)) for a in range(n))
        self._check_order()
        self._m = self._bound_table(lower=True)
        self._j = self._bound_table(lower=False)
        self._check_monoid()
        self._check_adjoint()
        self._index = {s: i for i, s in enumerate(names)}
        self._T = np.array(t, dtype=np.int64)
        self._R = np.array(r, dtype=np.int64)
        self._M = np.array(self._m, dtype=np.int64)
        self._J = np.array(self._j, dtype=np.int64)
        # when the index order is a linear extension of a chain, min/max on indices are meet/join
        self._monotone_chain = all(self._leq[i][j] for i in range(n) for j in range(i, n))

    # -- validation

    def _check_order(self):
        n, le = len(self.names), self._leq
        for a in range(n):
            if not le[a][a]:
                raise BadCarrier(f"order not reflexive at {self.names[a]}")
            if not le[0][a]:
                raise BadCarrier(f"first carrier element is not below {self.names[a]}")
            if not le[a][n - 1]:
                raise BadCarrier(f"last carrier element is not above {self.names[a]}")
        for a, b in itertools.product(range(n), repeat=2):
            if a != b and le[a][b] and le[b][a]:
                raise BadCarrier(f"order not antisymmetric: {self.names[a]}, {self.names[b]}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if le[a][b] and le[b][c] and not le[a][c]:
                raise BadCarrier("order not transitive")

    def _bound_table(self, lower):
        n, le = len(self.names), self._leq
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                if lower:
                    cands = [c for c in range(n) if le[c][a] and le[c][b]]
                    best = [c for c in cands if all(le[d][c] for d in cands)]
                else:
                    cands = [c for c in range(n) if le[a][c] and le[b][c]]
                    best = [c for c in cands if all(le[c][d] for d in cands)]
                if len(best) != 1:
                    what = "meet" if lower else "join"
                    raise BadCarrier(f"no {what} for {self.names[a]}, {self.names[b]}: not a lattice")
                row.append(best[0])
            table.append(tuple(row))
        return tuple(table)

    def _check_monoid(self):
        n, t, j, nm = len(self.names), self._t, self._j, self.names
        for a in range(n):
            if t[self.top][a] != a:
                raise TableNotResiduated(f"top is not a unit: 1*{nm[a]} != {nm[a]}")
            if t[a][0] != 0:
                raise TableNotResiduated(f"{nm[a]}*0 != 0")
        for a, b in itertools.product(range(n), repeat=2):
            if t[a][b] != t[b][a]:
                raise TableNotResiduated(f"tnorm not commutative at {nm[a]}, {nm[b]}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise TableNotResiduated(f"tnorm not associative at {nm[a]}, {nm[b]}, {nm[c]}")
            if t[a][j[b][c]] != j[t[a][b]][t[a][c]]:
                raise TableNotResiduated(f"tnorm does not distribute over join at {nm[a]}, {nm[b]}, {nm[c]}")

    def _check_adjoint(self):
        n, t, r, le, nm = len(self.names), self._t, self._r, self._leq, self.names
        for a, b, c in itertools.product(range(n), repeat=3):
            if le[t[a][b]][c] != le[b][r[a][c]]:
                raise TableNotResiduated(f"adjoint property fails at a={nm[a]}, b={nm[b]}, c={nm[c]}")

    # -- identity

    def __eq__(self, other):
        return (isinstance(other, FiniteLattice) and self.names == other.names
                and self._t == other._t and self._r == other._r)

    def __hash__(self):
        return hash((self.names, self._t))

    def __len__(self):
        return len(self.names)

    @property
    def elements(self):
        return tuple(range(len(self.names)))

    # -- scalar operations

    def tnorm(self, a, b):
        return self._t[a][b]

    def implies(self, a, b):
        return self._r[a][b]

    def meet(self, a, b):
        return self._m[a][b]

    def join(self, a, b):
        return self._j[a][b]

    def le(self, a, b):
        return self._leq[a][b]

    def eq(self, a, b):
        return a == b

    def contains(self, v):
        return isinstance(v, Integral) and not isinstance(v, bool) and 0 <= v < len(self.names)

    def check(self, v):
        if not self.contains(v):
            raise ForeignValue(f"{v!r} is not a carrier index of this {len(self.names)}-element lattice")
        return int(v)

    def value(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ForeignValue(f"{name!r} is not in the carrier {list(self.names)}") from None

    def parse(self, token):
        if isinstance(token, str):
            if token in self._index:
                return self._index[token]
            raise ForeignValue(f"{token!r} is not in the carrier {list(self.names)}")
        if isinstance(token, bool) or not isinstance(token, Real):
            raise ParseError(f"cannot read {token!r} as a carrier element")
        if float(token) == int(token) and str(int(token)) in self._index:
            return self._index[str(int(token))]
        raise ForeignValue(f"{token!r} is not in the carrier {list(self.names)}")

    def format(self, v, digits=9):
        return self.names[v]

    def is_regular(self):
        return all(self.neg(self.neg(a)) == a for a in self.elements)

    def is_heyting(self):
        return self._t == self._m

    def is_chain(self):
        n = len(self.names)
        return all(self._leq[a][b] or self._leq[b][a] for a in range(n) for b in range(n))

    def descriptor(self):
        if self.kind in ("finite_chain", "finite_lukasiewicz"):
            return {"kind": self.kind, "n": len(self.names)}
        nm = self.names
        return {
            "kind": "table",
            "carrier": list(nm),
            "tnorm": [[nm[v] for v in row] for row in self._t],
            "impl": [[nm[v] for v in row] for row in self._r],
        }

    # -- vectorised operations

    def tnorm_v(self, a, b):
        return self._T[a, b]

    def implies_v(self, a, b):
        return self._R[a, b]

    def _fold(self, arr, axis, table):
        arr = np.moveaxis(np.asarray(arr), axis, 0)
        acc = arr[0]
        for k in range(1, arr.shape[0]):
            acc = table[acc, arr[k]]
        return acc

    def meet_reduce(self, arr, axis):
        if self._monotone_chain:
            return np.min(arr, axis=axis)
        return self._fold(arr, axis, self._M)

    def join_reduce(self, arr, axis):
        if self._monotone_chain:
            return np.max(arr, axis=axis)
        return self._fold(arr, axis, self._J)


def _square(table, n, what):
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise TableNotResiduated(f"{what} table is not a matrix of carrier indices") from exc
    if len(rows) != n or any(len(row) != n for row in rows):
        raise TableNotResiduated(f"{what} table must be {n}x{n}")
    if any(not 0 <= v < n for row in rows for v in row):
        raise TableNotResiduated(f"{what} table has entries outside the carrier")
    return rows


def residuum_table(leq, tnorm_table):
    """Implication table induced by a tnorm on a finite lattice order.

    a -> c is the join of all b with a*b <= c; ``None`` is returned when that
    set has no largest element (the tnorm is then not residuated).
    """
    n = len(leq)
    table = []
    for a in range(n):
        row = []
        for c in range(n):
            cands = [b for b in range(n) if leq[tnorm_table[a][b]][c]]
            best = [b for b in cands if all(leq[d][b] for d in cands)]
            if len(best) != 1:
                return None
            row.append(best[0])
        table.append(row)
    return table


def chain_names(n):
    return ["0"] + [f"{i}/{n - 1}" for i in range(1, n - 1)] + ["1"]


def godel(eq_tolerance=None):
    return GodelLattice(eq_tolerance)


def lukasiewicz(eq_tolerance=None):
    return LukasiewiczLattice(eq_tolerance)


def product(eq_tolerance=None):
    return ProductLattice(eq_tolerance)


def finite_chain(n: int, eq_tolerance=None) -> FiniteLattice:
    """Goedel (min) chain with ``n`` elements named 0, 1/(n-1), ..., 1."""
    if n < 2:
        raise BadCarrier("a chain needs at least two elements")
    t = [[min(i, j) for j in range(n)] for i in range(n)]
    r = [[n - 1 if i <= j else j for j in range(n)] for i in range(n)]
    return FiniteLattice(chain_names(n), t, r, kind="finite_chain", params={"n": n},
                         eq_tolerance=eq_tolerance)


def finite_lukasiewicz(n: int, eq_tolerance=None) -> FiniteLattice:
    """Lukasiewicz chain with ``n`` elements i/(n-1)."""
    if n < 2:
        raise BadCarrier("a chain needs at least two elements")
    top = n - 1
    t = [[max(0, i + j - top) for j in range(n)] for i in range(n)]
    r = [[min(top, top - i + j) for j in range(n)] for i in range(n)]
    return FiniteLattice(chain_names(n), t, r, kind="finite_lukasiewicz", params={"n": n},
                         eq_tolerance=eq_tolerance)


def table1(names=("0", "a", "1"), eq_tolerance=None) -> FiniteLattice:
    """Three-element Heyting chain 0 < a < 1 with tnorm = meet."""
    t = [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
    r = [[2, 2, 2], [0, 2, 2], [0, 1, 2]]
    return FiniteLattice(names, t, r, kind="table", eq_tolerance=eq_tolerance)


def boolean(eq_tolerance=None) -> FiniteLattice:
    return finite_chain(2, eq_tolerance)


_PRESETS = {
    "godel": godel,
    "lukasiewicz": lukasiewicz,
    "product": product,
    "table1": table1,
    "boolean": boolean,
}


def build_lattice(desc, eq_tolerance=None) -> ResiduatedLattice:
    """Build and verify a lattice from a preset name or a descriptor dict.

    >>> build_lattice({"kind": "finite_chain", "n": 3}).names
    ('0', '1/2', '1')
    """
    if isinstance(desc, ResiduatedLattice):
        return desc
    if isinstance(desc, str):
        desc = {"kind": desc}
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ParseError("lattice descriptor must be an object with a 'kind' field")
    kind = desc["kind"]
    if kind in _PRESETS:
        return _PRESETS[kind](eq_tolerance=eq_tolerance)
    if kind in ("finite_chain", "finite_lukasiewicz"):
        n = desc.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"{kind} descriptor needs an integer 'n'")
        maker = finite_chain if kind == "finite_chain" else finite_lukasiewicz
        return maker(n, eq_tolerance=eq_tolerance)
    if kind == "table":
        for key in ("carrier", "tnorm", "impl"):
            if key not in desc:
                raise ParseError(f"table descriptor is missing '{key}'")
        carrier = [str(s) for s in desc["carrier"]]
        index = {s: i for i, s in enumerate(carrier)}

        def conv(table, what):
            try:
                return [[index[str(v)] for v in row] for row in table]
            except KeyError as exc:
                raise TableNotResiduated(f"{what} table mentions {exc.args[0]!r}, not in carrier") from None
            except TypeError:
                raise ParseError(f"{what} table must be a list of rows") from None

        return FiniteLattice(carrier, conv(desc["tnorm"], "tnorm"), conv(desc["impl"], "impl"),
                             eq_tolerance=eq_tolerance)
    raise ParseError(f"unknown lattice kind {kind!r}")


def tnorm(L: ResiduatedLattice, a, b):
    return L.tnorm(L.check(a), L.check(b))


def implication(L: ResiduatedLattice, a, b):
    return L.implies(L.check(a), L.check(b))


def negation(L: ResiduatedLattice, a):
    return L.neg(L.check(a))


def is_regular(L: ResiduatedLattice) -> bool:
    return L.is_regular()


def is_heyting(L: ResiduatedLattice) -> bool:
    return L.is_heyting()


def _diamond_leq():
    # 0 < a, b < 1 with a, b incomparable
    le = [[True] * 4, [False, True, False, True], [False, False, True, True], [False, False, False, True]]
    return le


def all_finite_lattices(max_size: int = 4):
    """Every residuated structure on every lattice with 2..max_size elements.

    Only sizes up to 4 are supported: the underlying lattices are then the
    chains and, at four elements, the diamond 2x2.  Isomorphic copies are
    not removed.
    """
    if max_size > 4:
        raise ValueError("enumeration is implemented up to four elements")
    shapes = []
    for n in range(2, max_size + 1):
        leq = [[i <= j for j in range(n)] for i in range(n)]
        names = ["0"] + ["abc"[i] for i in range(n - 2)] + ["1"]
        shapes.append((names, leq))
    if max_size >= 4:
        shapes.append((["0", "a", "b", "1"], _diamond_leq()))
    found = []
    for names, leq in shapes:
        n = len(names)
        inner = list(range(1, n - 1))
        pairs = [(i, j) for i in inner for j in inner if i <= j]
        for values in itertools.product(range(n), repeat=len(pairs)):
            t = [[0] * n for _ in range(n)]
            for a in range(n):
                t[n - 1][a] = t[a][n - 1] = a
            for (i, j), v in zip(pairs, values):
                t[i][j] = t[j][i] = v
            r = residuum_table(leq, t)
            if r is None:
                continue
            try:
                L = FiniteLattice(names, t, r)
            except (TableNotResiduated, BadCarrier):
                continue
            # the derived order must be the intended one
            if [list(row) for row in L._leq] != leq:
                continue
            found.append(L)
    return found
