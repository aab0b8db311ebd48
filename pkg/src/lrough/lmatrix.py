"""Lattice-valued matrices and the two compositions.

``tri`` (the triangle product) folds ``a_ik -> b_kj`` with meets, ``btri``
(the black triangle) folds ``a_ik * b_kj`` with joins.  Both go through one
kernel parameterised by the entrywise combine and the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, LatticeMismatch, UniverseMismatch
from .fuzzy_set import FuzzySet, check_beta
from .lattice import ResiduatedLattice

# rows of A processed per block; keeps the (rows, m, l) temporary small
_BLOCK_CELLS = 1 << 22


@dataclass(frozen=True, eq=False)
class LatticeMatrix:
    lattice: ResiduatedLattice
    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=self.lattice.dtype)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatch(f"a lattice matrix needs a positive 2-d shape, got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_rows(cls, lattice, rows):
        return cls(lattice, np.array([[lattice.check(v) for v in row] for row in rows],
                                     dtype=lattice.dtype))

    @property
    def shape(self):
        return self.data.shape

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def T(self):
        return transpose(self)

    def entry(self, i, j):
        v = self.data[i, j]
        return int(v) if self.lattice.is_finite else float(v)

    def to_rows(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j):
        return tuple(self.entry(i, j) for i in range(self.rows))

    def equals(self, other: "LatticeMatrix") -> bool:
        if self.lattice != other.lattice or self.shape != other.shape:
            return False
        if self.lattice.is_finite:
            return bool(np.array_equal(self.data, other.data))
        return bool(np.all(np.abs(self.data - other.data) <= self.lattice.eq_tolerance))

    def max_deviation(self, other: "LatticeMatrix") -> float:
        if self.shape != other.shape:
            raise DimensionMismatch("shapes differ")
        if self.lattice.is_finite:
            return float(np.count_nonzero(self.data != other.data))
        return float(np.max(np.abs(self.data - other.data)))

    def __repr__(self):
        fmt = self.lattice.format
        body = "; ".join(" ".join(str(fmt(v, 4)) for v in row) for row in self.to_rows())
        return f"LatticeMatrix({self.rows}x{self.cols}: {body})"


def transpose(A: LatticeMatrix) -> LatticeMatrix:
    return LatticeMatrix(A.lattice, A.data.T)


def _product(A: LatticeMatrix, B: LatticeMatrix, combine, reduce) -> LatticeMatrix:
    if A.lattice != B.lattice:
        raise LatticeMismatch("matrix operands use different lattices")
    n, m = A.shape
    m2, l = B.shape
    if m != m2:
        raise DimensionMismatch(f"inner dimensions differ: {A.shape} and {B.shape}")
    out = np.empty((n, l), dtype=A.lattice.dtype)
    step = max(1, _BLOCK_CELLS // max(1, m * l))
    b = B.data[None, :, :]
    for start in range(0, n, step):
        a = A.data[start:start + step, :, None]
        out[start:start + step] = reduce(combine(a, b), 1)
    return LatticeMatrix(A.lattice, out)


def _scalar_map(alpha, B, op):
    L = B.lattice
    alpha = L.check(alpha)
    return LatticeMatrix(L, op(np.asarray(alpha, dtype=L.dtype), B.data))


def tri(A, B):
    """c_ij = meet_k (a_ik -> b_kj); a scalar on the left acts entrywise."""
    if isinstance(A, LatticeMatrix) and isinstance(B, LatticeMatrix):
        return _product(A, B, A.lattice.implies_v, A.lattice.meet_reduce)
    if isinstance(B, LatticeMatrix):
        return _scalar_map(A, B, B.lattice.implies_v)
    if isinstance(A, LatticeMatrix):
        raise DimensionMismatch("a scalar right operand is not defined for the triangle product")
    raise TypeError("scalar-scalar products need a lattice: use lattice.implies")


def btri(A, B):
    """d_ij = join_k (a_ik * b_kj); a scalar on either side acts entrywise."""
    if isinstance(A, LatticeMatrix) and isinstance(B, LatticeMatrix):
        return _product(A, B, A.lattice.tnorm_v, A.lattice.join_reduce)
    if isinstance(B, LatticeMatrix):
        return _scalar_map(A, B, B.lattice.tnorm_v)
    if isinstance(A, LatticeMatrix):
        # the tnorm is commutative, so M * beta = beta * M
        return _scalar_map(B, A, A.lattice.tnorm_v)
    raise TypeError("scalar-scalar products need a lattice: use lattice.tnorm")


def m_set(A: FuzzySet) -> LatticeMatrix:
    """Column matrix of a fuzzy set."""
    return LatticeMatrix(A.lattice, np.array(A.values, dtype=A.lattice.dtype).reshape(-1, 1))


def m_covering(C) -> LatticeMatrix:
    """n x m matrix with entry (i, j) = C_j(x_i)."""
    cols = [m.values for m in C.members]
    return LatticeMatrix(C.lattice, np.array(cols, dtype=C.lattice.dtype).T)


def relation_matrix(C) -> LatticeMatrix:
    M = m_covering(C)
    return tri(M, M.T)


def _as_set(M: LatticeMatrix, C) -> FuzzySet:
    return FuzzySet(C.universe, C.lattice, M.column(0))


def approx_via_matrix(C, X: FuzzySet, pair: int, direction: str) -> FuzzySet:
    """Evaluate one of the six operators by matrix products only."""
    if X.universe != C.universe:
        raise UniverseMismatch("target and covering live on different universes")
    if X.lattice != C.lattice:
        raise LatticeMismatch("target and covering use different lattices")
    beta = check_beta(C.lattice, C.beta)
    MX = m_set(X)
    if pair in (1, 2):
        M = m_covering(C)
        Mt = M.T
        if direction == "lower":
            inner = tri(beta, tri(Mt, MX))
            out = btri(M, inner) if pair == 1 else tri(M, inner)
        elif direction == "upper":
            inner = btri(btri(Mt, MX), beta)
            out = tri(M, inner) if pair == 1 else btri(M, inner)
        else:
            raise ValueError(f"direction must be lower or upper, not {direction!r}")
    elif pair == 3:
        Rt = relation_matrix(C).T
        if direction == "lower":
            out = tri(beta, tri(Rt, MX))
        elif direction == "upper":
            out = btri(btri(Rt, MX), beta)
        else:
            raise ValueError(f"direction must be lower or upper, not {direction!r}")
    else:
        raise ValueError(f"pair must be 1, 2 or 3, not {pair!r}")
    return _as_set(out, C)
