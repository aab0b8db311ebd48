"""Lattice-valued covering-based rough approximation toolkit."""

from .approx import OPERATORS, approx, lower1, lower2, lower3, upper1, upper2, upper3
from .covering import BetaCovering, max_beta, relation_arrow, relation_sym, validate_covering
from .errors import DomainError, InvariantViolation, LRoughError, NotACovering, ParseError
from .fuzzy_set import FuzzySet, Universe, characteristic, constant, fuzzy_set
from .lattice import (
    FiniteLattice,
    ResiduatedLattice,
    boolean,
    build_lattice,
    finite_chain,
    finite_lukasiewicz,
    godel,
    implication,
    is_heyting,
    is_regular,
    lukasiewicz,
    negation,
    product,
    table1,
    tnorm,
)
from .lmatrix import LatticeMatrix, approx_via_matrix, btri, m_covering, m_set, relation_matrix, tri
from .reduction import core, is_independent, is_reducible, reduct, same_operators

__version__ = "0.1.0"
