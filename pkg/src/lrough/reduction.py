"""Reducible and independent members, reducts and cores.

A member is *reducible* when it is the join of other members and
*independent* when it is the meet of other members.  The reduct drops the
reducible members, the core drops the independent ones.  (The word
"independent" names the removable, meet-decomposable members here, the
opposite of the usual rough-set reading of "core".)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .approx import OPERATORS
from .covering import BetaCovering, require_same_context, validate_covering
from .errors import UnknownMember


@dataclass(frozen=True)
class ReductionReport:
    kind: str  # "reduct" or "core"
    original: tuple
    removed: dict = field(default_factory=dict)  # name -> witness names
    covering: BetaCovering | None = None

    @property
    def surviving(self):
        return self.covering.names

    def to_dict(self, digits=9):
        return {
            "kind": self.kind,
            "original": list(self.original),
            "removed": {k: list(v) for k, v in self.removed.items()},
            "surviving": list(self.surviving),
            "covering": self.covering.to_dict(digits),
        }


def _index(C: BetaCovering, name) -> int:
    try:
        return C.names.index(name)
    except ValueError:
        raise UnknownMember(f"{name!r} is not a member of the covering") from None


def _decompose(C, k, pool, upward):
    """Witnesses from ``pool`` whose join (meet if ``upward``) equals member k."""
    L = C.lattice
    target = C.members[k].values
    n = len(target)
    fold = L.meet_all if upward else L.join_all
    cmp = (lambda a, b: L.le(b, a)) if upward else L.le
    cands = [i for i in pool if i != k
             and all(cmp(a, b) for a, b in zip(C.members[i].values, target))]

    def reproduces(idx):
        if not idx:
            return False
        return all(L.eq(fold(C.members[i].values[x] for i in idx), target[x]) for x in range(n))

    if not reproduces(cands):
        return None
    # drop candidates that are not needed, scanning from the back
    needed = list(cands)
    for i in reversed(cands):
        trial = [j for j in needed if j != i]
        if reproduces(trial):
            needed = trial
    return needed


def is_reducible(C: BetaCovering, member):
    """Names of dominated members whose join is ``member``, or None."""
    k = _index(C, member)
    w = _decompose(C, k, range(len(C.members)), upward=False)
    return None if w is None else [C.names[i] for i in w]


def is_independent(C: BetaCovering, member):
    """Names of dominating members whose meet is ``member``, or None."""
    k = _index(C, member)
    w = _decompose(C, k, range(len(C.members)), upward=True)
    return None if w is None else [C.names[i] for i in w]


def _reduce(C: BetaCovering, upward: bool, kind: str) -> ReductionReport:
    removed = {}
    distinct = []
    # value-identical duplicates: the earliest one stays
    for k, m in enumerate(C.members):
        twin = next((i for i in distinct if C.members[i] == m), None)
        if twin is None:
            distinct.append(k)
        else:
            removed[C.names[k]] = [C.names[twin]]
    drop = {}
    for k in distinct:
        w = _decompose(C, k, distinct, upward)
        if w is not None:
            drop[k] = [C.names[i] for i in w]
    keep = [k for k in distinct if k not in drop]
    for k in sorted(drop):
        removed[C.names[k]] = drop[k]
    removed = {n: removed[n] for n in C.names if n in removed}
    survivor = validate_covering([C.members[k] for k in keep], C.beta, [C.names[k] for k in keep])
    return ReductionReport(kind, C.names, removed, survivor)


def reduct(C: BetaCovering) -> ReductionReport:
    return _reduce(C, upward=False, kind="reduct")


def core(C: BetaCovering) -> ReductionReport:
    return _reduce(C, upward=True, kind="core")


def same_family(C1: BetaCovering, C2: BetaCovering) -> bool:
    """Equality of member sets up to value identity (names ignored)."""
    a, b = C1.members, C2.members
    return all(any(x == y for y in b) for x in a) and all(any(x == y for x in a) for y in b)


def same_operators(C1: BetaCovering, C2: BetaCovering, pair: int) -> bool:
    """Compare reducts (pairs 1 and 3) or cores (pair 2) of two coverings."""
    require_same_context(C1, C2)
    if pair in (1, 3):
        return same_family(reduct(C1).covering, reduct(C2).covering)
    if pair == 2:
        return same_family(core(C1).covering, core(C2).covering)
    raise ValueError(f"pair must be 1, 2 or 3, not {pair!r}")


def operators_agree(C1: BetaCovering, C2: BetaCovering, pair: int, targets) -> bool:
    """Brute-force check that both coverings induce the same pair on ``targets``."""
    require_same_context(C1, C2)
    for X in targets:
        for d in ("lower", "upper"):
            op = OPERATORS[(pair, d)]
            if op(C1, X) != op(C2, X):
                return False
    return True


def subset_search(C: BetaCovering, member, upward=False):
    """Exponential oracle: smallest subset of other members whose join (meet) is ``member``."""
    k = _index(C, member)
    L = C.lattice
    target = C.members[k].values
    others = [i for i in range(len(C.members)) if i != k]
    fold = L.meet_all if upward else L.join_all
    for size in range(1, len(others) + 1):
        for idx in itertools.combinations(others, size):
            if all(L.eq(fold(C.members[i].values[x] for i in idx), target[x])
                   for x in range(len(target))):
                return [C.names[i] for i in idx]
    return None
