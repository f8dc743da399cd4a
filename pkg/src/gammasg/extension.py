"""Intuitionistic fuzzy ideal extensions.

On S:              <x, A>(y) = (min_g mu(x g y), max_g nu(x g y)).
On L or R:         <r, B>(q) = (mu(r q), nu(r q)) under the Cayley product.
"""
from __future__ import annotations

from .core import GammaSemigroup, InputError
from .fuzzy import IFSubset
from .operator import OperatorSemigroup


def extend(A: IFSubset, x: int) -> IFSubset:
    S = A.carrier
    if not isinstance(S, GammaSemigroup):
        raise InputError(f"extend expects a subset of S, got one over {S.tag}")
    if not 0 <= x < S.s_size:
        raise InputError(f"element {x} outside S of size {S.s_size}")
    rows = [S.table[x, :, y] for y in S.elements()]
    mu = tuple(min(A.mu[int(z)] for z in row) for row in rows)
    nu = tuple(max(A.nu[int(z)] for z in row) for row in rows)
    return IFSubset(S, mu, nu)


def extend_op(B: IFSubset, r: int) -> IFSubset:
    op = B.carrier
    if not isinstance(op, OperatorSemigroup):
        raise InputError(f"extend_op expects a subset of L or R, got one over {op.tag}")
    if not 0 <= r < op.class_count:
        raise InputError(f"class {r} outside {op.tag} of size {op.class_count}")
    targets = [int(op.cayley[r, q]) for q in range(op.class_count)]
    return IFSubset(op, tuple(B.mu[z] for z in targets), tuple(B.nu[z] for z in targets))


def extend_any(A: IFSubset, by: int) -> IFSubset:
    """Dispatch on the carrier: ``extend`` over S, ``extend_op`` over L or R."""
    if isinstance(A.carrier, GammaSemigroup):
        return extend(A, by)
    return extend_op(A, by)
