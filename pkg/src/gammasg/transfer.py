"""The four intuitionistic fuzzy transfer maps between S and its operator semigroups.

    star       IFS(R) -> IFS(S)   mu*(a)      = min_g mu([g, a])
    star_prime IFS(S) -> IFS(R)   mu*'([a,x]) = min_s mu(s a x)
    plus       IFS(L) -> IFS(S)   mu+(a)      = min_g mu([a, g])
    plus_prime IFS(S) -> IFS(L)   mu+'([x,a]) = min_s mu(x a s)

with max in place of min for nu.  Index plans come from
:meth:`OperatorContext.gather`, which already asserted that they do not
depend on the chosen class representative.
"""
from __future__ import annotations

from .fuzzy import IFSubset
from .operator import MAPS, OperatorContext, normalize_map


def transfer_fuzzy(A: IFSubset, map_name: str, ctx: OperatorContext) -> IFSubset:
    name = normalize_map(map_name)
    ctx.check_carrier(A, name)
    plan = ctx.gather(name)
    mu = tuple(min(A.mu[int(j)] for j in row) for row in plan)
    nu = tuple(max(A.nu[int(j)] for j in row) for row in plan)
    return IFSubset(ctx.carrier(MAPS[name][1]), mu, nu)


def star(A: IFSubset, ctx: OperatorContext) -> IFSubset:
    return transfer_fuzzy(A, "star", ctx)


def star_prime(A: IFSubset, ctx: OperatorContext) -> IFSubset:
    return transfer_fuzzy(A, "star_prime", ctx)


def plus(A: IFSubset, ctx: OperatorContext) -> IFSubset:
    return transfer_fuzzy(A, "plus", ctx)


def plus_prime(A: IFSubset, ctx: OperatorContext) -> IFSubset:
    return transfer_fuzzy(A, "plus_prime", ctx)


# round trips

def star_prime_then_star(B: IFSubset, ctx: OperatorContext) -> IFSubset:
    """(B*')* for B over S."""
    return star(star_prime(B, ctx), ctx)


def star_then_star_prime(B: IFSubset, ctx: OperatorContext) -> IFSubset:
    """(B*)*' for B over R."""
    return star_prime(star(B, ctx), ctx)


def plus_prime_then_plus(A: IFSubset, ctx: OperatorContext) -> IFSubset:
    """(A+')+ for A over S."""
    return plus(plus_prime(A, ctx), ctx)


def plus_then_plus_prime(B: IFSubset, ctx: OperatorContext) -> IFSubset:
    """(B+)+' for B over L."""
    return plus_prime(plus(B, ctx), ctx)
