"""The catalog of machine-checked claims.

Each entry pairs a stable id with a hypothesis gate, the kind of witness it
ranges over, a statement in plain mathematical terms and an assertion.  An
assertion is a generator: given one instance's :class:`InstanceData` and a
:class:`Tally` for skips, it yields :class:`Outcome` blocks, each a boolean
array of per-case verdicts plus a lazy witness builder for any row.
"""
from __future__ import annotations

import dataclasses
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .. import batch
from ..batch import FuzzyFlagCache, Grades
from ..core import InputError
from ..fuzzy import format_grade
from ..operator import MAPS
from .population import InstanceData, families, family_members, inclusion_pairs

HYPOTHESES = ("none", "both-unities", "commutative", "commutative+unities")
WITNESS_KINDS = ("crisp subsets", "fuzzy subsets", "fuzzy-ideal subsets", "ideal families")

# per operator side: maps down to S and up from S, and the one-sided notion each preserves
SIDES = {
    "R": {"down": "star", "up": "star_prime", "crisp": "left_ideal", "fuzzy": "ifli"},
    "L": {"down": "plus", "up": "plus_prime", "crisp": "right_ideal", "fuzzy": "ifri"},
}


@dataclass
class Witness:
    """A failing case: the instance, the subsets involved and what went wrong."""
    check_id: str
    instance: object
    subsets: list            # (label, "crisp" | "fuzzy", subset)
    detail: str


@dataclass
class Outcome:
    ok: np.ndarray
    witness: Callable[[int], tuple[list, str]]


@dataclass
class Tally:
    skips: Counter = field(default_factory=Counter)

    def skip(self, reason: str, count=1):
        count = int(count)
        if count:
            self.skips[reason] += count


@dataclass(frozen=True)
class CheckEntry:
    id: str
    hypothesis: str
    witness_kind: str
    statement: str
    assertion: Callable[[InstanceData, Tally], Iterator[Outcome]]
    negated: bool = False


def negate(entry: CheckEntry) -> CheckEntry:
    """The same entry with its assertion inverted (mutation self-test)."""
    return dataclasses.replace(entry, negated=not entry.negated)


# ---------------------------------------------------------------------------
# formatting helpers for witness details

def fmt_set(row) -> str:
    return "{" + ",".join(str(int(i)) for i in np.flatnonzero(row)) + "}"


def fmt_grades(G: Grades, i: int) -> str:
    mu, nu = G.fraction_rows(int(i))
    return ("mu=(" + ",".join(format_grade(v) for v in mu) + ") nu=("
            + ",".join(format_grade(v) for v in nu) + ")")


def _crisp_item(d: InstanceData, tag: str, row, label="P"):
    return (label, "crisp", d.crisp_subset(tag, row))


def _fuzzy_item(d: InstanceData, tag: str, G: Grades, i: int, label="A"):
    return (label, "fuzzy", d.fuzzy_subset(tag, G, i))


def _nonempty_rows(d: InstanceData, tag: str, kind: str, tally: Tally) -> np.ndarray:
    F = d.crisp_flags(tag)
    tally.skip("empty subset", (F[kind] & F["empty"]).sum())
    return np.flatnonzero(F[kind] & ~F["empty"])


# ---------------------------------------------------------------------------
# assertion factories

def crisp_transfer(map_name: str, kinds: tuple[str, ...]):
    """Crisp subsets of the source with property ``kind`` map to subsets with the same property."""
    src, dst = MAPS[map_name]

    def run(d: InstanceData, tally: Tally):
        X = d.crisp(src)
        img = d.cmap(map_name, X)
        G = batch.crisp_flags(d.frame(dst), img)
        for kind in kinds:
            rows = _nonempty_rows(d, src, kind, tally)

            def wit(j, rows=rows, kind=kind):
                r = rows[j]
                return ([_crisp_item(d, src, X[r])],
                        f"{kind} {fmt_set(X[r])} of {src} maps under {map_name} to {fmt_set(img[r])} "
                        f"with {kind}={bool(G[kind][r])}")
            yield Outcome(G[kind][rows], wit)
    return run


def fuzzy_transfer(map_name: str, kinds: tuple[str, ...]):
    """Fuzzy subsets of the source with property ``kind`` map to ones with the same property."""
    src, dst = MAPS[map_name]

    def run(d: InstanceData, tally: Tally):
        A = d.fuzzy(src)
        F = d.fuzzy_flags(src)
        for kind in kinds:
            rows = np.flatnonzero(F[kind])
            img = d.fmap(map_name, A.take(rows))
            ok = FuzzyFlagCache(d.frame(dst), img)[kind]

            def wit(j, rows=rows, img=img, ok=ok, kind=kind):
                return ([_fuzzy_item(d, src, A, rows[j])],
                        f"{kind} A of {src} maps under {map_name} to {fmt_grades(img, j)} "
                        f"with {kind}={bool(ok[j])}")
            yield Outcome(ok, wit)
    return run


def level_commutation(map_name: str):
    """Transfer of the level sets of A equals the level sets of the transferred A."""
    src, _ = MAPS[map_name]

    def run(d: InstanceData, tally: Tally):
        A = d.fuzzy(src)
        B = d.fmap(map_name, A)
        for t in batch.threshold_values(A):
            for which, XA, XB in zip(("U", "L"), batch.level(A, t), batch.level(B, t)):
                lhs = d.cmap(map_name, XA)
                both_empty = ~lhs.any(axis=1) & ~XB.any(axis=1)
                tally.skip("empty level sets", both_empty.sum())
                rows = np.flatnonzero(~both_empty)
                ok = (lhs[rows] == XB[rows]).all(axis=1)

                def wit(j, rows=rows, lhs=lhs, XB=XB, which=which, t=t):
                    r = rows[j]
                    return ([_fuzzy_item(d, src, A, r)],
                            f"t={format_grade(t)} {which}: {map_name} of level set gives {fmt_set(lhs[r])}, "
                            f"level set of {map_name} image is {fmt_set(XB[r])}")
                yield Outcome(ok, wit)
    return run


def fuzzy_roundtrip(side: str, kinds: tuple[str, ...]):
    """up then down is the identity on ``kind`` subsets of S and vice versa; up preserves inclusion."""
    down, up = SIDES[side]["down"], SIDES[side]["up"]

    def run(d: InstanceData, tally: Tally):
        A = d.fuzzy("S")
        FA = d.fuzzy_flags("S")
        B = d.fuzzy(side)
        FB = d.fuzzy_flags(side)
        for kind in kinds:
            # from S
            rows = np.flatnonzero(FA[kind])
            lift = d.fmap(up, A.take(rows))
            back = d.fmap(down, lift)
            ok = batch.equal(back, A.take(rows)) & FuzzyFlagCache(d.frame(side), lift)[kind]

            def wit_s(j, rows=rows, lift=lift, back=back, kind=kind):
                return ([_fuzzy_item(d, "S", A, rows[j])],
                        f"{kind} A of S: {up}(A)={fmt_grades(lift, j)}, {down}({up}(A))={fmt_grades(back, j)}")
            yield Outcome(ok, wit_s)

            # from the operator semigroup
            rows_b = np.flatnonzero(FB[kind])
            drop = d.fmap(down, B.take(rows_b))
            back_b = d.fmap(up, drop)
            ok_b = batch.equal(back_b, B.take(rows_b)) & FuzzyFlagCache(d.frame("S"), drop)[kind]

            def wit_b(j, rows=rows_b, drop=drop, back=back_b, kind=kind):
                return ([_fuzzy_item(d, side, B, rows[j], "B")],
                        f"{kind} B of {side}: {down}(B)={fmt_grades(drop, j)}, {up}({down}(B))={fmt_grades(back, j)}")
            yield Outcome(ok_b, wit_b)

            # inclusion preserved by the lift
            I, J = inclusion_pairs(A, rows, d, "S", purpose=1)
            if len(I):
                li, lj = d.fmap(up, A.take(I)), d.fmap(up, A.take(J))
                ok_p = batch.includes(li, lj)

                def wit_p(j, I=I, J=J, li=li, lj=lj):
                    return ([_fuzzy_item(d, "S", A, I[j], "A"), _fuzzy_item(d, "S", A, J[j], "C")],
                            f"A within C but {up}(A)={fmt_grades(li, j)} not within {up}(C)={fmt_grades(lj, j)}")
                yield Outcome(ok_p, wit_p)
    return run


def crisp_roundtrip(side: str, kinds: tuple[str, ...]):
    """Crisp version of :func:`fuzzy_roundtrip` on non-empty subsets."""
    down, up = SIDES[side]["down"], SIDES[side]["up"]

    def run(d: InstanceData, tally: Tally):
        X = d.crisp("S")
        Y = d.crisp(side)
        lift = d.cmap(up, X)
        back = d.cmap(down, lift)
        G_lift = batch.crisp_flags(d.frame(side), lift)
        drop = d.cmap(down, Y)
        back_y = d.cmap(up, drop)
        G_drop = batch.crisp_flags(d.frame("S"), drop)
        for kind in kinds:
            rows = _nonempty_rows(d, "S", kind, tally)
            ok = G_lift[kind][rows] & (back[rows] == X[rows]).all(axis=1)

            def wit_s(j, rows=rows, kind=kind):
                r = rows[j]
                return ([_crisp_item(d, "S", X[r])],
                        f"{kind} P={fmt_set(X[r])} of S: {up}(P)={fmt_set(lift[r])} "
                        f"({kind}={bool(G_lift[kind][r])}), back={fmt_set(back[r])}")
            yield Outcome(ok, wit_s)

            rows_y = _nonempty_rows(d, side, kind, tally)
            ok_y = G_drop[kind][rows_y] & (back_y[rows_y] == Y[rows_y]).all(axis=1)

            def wit_y(j, rows=rows_y, kind=kind):
                r = rows[j]
                return ([_crisp_item(d, side, Y[r], "Q")],
                        f"{kind} Q={fmt_set(Y[r])} of {side}: {down}(Q)={fmt_set(drop[r])} "
                        f"({kind}={bool(G_drop[kind][r])}), back={fmt_set(back_y[r])}")
            yield Outcome(ok_y, wit_y)

            sub = X[rows]
            inc = (~sub[:, None, :] | sub[None, :, :]).all(axis=2)
            np.fill_diagonal(inc, False)
            I, J = np.nonzero(inc)
            li, lj = lift[rows[I]], lift[rows[J]]
            ok_p = (~li | lj).all(axis=1)

            def wit_p(j, I=I, J=J, li=li, lj=lj):
                a, b = rows[I[j]], rows[J[j]]
                return ([_crisp_item(d, "S", X[a], "P"), _crisp_item(d, "S", X[b], "Q")],
                        f"P within Q but {up}(P)={fmt_set(li[j])} not within {up}(Q)={fmt_set(lj[j])}")
            yield Outcome(ok_p, wit_p)
    return run


def characteristic_commutation(map_name: str, kind: str):
    """The transfer of a characteristic pair is the characteristic pair of the crisp transfer."""
    src, _ = MAPS[map_name]

    def run(d: InstanceData, tally: Tally):
        X = d.crisp(src)
        rows = _nonempty_rows(d, src, kind, tally)
        lhs = d.fmap(map_name, batch.characteristic(X[rows], 1))
        img = d.cmap(map_name, X[rows])
        rhs = batch.characteristic(img, 1)

        def wit(j):
            return ([_crisp_item(d, src, X[rows[j]])],
                    f"{map_name} of characteristic pair is {fmt_grades(lhs, j)}, "
                    f"characteristic pair of {fmt_set(img[j])} is {fmt_grades(rhs, j)}")
        yield Outcome(batch.equal(lhs, rhs), wit)
    return run


def operator_bijection(kinds: tuple[str, ...]):
    """R to L through S and back is the identity on ``kind`` subsets, in both directions."""
    def to_l(d, G):
        return d.fmap("plus_prime", d.fmap("star", G))

    def to_r(d, G):
        return d.fmap("star_prime", d.fmap("plus", G))

    def run(d: InstanceData, tally: Tally):
        for tag, there, back_fn, target in (("R", to_l, to_r, "L"), ("L", to_r, to_l, "R")):
            B = d.fuzzy(tag)
            FB = d.fuzzy_flags(tag)
            for kind in kinds:
                rows = np.flatnonzero(FB[kind])
                img = there(d, B.take(rows))
                back = back_fn(d, img)
                ok = batch.equal(back, B.take(rows)) & FuzzyFlagCache(d.frame(target), img)[kind]

                def wit(j, rows=rows, img=img, back=back, tag=tag, target=target, kind=kind):
                    return ([_fuzzy_item(d, tag, B, rows[j], "B")],
                            f"{kind} B of {tag}: image in {target} {fmt_grades(img, j)}, back {fmt_grades(back, j)}")
                yield Outcome(ok, wit)
                if tag == "R":
                    I, J = inclusion_pairs(B, rows, d, tag, purpose=2)
                    if len(I):
                        li, lj = there(d, B.take(I)), there(d, B.take(J))
                        ok_p = batch.includes(li, lj)

                        def wit_p(j, I=I, J=J, li=li, lj=lj):
                            return ([_fuzzy_item(d, "R", B, I[j], "B"), _fuzzy_item(d, "R", B, J[j], "C")],
                                    f"B within C but images {fmt_grades(li, j)} not within {fmt_grades(lj, j)}")
                        yield Outcome(ok_p, wit_p)
    return run


def extension_operator(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    FA = d.fuzzy_flags("S")
    for side in ("R", "L"):
        up = SIDES[side]["up"]
        op = d.carrier(side)
        for kind in ("ifli", "ifri", "ifi"):
            rows = np.flatnonzero(FA[kind])
            lifted = d.fmap(up, A.take(rows))
            for r in range(op.size):
                ext = batch.gather(lifted, batch.op_extension_plan(op.cayley, r))
                ok = FuzzyFlagCache(d.frame(side), ext)[kind]

                def wit(j, rows=rows, ext=ext, r=r, side=side, kind=kind, up=up):
                    return ([_fuzzy_item(d, "S", A, rows[j])],
                            f"{kind} A of S: extension of {up}(A) by {op.label(r)} in {side} is "
                            f"{fmt_grades(ext, j)}, not {kind}")
                yield Outcome(ok, wit)


def extension_source(d: InstanceData, tally: Tally):
    for side in ("R", "L"):
        down = SIDES[side]["down"]
        B = d.fuzzy(side)
        FB = d.fuzzy_flags(side)
        for kind in ("ifli", "ifri", "ifi"):
            rows = np.flatnonzero(FB[kind])
            dropped = d.fmap(down, B.take(rows))
            for x in range(d.S.s_size):
                ext = batch.gather(dropped, batch.extension_plan(d.S.table, x))
                ok = FuzzyFlagCache(d.frame("S"), ext)[kind]

                def wit(j, rows=rows, ext=ext, x=x, side=side, kind=kind, down=down, B=B):
                    return ([_fuzzy_item(d, side, B, rows[j], "B")],
                            f"{kind} B of {side}: extension of {down}(B) by {x} is {fmt_grades(ext, j)}, not {kind}")
                yield Outcome(ok, wit)


def _r_class(d: InstanceData, alpha: int, x: int) -> int:
    return d.ctx.right.cls(alpha, x)


def extension_inclusion(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    Ap = d.fmap("star_prime", A)
    R = d.ctx.right
    for x in range(d.S.s_size):
        lhs = d.fmap("star_prime", batch.gather(A, batch.extension_plan(d.S.table, x)))
        for alpha in range(d.S.g_size):
            r = _r_class(d, alpha, x)
            rhs = batch.gather(Ap, batch.op_extension_plan(R.cayley, r))

            def wit(j, lhs=lhs, rhs=rhs, x=x, r=r):
                return ([_fuzzy_item(d, "S", A, j)],
                        f"x={x} class {R.label(r)}: star_prime of extension {fmt_grades(lhs, j)} "
                        f"not within extension of star_prime {fmt_grades(rhs, j)}")
            yield Outcome(batch.includes(lhs, rhs), wit)


def extension_inf(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    Ap = d.fmap("star_prime", A)
    R = d.ctx.right
    for x in range(d.S.s_size):
        lhs = d.fmap("star_prime", batch.gather(A, batch.extension_plan(d.S.table, x)))
        mu = nu = None
        for alpha in range(d.S.g_size):
            e = batch.gather(Ap, batch.op_extension_plan(R.cayley, _r_class(d, alpha, x)))
            mu = e.mu if mu is None else np.minimum(mu, e.mu)
            nu = e.nu if nu is None else np.maximum(nu, e.nu)
        rhs = Grades(mu, nu, A.denom)

        def wit(j, lhs=lhs, rhs=rhs, x=x):
            return ([_fuzzy_item(d, "S", A, j)],
                    f"x={x}: star_prime of extension {fmt_grades(lhs, j)}, inf over classes {fmt_grades(rhs, j)}")
        yield Outcome(batch.equal(lhs, rhs), wit)


def extension_star(d: InstanceData, tally: Tally):
    B = d.fuzzy("R")
    Bs = d.fmap("star", B)
    R = d.ctx.right
    for x in range(d.S.s_size):
        small = batch.gather(Bs, batch.extension_plan(d.S.table, x))
        for beta in range(d.S.g_size):
            r = _r_class(d, beta, x)
            big = d.fmap("star", batch.gather(B, batch.op_extension_plan(R.cayley, r)))

            def wit(j, small=small, big=big, x=x, r=r):
                return ([_fuzzy_item(d, "R", B, j, "B")],
                        f"x={x} class {R.label(r)}: extension of star(B) {fmt_grades(small, j)} "
                        f"not within star of extension {fmt_grades(big, j)}")
            yield Outcome(batch.includes(small, big), wit)


def intersection_star_prime(d: InstanceData, tally: Tally):
    X = d.crisp("S")
    rows = _nonempty_rows(d, "S", "ideal", tally)
    fam = families(rows, d, "S", purpose=3)
    inter = X[fam].all(axis=1)
    lhs = d.cmap("star_prime", inter)
    img = d.cmap("star_prime", X)
    rhs = img[fam].all(axis=1)

    def wit(j):
        members = family_members(fam[j])
        return ([_crisp_item(d, "S", X[m], f"P{k}") for k, m in enumerate(members)],
                f"star_prime of intersection {fmt_set(lhs[j])}, intersection of star_prime images {fmt_set(rhs[j])}")
    yield Outcome((lhs == rhs).all(axis=1), wit)


def inf_star_prime(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    fam = families(np.arange(len(A)), d, "S", purpose=4)
    lhs = d.fmap("star_prime", batch.inf_rows(A, fam))
    rhs = batch.inf_rows(d.fmap("star_prime", A), fam)

    def wit(j):
        members = family_members(fam[j])
        return ([_fuzzy_item(d, "S", A, m, f"A{k}") for k, m in enumerate(members)],
                f"star_prime of inf {fmt_grades(lhs, j)}, inf of star_prime images {fmt_grades(rhs, j)}")
    yield Outcome(batch.equal(lhs, rhs), wit)


def extension_monotone(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    rows = np.flatnonzero(d.fuzzy_flags("S")["ifi"])
    sub = A.take(rows)
    for x in range(d.S.s_size):
        ext = batch.gather(sub, batch.extension_plan(d.S.table, x))

        def wit(j, ext=ext, x=x):
            return ([_fuzzy_item(d, "S", A, rows[j])], f"x={x}: A not within its extension {fmt_grades(ext, j)}")
        yield Outcome(batch.includes(sub, ext), wit)


def extension_preserves(kind: str):
    def run(d: InstanceData, tally: Tally):
        A = d.fuzzy("S")
        rows = np.flatnonzero(d.fuzzy_flags("S")[kind])
        sub = A.take(rows)
        for x in range(d.S.s_size):
            ext = batch.gather(sub, batch.extension_plan(d.S.table, x))
            ok = FuzzyFlagCache(d.frame("S"), ext)[kind]

            def wit(j, ext=ext, x=x):
                return ([_fuzzy_item(d, "S", A, rows[j])],
                        f"{kind} A: extension by {x} is {fmt_grades(ext, j)}, not {kind}")
            yield Outcome(ok, wit)
    return run


def extension_inf_semiprime(d: InstanceData, tally: Tally):
    A = d.fuzzy("S")
    rows = np.flatnonzero(d.fuzzy_flags("S")["ifspi"])
    fam = families(rows, d, "S", purpose=5)
    inf = batch.inf_rows(A, fam)
    for x in range(d.S.s_size):
        ext = batch.gather(inf, batch.extension_plan(d.S.table, x))
        ok = FuzzyFlagCache(d.frame("S"), ext)["ifspi"]

        def wit(j, ext=ext, x=x):
            members = family_members(fam[j])
            return ([_fuzzy_item(d, "S", A, m, f"A{k}") for k, m in enumerate(members)],
                    f"extension of the inf by {x} is {fmt_grades(ext, j)}, not ifspi")
        yield Outcome(ok, wit)


def extension_semiprime_intersection(d: InstanceData, tally: Tally):
    X = d.crisp("S")
    rows = _nonempty_rows(d, "S", "semiprime", tally)
    fam = families(rows, d, "S", purpose=6)
    inter = X[fam].all(axis=1)
    empty = ~inter.any(axis=1)
    tally.skip("empty intersection", empty.sum())
    keep = np.flatnonzero(~empty)
    M = batch.characteristic(inter[keep], 1)
    for x in range(d.S.s_size):
        ext = batch.gather(M, batch.extension_plan(d.S.table, x))
        ok = FuzzyFlagCache(d.frame("S"), ext)["ifspi"]

        def wit(j, ext=ext, x=x):
            members = family_members(fam[keep[j]])
            return ([_crisp_item(d, "S", X[m], f"P{k}") for k, m in enumerate(members)],
                    f"intersection {fmt_set(inter[keep[j]])}: extension by {x} is {fmt_grades(ext, j)}, not ifspi")
        yield Outcome(ok, wit)


def prime_extension(d: InstanceData, tally: Tally):
    X = d.crisp("S")
    F = d.crisp_flags("S")
    rows = _nonempty_rows(d, "S", "ideal", tally)
    sub = X[rows]
    M = batch.characteristic(sub, 1)
    fixed = np.ones(len(rows), dtype=bool)
    for x in range(d.S.s_size):
        ext = batch.gather(M, batch.extension_plan(d.S.table, x))
        fixed &= sub[:, x] | batch.equal(ext, M)
    prime = F["prime"][rows]

    def wit(j):
        return ([_crisp_item(d, "S", sub[j])],
                f"ideal {fmt_set(sub[j])}: prime={bool(prime[j])}, extension fixed off P={bool(fixed[j])}")
    yield Outcome(prime == fixed, wit)


# ---------------------------------------------------------------------------
# the catalog

def _e(id, hypothesis, kind, statement, assertion):
    return CheckEntry(id, hypothesis, kind, statement, assertion)


_PRIME_KINDS = ("prime", "semiprime")
_FUZZY_PRIME = ("ifpi", "ifspi")

ENTRIES: tuple[CheckEntry, ...] = (
    _e("prop-2.3-crisp-star", "both-unities", "crisp subsets",
       "I ideal (left ideal) of R  =>  I* ideal (left ideal) of S",
       crisp_transfer("star", ("ideal", "left_ideal"))),
    _e("prop-2.4-crisp-star-prime", "both-unities", "crisp subsets",
       "P ideal (left ideal) of S  =>  P*' ideal (left ideal) of R",
       crisp_transfer("star_prime", ("ideal", "left_ideal"))),
    _e("remark-1-prop-2.3-plus", "both-unities", "crisp subsets",
       "J ideal (right ideal) of L  =>  J+ ideal (right ideal) of S",
       crisp_transfer("plus", ("ideal", "right_ideal"))),
    _e("remark-1-prop-2.4-plus-prime", "both-unities", "crisp subsets",
       "Q ideal (right ideal) of S  =>  Q+' ideal (right ideal) of L",
       crisp_transfer("plus_prime", ("ideal", "right_ideal"))),
    _e("prop-2.5-level-star", "none", "fuzzy subsets",
       "[U(mu;t)]* = U(mu*;t) and [L(nu;t)]* = L(nu*;t) for A over R",
       level_commutation("star")),
    _e("prop-2.6-level-star-prime", "none", "fuzzy subsets",
       "[U(mu;t)]*' = U(mu*';t) and [L(nu;t)]*' = L(nu*';t) for A over S",
       level_commutation("star_prime")),
    _e("remark-1-prop-2.5-level-plus", "none", "fuzzy subsets",
       "[U(mu;t)]+ = U(mu+;t) and [L(nu;t)]+ = L(nu+;t) for A over L",
       level_commutation("plus")),
    _e("remark-1-prop-2.6-level-plus-prime", "none", "fuzzy subsets",
       "[U(mu;t)]+' = U(mu+';t) and [L(nu;t)]+' = L(nu+';t) for A over S",
       level_commutation("plus_prime")),
    _e("prop-2.7-fuzzy-star", "both-unities", "fuzzy-ideal subsets",
       "A IFI (IFLI) of R  =>  A* IFI (IFLI) of S",
       fuzzy_transfer("star", ("ifi", "ifli"))),
    _e("prop-2.8-fuzzy-star-prime", "both-unities", "fuzzy-ideal subsets",
       "A IFI (IFLI) of S  =>  A*' IFI (IFLI) of R",
       fuzzy_transfer("star_prime", ("ifi", "ifli"))),
    _e("remark-1-prop-2.7-plus", "both-unities", "fuzzy-ideal subsets",
       "A IFI (IFRI) of L  =>  A+ IFI (IFRI) of S",
       fuzzy_transfer("plus", ("ifi", "ifri"))),
    _e("remark-1-prop-2.8-plus-prime", "both-unities", "fuzzy-ideal subsets",
       "A IFI (IFRI) of S  =>  A+' IFI (IFRI) of L",
       fuzzy_transfer("plus_prime", ("ifi", "ifri"))),
    _e("thm-2.9-roundtrip", "both-unities", "fuzzy-ideal subsets",
       "(A+')+ = A on IFI (IFRI) of S, (B+)+' = B on IFI (IFRI) of L, A <= C => A+' <= C+'",
       fuzzy_roundtrip("L", ("ifi", "ifri"))),
    _e("thm-2.10-roundtrip", "both-unities", "fuzzy-ideal subsets",
       "(A*')* = A on IFI (IFLI) of S, (B*)*' = B on IFI (IFLI) of R, A <= C => A*' <= C*'",
       fuzzy_roundtrip("R", ("ifi", "ifli"))),
    _e("lemma-2.11-char-star", "none", "crisp subsets",
       "(chi_I, chi_I^c)* = (chi_I*, chi_I*^c) for I a left ideal of R",
       characteristic_commutation("star", "left_ideal")),
    _e("lemma-2.12-char-star-prime", "none", "crisp subsets",
       "(chi_I, chi_I^c)*' = (chi_I*', chi_I*'^c) for I a right ideal of S",
       characteristic_commutation("star_prime", "right_ideal")),
    _e("remark-2-lemma-2.11-char-plus", "none", "crisp subsets",
       "(chi_I, chi_I^c)+ = (chi_I+, chi_I+^c) for I a right ideal of L",
       characteristic_commutation("plus", "right_ideal")),
    _e("remark-2-lemma-2.12-char-plus-prime", "none", "crisp subsets",
       "(chi_I, chi_I^c)+' = (chi_I+', chi_I+'^c) for I a left ideal of S",
       characteristic_commutation("plus_prime", "left_ideal")),
    _e("thm-2.13-crisp-bijection", "both-unities", "crisp subsets",
       "I -> I*' is an inclusion preserving bijection I(S) -> I(R), LI(S) -> LI(R), inverse I -> I*",
       crisp_roundtrip("R", ("ideal", "left_ideal"))),
    _e("remark-3-crisp-bijection-plus", "both-unities", "crisp subsets",
       "I -> I+' is an inclusion preserving bijection I(S) -> I(L), RI(S) -> RI(L), inverse I -> I+",
       crisp_roundtrip("L", ("ideal", "right_ideal"))),
    _e("prop-2.14-prime-star", "none", "crisp subsets",
       "P prime (semiprime) ideal of R  =>  P* prime (semiprime) ideal of S",
       crisp_transfer("star", _PRIME_KINDS)),
    _e("prop-2.15-prime-star-prime", "none", "crisp subsets",
       "P prime (semiprime) ideal of S  =>  P*' prime (semiprime) ideal of R",
       crisp_transfer("star_prime", _PRIME_KINDS)),
    _e("prop-2.16-ifpi-star", "none", "fuzzy-ideal subsets",
       "A IFPI (IFSPI) of R  =>  A* IFPI (IFSPI) of S",
       fuzzy_transfer("star", _FUZZY_PRIME)),
    _e("prop-2.17-ifpi-star-prime", "none", "fuzzy-ideal subsets",
       "A IFPI (IFSPI) of S  =>  A*' IFPI (IFSPI) of R",
       fuzzy_transfer("star_prime", _FUZZY_PRIME)),
    _e("remark-4-prop-2.14-plus", "none", "crisp subsets",
       "P prime (semiprime) ideal of L  =>  P+ prime (semiprime) ideal of S",
       crisp_transfer("plus", _PRIME_KINDS)),
    _e("remark-4-prop-2.15-plus-prime", "none", "crisp subsets",
       "P prime (semiprime) ideal of S  =>  P+' prime (semiprime) ideal of L",
       crisp_transfer("plus_prime", _PRIME_KINDS)),
    _e("remark-4-prop-2.16-plus", "none", "fuzzy-ideal subsets",
       "A IFPI (IFSPI) of L  =>  A+ IFPI (IFSPI) of S",
       fuzzy_transfer("plus", _FUZZY_PRIME)),
    _e("remark-4-prop-2.17-plus-prime", "none", "fuzzy-ideal subsets",
       "A IFPI (IFSPI) of S  =>  A+' IFPI (IFSPI) of L",
       fuzzy_transfer("plus_prime", _FUZZY_PRIME)),
    _e("thm-2.18-ifpi-roundtrip", "none", "fuzzy-ideal subsets",
       "(B*')* = B on IFPI of S, (B*)*' = B on IFPI of R, inclusion preserved",
       fuzzy_roundtrip("R", ("ifpi",))),
    _e("remark-5-ifspi-roundtrip", "none", "fuzzy-ideal subsets",
       "(B*')* = B on IFSPI of S, (B*)*' = B on IFSPI of R, inclusion preserved",
       fuzzy_roundtrip("R", ("ifspi",))),
    _e("remark-5-left-roundtrip", "none", "fuzzy-ideal subsets",
       "(B+')+ = B on IFPI (IFSPI) of S, (B+)+' = B on IFPI (IFSPI) of L, inclusion preserved",
       fuzzy_roundtrip("L", _FUZZY_PRIME)),
    _e("cor-2.19-ifpi-r-l", "none", "fuzzy-ideal subsets",
       "B -> (B*)+' is an inclusion preserving bijection IFPI(R) -> IFPI(L) (and IFSPI)",
       operator_bijection(_FUZZY_PRIME)),
    _e("remark-6-ifi-r-l", "both-unities", "fuzzy-ideal subsets",
       "B -> (B*)+' is an inclusion preserving bijection IFI(R) -> IFI(L)",
       operator_bijection(("ifi",))),
    _e("thm-2.21-prime-bijection", "none", "crisp subsets",
       "P -> P*' is an inclusion preserving bijection PI(S) -> PI(R) and SPI(S) -> SPI(R)",
       crisp_roundtrip("R", _PRIME_KINDS)),
    _e("prop-2.22-extension-operator", "commutative", "fuzzy-ideal subsets",
       "A IFLI (IFRI, IFI) of S  =>  <r, A*'> and <r, A+'> IFLI (IFRI, IFI) of R and L for all r",
       extension_operator),
    _e("prop-2.23-extension-source", "commutative", "fuzzy-ideal subsets",
       "B IFLI (IFRI, IFI) of R or L  =>  <x, B*> and <x, B+> IFLI (IFRI, IFI) of S for all x",
       extension_source),
    _e("lemma-2.23-1-extension-inclusion", "commutative", "fuzzy subsets",
       "<x,A>*' <= <[a,x], A*'> for all a",
       extension_inclusion),
    _e("lemma-2.23-2-extension-inf", "commutative", "fuzzy subsets",
       "<x,A>*' = inf over a of <[a,x], A*'>",
       extension_inf),
    _e("lemma-2.24-extension-star", "none", "fuzzy subsets",
       "<x, B*> <= <[b,x], B>* for all b",
       extension_star),
    _e("lemma-2.25-char-star-prime-ideal", "none", "crisp subsets",
       "(chi_I, chi_I^c)*' = (chi_I*', chi_I*'^c) for I an ideal of S",
       characteristic_commutation("star_prime", "ideal")),
    _e("lemma-2.26-intersection-star-prime", "none", "ideal families",
       "(intersection of ideals P_i)*' = intersection of P_i*'",
       intersection_star_prime),
    _e("lemma-2.27-inf-star-prime", "none", "fuzzy subsets",
       "(inf A_i)*' = inf A_i*' for families of fuzzy subsets of S",
       inf_star_prime),
    _e("ext-monotone", "none", "fuzzy-ideal subsets",
       "A <= <x,A> for A an IFI of S",
       extension_monotone),
    _e("prop-2.28-extension-ifi", "commutative+unities", "fuzzy-ideal subsets",
       "A IFI of S  =>  <x,A> IFI of S",
       extension_preserves("ifi")),
    _e("prop-2.29-extension-ifspi", "commutative", "fuzzy-ideal subsets",
       "A IFSPI of S  =>  <x,A> IFSPI of S",
       extension_preserves("ifspi")),
    _e("prop-2.30-extension-inf-ifspi", "commutative", "ideal families",
       "A_i IFSPI of S  =>  <x, inf A_i> IFSPI of S",
       extension_inf_semiprime),
    _e("thm-2.30-extension-semiprime-intersection", "commutative", "ideal families",
       "P_i semiprime ideals with non-empty intersection P  =>  <x, (chi_P, chi_P^c)> IFSPI of S",
       extension_semiprime_intersection),
    _e("thm-2.31-prime-extension", "none", "crisp subsets",
       "ideal P is prime  <=>  <x, (chi_P, chi_P^c)> = (chi_P, chi_P^c) for every x outside P",
       prime_extension),
)

CATALOG: dict[str, CheckEntry] = {e.id: e for e in ENTRIES}
assert len(CATALOG) == len(ENTRIES), "duplicate check ids"


def hypothesis_failure(d: InstanceData, hypothesis: str) -> str | None:
    """Reason the instance fails the gate, or None if it passes."""
    if hypothesis in ("commutative", "commutative+unities") and not d.ctx.commutative:
        return "not commutative"
    if hypothesis in ("both-unities", "commutative+unities"):
        u = d.ctx.unities
        if u.left_unity is None:
            return "no left unity"
        if u.right_unity is None:
            return "no right unity"
    return None


def resolve(ids) -> list[CheckEntry]:
    """Catalog entries for 'all', a list of ids, or id prefixes such as 'prop-2.5'."""
    if ids in (None, "all") or ids == ["all"]:
        return list(ENTRIES)
    if isinstance(ids, str):
        ids = [s for s in ids.split(",") if s]
    out = []
    for key in ids:
        if key == "all":
            out.extend(e for e in ENTRIES if e not in out)
            continue
        if key in CATALOG:
            hits = [CATALOG[key]]
        else:
            hits = [e for e in ENTRIES if e.id.startswith(key + "-")]
        if not hits:
            raise InputError(f"unknown check id {key!r}")
        out.extend(h for h in hits if h not in out)
    return out
