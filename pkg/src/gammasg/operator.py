"""Left and right operator semigroups, unities and the crisp transfer maps.

Left:  S x Gamma / rho with (x,a) ~ (y,b) iff x a s = y b s for all s,
       product [x,a][y,b] = [x a y, b].
Right: Gamma x S / rho with (a,x) ~ (b,y) iff s a x = s b y for all s,
       product [a,x][b,y] = [a, x b y].
When the instance carries a Gamma table, rho additionally requires
g x a = g y b (left) or a x g = b y g (right) for every g.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import Frame, GammaSemigroup, InputError, is_commutative, left_unity_pair, right_unity_pair
from .fuzzy import CrispSubset

LEFT, RIGHT = "left", "right"

# map name -> (source carrier tag, target carrier tag)
MAPS = {
    "star": ("R", "S"),
    "star_prime": ("S", "R"),
    "plus": ("L", "S"),
    "plus_prime": ("S", "L"),
}


def normalize_map(name: str) -> str:
    key = name.replace("-", "_")
    if key not in MAPS:
        raise InputError(f"unknown map {name!r}; choose from star, star-prime, plus, plus-prime")
    return key


class ConstructionError(ValueError):
    """The quotient product is not representative-independent."""


class OperatorSemigroup:
    """Quotient of S x Gamma (left) or Gamma x S (right) by rho.

    ``class_of`` is indexed by the raw pair in its natural order: ``(x, a)``
    for the left side, ``(a, x)`` for the right side.  Class indices follow
    the lexicographic order of their least member, which is the
    representative.
    """

    def __init__(self, side: str, origin: GammaSemigroup, class_of: np.ndarray,
                 representative: list[tuple[int, int]], members: list[list[tuple[int, int]]],
                 cayley: np.ndarray):
        self.side = side
        self.origin = origin
        self.class_of = class_of
        self.representative = representative
        self.members = members
        self.cayley = cayley
        self.class_count = len(representative)

    @property
    def tag(self) -> str:
        return "L" if self.side == LEFT else "R"

    @property
    def size(self) -> int:
        return self.class_count

    @property
    def weak_rho(self) -> bool:
        return self.origin.gamma_table is None

    def product(self, p: int, q: int) -> int:
        return int(self.cayley[p, q])

    def cls(self, first: int, second: int) -> int:
        """Class of the raw pair ``(x, a)`` (left) or ``(a, x)`` (right)."""
        return int(self.class_of[first, second])

    def label(self, k: int) -> str:
        r0, r1 = self.representative[k]
        return f"[{r0},{r1}]#{k}"

    @cached_property
    def identity(self) -> int | None:
        n = self.class_count
        ident = np.arange(n)
        for e in range(n):
            if np.array_equal(self.cayley[e, :], ident) and np.array_equal(self.cayley[:, e], ident):
                return e
        return None

    def frame(self) -> Frame:
        # middles = R^1: the bare product ab, then a r b for every r
        n, c = self.class_count, self.cayley
        middles = np.empty((n, n + 1, n), dtype=np.int64)
        middles[:, 0, :] = c
        for r in range(n):
            middles[:, r + 1, :] = c[c[:, r], :]
        return Frame(n, c[:, None, :], middles, self.tag)

    def __eq__(self, other):
        return (isinstance(other, OperatorSemigroup) and self.side == other.side
                and self.origin == other.origin)

    def __hash__(self):
        return hash((self.side, self.origin))

    def __repr__(self):
        return f"OperatorSemigroup({self.side}, classes={self.class_count})"


def _rho_keys(S: GammaSemigroup, side: str) -> dict[tuple[int, int], tuple]:
    t, gt = S.table, S.gamma_table
    keys = {}
    if side == LEFT:
        for x, a in itertools.product(S.elements(), S.gammas()):
            k = tuple(t[x, a, :].tolist())
            if gt is not None:
                k += tuple(gt[:, x, a].tolist())
            keys[(x, a)] = k
    else:
        for a, x in itertools.product(S.gammas(), S.elements()):
            k = tuple(t[:, a, x].tolist())
            if gt is not None:
                k += tuple(gt[a, x, :].tolist())
            keys[(a, x)] = k
    return keys


def build_operator(S: GammaSemigroup, side: str) -> OperatorSemigroup:
    """Build L (``side='left'``) or R (``side='right'``) of a validated instance."""
    if side not in (LEFT, RIGHT):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    keys = _rho_keys(S, side)
    index: dict[tuple, int] = {}
    representative: list[tuple[int, int]] = []
    members: list[list[tuple[int, int]]] = []
    shape = (S.s_size, S.g_size) if side == LEFT else (S.g_size, S.s_size)
    class_of = np.empty(shape, dtype=np.int64)
    for pair in sorted(keys):
        k = index.get(keys[pair])
        if k is None:
            k = index[keys[pair]] = len(representative)
            representative.append(pair)
            members.append([])
        members[k].append(pair)
        class_of[pair] = k
    class_of.setflags(write=False)

    t = S.table

    def raw_product(p, q):
        if side == LEFT:
            (x, a), (y, b) = p, q
            return class_of[t[x, a, y], b]
        (a, x), (b, y) = p, q
        return class_of[a, t[x, b, y]]

    n = len(representative)
    cayley = np.empty((n, n), dtype=np.int64)
    for i, j in itertools.product(range(n), repeat=2):
        values = {int(raw_product(p, q)) for p in members[i] for q in members[j]}
        if len(values) != 1:
            raise ConstructionError(
                f"{side} product not well defined on classes {representative[i]}, "
                f"{representative[j]}: representatives give classes {sorted(values)}")
        cayley[i, j] = values.pop()
    cayley.setflags(write=False)
    return OperatorSemigroup(side, S, class_of, representative, members, cayley)


@dataclass(frozen=True)
class Unities:
    left_unity: int | None          # class index in L
    right_unity: int | None         # class index in R
    left_pair: tuple[int, int] | None = None    # (e, delta)
    right_pair: tuple[int, int] | None = None   # (gamma, f)

    @property
    def both(self) -> bool:
        return self.left_unity is not None and self.right_unity is not None


def find_unities(S: GammaSemigroup, left: OperatorSemigroup | None = None,
                 right: OperatorSemigroup | None = None) -> Unities:
    lp, rp = left_unity_pair(S), right_unity_pair(S)
    lu = ru = None
    if lp is not None:
        left = left or build_operator(S, LEFT)
        lu = left.cls(*lp)
    if rp is not None:
        right = right or build_operator(S, RIGHT)
        ru = right.cls(*rp)
    return Unities(lu, ru, lp, rp)


class OperatorContext:
    """An instance together with its operator semigroups and transfer plans."""

    def __init__(self, S: GammaSemigroup):
        self.S = S

    @cached_property
    def left(self) -> OperatorSemigroup:
        return build_operator(self.S, LEFT)

    @cached_property
    def right(self) -> OperatorSemigroup:
        return build_operator(self.S, RIGHT)

    @cached_property
    def unities(self) -> Unities:
        return find_unities(self.S, self.left, self.right)

    @cached_property
    def commutative(self) -> bool:
        return is_commutative(self.S)

    def carrier(self, tag: str):
        try:
            return {"S": self.S, "L": self.left, "R": self.right}[tag]
        except KeyError:
            raise InputError(f"unknown carrier {tag!r}; expected S, L or R") from None

    def frame(self, tag: str) -> Frame:
        return self._frames[tag]

    @cached_property
    def _frames(self) -> dict[str, Frame]:
        return {tag: self.carrier(tag).frame() for tag in "SLR"}

    def gather(self, map_name: str) -> np.ndarray:
        """Index plan of a transfer map: row i lists the source indices it ranges over."""
        return self._gathers[normalize_map(map_name)]

    @cached_property
    def _gathers(self) -> dict[str, np.ndarray]:
        S, t = self.S, self.S.table
        L, R = self.left, self.right
        plans = {
            "star": np.asarray(R.class_of).T.copy(),      # [a, g] -> class [g, a]
            "plus": np.asarray(L.class_of).copy(),        # [a, g] -> class [a, g]
        }

        def per_class(op: OperatorSemigroup, row_of) -> np.ndarray:
            out = np.empty((op.class_count, S.s_size), dtype=np.int64)
            for k, ms in enumerate(op.members):
                rows = {tuple(row_of(p).tolist()) for p in ms}
                # rho makes the row a class invariant
                assert len(rows) == 1, f"gather row differs across representatives of {op.label(k)}"
                out[k] = row_of(ms[0])
            return out

        plans["star_prime"] = per_class(R, lambda p: t[:, p[0], p[1]])   # s a x over s
        plans["plus_prime"] = per_class(L, lambda p: t[p[0], p[1], :])   # x a s over s
        for v in plans.values():
            v.setflags(write=False)
        return plans

    def check_carrier(self, subset, map_name: str):
        source, _ = MAPS[normalize_map(map_name)]
        if subset.carrier != self.carrier(source):
            raise InputError(f"{map_name} expects a subset of {source}, got one over {subset.carrier.tag}")


def transfer_crisp(X: CrispSubset, map_name: str, ctx: OperatorContext) -> CrispSubset:
    """Apply one of the crisp maps star, star_prime, plus, plus_prime.

    star: {s : [a,s] in X for all a};  star_prime: {[a,x] : s a x in X for all s};
    plus: {s : [s,a] in X for all a};  plus_prime: {[x,a] : x a s in X for all s}.
    """
    name = normalize_map(map_name)
    ctx.check_carrier(X, name)
    target = ctx.carrier(MAPS[name][1])
    plan = ctx.gather(name)
    members = frozenset(i for i in range(plan.shape[0]) if all(int(j) in X.members for j in plan[i]))
    return CrispSubset(target, members)
