"""Witness populations for the check runner.

For every instance the runner needs, per carrier (S, L, R):

* all crisp subsets (2^n of them, n is at most a handful at desk scale);
* fuzzy subsets over a grade lattice, exhaustive when the count fits under
  the cap and seeded-random otherwise;
* cached classification flags for both.

An instance can also be evaluated on an explicit population (the subsets
listed in a witness), which is how failures are re-evaluated.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .. import batch
from ..batch import FuzzyFlagCache, Grades
from ..core import GammaSemigroup
from ..fuzzy import CrispSubset, IFSubset, lattice_pairs
from ..operator import MAPS, OperatorContext

DEFAULT_LATTICE = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
CARRIER_CODE = {"S": 0, "L": 1, "R": 2}


@dataclass(frozen=True)
class Policy:
    """How witness populations are generated."""
    lattice: tuple = DEFAULT_LATTICE
    cap: int = 10 ** 6           # exhaustive fuzzy population if it has at most this many members
    samples: int = 4096          # random draws otherwise; also the sample size for families and pairs
    seed: int = 0
    family_size: int = 3
    family_cap: int = 20000      # enumerate all families / pairs up to this many
    jobs: int = 1

    @cached_property
    def denom(self) -> int:
        return math.lcm(*(Fraction(v).denominator for v in self.lattice)) if self.lattice else 1

    def describe(self) -> str:
        lat = ",".join(str(Fraction(v)) for v in self.lattice)
        return (f"lattice={lat} cap={self.cap} samples={self.samples} seed={self.seed} "
                f"families<={self.family_size}")


def all_crisp(n: int) -> np.ndarray:
    """Every subset of range(n) as a boolean row; row k has bit i set iff i in subset."""
    k = np.arange(1 << n, dtype=np.int64)
    return ((k[:, None] >> np.arange(n)) & 1).astype(bool)


def lattice_population(n: int, policy: Policy, rng_key) -> tuple[Grades, bool]:
    """Fuzzy subsets of an n-element carrier over the policy lattice.

    Exhaustive (lexicographic, element 0 most significant) when the count is
    within the cap, otherwise ``policy.samples`` seeded draws.
    """
    pairs = lattice_pairs(policy.lattice)
    d = policy.denom
    pm = np.array([int(m * d) for m, _ in pairs], dtype=np.int64)
    pn = np.array([int(v * d) for _, v in pairs], dtype=np.int64)
    p = len(pairs)
    total = p ** n
    if total <= policy.cap:
        idx = np.arange(total, dtype=np.int64)
        digits = np.empty((total, n), dtype=np.int64)
        for i in range(n - 1, -1, -1):
            digits[:, i] = idx % p
            idx //= p
        exhaustive = True
    else:
        rng = np.random.default_rng(rng_key)
        digits = rng.integers(0, p, size=(policy.samples, n))
        exhaustive = False
    return Grades(pm[digits], pn[digits], d), exhaustive


@dataclass
class Explicit:
    """An explicit population: the crisp and fuzzy subsets named in a witness."""
    crisp: dict = field(default_factory=dict)   # tag -> list[CrispSubset]
    fuzzy: dict = field(default_factory=dict)   # tag -> list[IFSubset]


class InstanceData:
    """One instance with its operator semigroups, populations and cached flags."""

    def __init__(self, S: GammaSemigroup, index: int, policy: Policy, explicit: Explicit | None = None):
        self.S = S
        self.index = index
        self.policy = policy
        self.explicit = explicit
        self.ctx = OperatorContext(S)
        self._crisp: dict[str, np.ndarray] = {}
        self._fuzzy: dict[str, Grades] = {}
        self._crisp_flags: dict[str, dict] = {}
        self._fuzzy_flags: dict[str, FuzzyFlagCache] = {}
        self.sampled: set[str] = set()

    # -- carriers -----------------------------------------------------------
    def carrier(self, tag: str):
        return self.ctx.carrier(tag)

    def size(self, tag: str) -> int:
        return self.carrier(tag).size

    def frame(self, tag: str):
        return self.ctx.frame(tag)

    def rng(self, tag: str, purpose: int = 0) -> np.random.Generator:
        return np.random.default_rng([self.policy.seed, self.index, CARRIER_CODE[tag], purpose])

    @cached_property
    def denom(self) -> int:
        if self.explicit is None:
            return self.policy.denom
        grades = [g for subs in self.explicit.fuzzy.values() for A in subs for g in (*A.mu, *A.nu)]
        return batch.common_denominator(grades)

    # -- populations ----------------------------------------------------------
    def crisp(self, tag: str) -> np.ndarray:
        if tag not in self._crisp:
            n = self.size(tag)
            if self.explicit is None:
                X = all_crisp(n)
            else:
                subs = self.explicit.crisp.get(tag, [])
                X = np.zeros((len(subs), n), dtype=bool)
                for i, P in enumerate(subs):
                    X[i, sorted(P.members)] = True
            self._crisp[tag] = X
        return self._crisp[tag]

    def fuzzy(self, tag: str) -> Grades:
        if tag not in self._fuzzy:
            n = self.size(tag)
            if self.explicit is None:
                G, exhaustive = lattice_population(n, self.policy, [self.policy.seed, self.index, CARRIER_CODE[tag]])
                if not exhaustive:
                    self.sampled.add(tag)
            else:
                subs = self.explicit.fuzzy.get(tag, [])
                if subs:
                    G = batch.from_subsets(subs, self.denom)
                else:
                    G = Grades(np.zeros((0, n), np.int64), np.zeros((0, n), np.int64), self.denom)
            self._fuzzy[tag] = G
        return self._fuzzy[tag]

    def crisp_flags(self, tag: str) -> dict:
        if tag not in self._crisp_flags:
            self._crisp_flags[tag] = batch.crisp_flags(self.frame(tag), self.crisp(tag))
        return self._crisp_flags[tag]

    def fuzzy_flags(self, tag: str) -> FuzzyFlagCache:
        if tag not in self._fuzzy_flags:
            self._fuzzy_flags[tag] = FuzzyFlagCache(self.frame(tag), self.fuzzy(tag))
        return self._fuzzy_flags[tag]

    # -- maps over whole batches ------------------------------------------------
    def cmap(self, name: str, X: np.ndarray) -> np.ndarray:
        return batch.crisp_gather(X, self.ctx.gather(name))

    def fmap(self, name: str, G: Grades) -> Grades:
        return batch.gather(G, self.ctx.gather(name))

    def target(self, name: str) -> str:
        return MAPS[name][1]

    # -- witness materialisation ------------------------------------------------
    def crisp_subset(self, tag: str, row) -> CrispSubset:
        return CrispSubset(self.carrier(tag), frozenset(int(i) for i in np.flatnonzero(row)))

    def fuzzy_subset(self, tag: str, G: Grades, i: int) -> IFSubset:
        return G.subset(int(i), self.carrier(tag))


# ---------------------------------------------------------------------------
# families and pairs

def families(rows: np.ndarray, data: InstanceData, tag: str, purpose: int) -> np.ndarray:
    """Families of 1..family_size distinct rows, as an (F, family_size) index array.

    Smaller families are padded by repeating their last member, which is
    harmless for intersections and infima.  Exhaustive up to ``family_cap``
    families, otherwise ``samples`` seeded draws.
    """
    k = data.policy.family_size
    m = len(rows)
    if m == 0:
        return np.zeros((0, k), dtype=np.int64)
    total = sum(math.comb(m, j) for j in range(1, min(k, m) + 1))
    out = []
    if total <= data.policy.family_cap:
        for j in range(1, min(k, m) + 1):
            for combo in itertools.combinations(range(m), j):
                out.append(combo + (combo[-1],) * (k - j))
        idx = np.array(out, dtype=np.int64)
    else:
        rng = data.rng(tag, purpose)
        sizes = rng.integers(1, min(k, m) + 1, size=data.policy.samples)
        idx = np.empty((data.policy.samples, k), dtype=np.int64)
        for f, j in enumerate(sizes):
            pick = np.sort(rng.choice(m, size=j, replace=False))
            idx[f, :j] = pick
            idx[f, j:] = pick[-1]
    return rows[idx]


def family_members(family) -> list[int]:
    seen = []
    for i in family:
        if int(i) not in seen:
            seen.append(int(i))
    return seen


def inclusion_pairs(G: Grades, rows: np.ndarray, data: InstanceData, tag: str,
                    purpose: int) -> tuple[np.ndarray, np.ndarray]:
    """Ordered pairs (i, j), i != j, of the given rows with G_i contained in G_j.

    All pairs when rows^2 fits under ``family_cap``, otherwise the pairs
    anchored at ``samples`` seeded rows.
    """
    m = len(rows)
    if m < 2:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    if m * m <= data.policy.family_cap:
        anchors = np.arange(m)
    else:
        anchors = np.sort(data.rng(tag, purpose).choice(m, size=min(m, data.policy.samples), replace=False))
    mu, nu = G.mu[rows], G.nu[rows]
    I, J = [], []
    step = max(1, batch.CHUNK * 16 // max(m, 1))
    for start in range(0, len(anchors), step):
        a = anchors[start:start + step]
        inc = ((mu[a][:, None, :] <= mu[None, :, :]).all(axis=2)
               & (nu[a][:, None, :] >= nu[None, :, :]).all(axis=2))
        inc[np.arange(len(a)), a] = False
        ii, jj = np.nonzero(inc)
        I.append(rows[a[ii]])
        J.append(rows[jj])
    return np.concatenate(I), np.concatenate(J)
