"""Vectorized counterparts of the fuzzy/transfer/extension operations.

A batch holds K intuitionistic fuzzy subsets of one carrier as integer
numerator arrays ``mu, nu`` of shape (K, n) over a common denominator, so
every comparison stays exact.  Crisp batches are boolean arrays (K, n).
The population runner evaluates whole witness populations with these;
the scalar API in :mod:`gammasg.fuzzy` is the reference they are tested
against.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .core import Frame
from .fuzzy import IFSubset

CHUNK = 4096


class Grades(NamedTuple):
    mu: np.ndarray
    nu: np.ndarray
    denom: int

    def __len__(self):
        return self.mu.shape[0]

    def take(self, rows) -> "Grades":
        return Grades(self.mu[rows], self.nu[rows], self.denom)

    def fraction_rows(self, i: int) -> tuple[tuple, tuple]:
        d = self.denom
        return (tuple(Fraction(int(v), d) for v in self.mu[i]),
                tuple(Fraction(int(v), d) for v in self.nu[i]))

    def subset(self, i: int, carrier) -> IFSubset:
        mu, nu = self.fraction_rows(i)
        return IFSubset(carrier, mu, nu)


def common_denominator(values) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, Fraction(v).denominator)
    return d


def from_subsets(subsets: Sequence[IFSubset], denom: int | None = None) -> Grades:
    if denom is None:
        denom = common_denominator(g for A in subsets for g in (*A.mu, *A.nu))
    n = subsets[0].carrier.size if subsets else 0
    mu = np.array([[int(g * denom) for g in A.mu] for A in subsets], dtype=np.int64).reshape(-1, n)
    nu = np.array([[int(g * denom) for g in A.nu] for A in subsets], dtype=np.int64).reshape(-1, n)
    return Grades(mu, nu, denom)


def characteristic(X: np.ndarray, denom: int) -> Grades:
    mu = X.astype(np.int64) * denom
    return Grades(mu, denom - mu, denom)


def gather(G: Grades, plan: np.ndarray) -> Grades:
    """Row i of the result is (min, max) of the source grades listed in plan[i]."""
    return Grades(G.mu[:, plan].min(axis=2), G.nu[:, plan].max(axis=2), G.denom)


def crisp_gather(X: np.ndarray, plan: np.ndarray) -> np.ndarray:
    return X[:, plan].all(axis=2)


def extension_plan(table: np.ndarray, x: int) -> np.ndarray:
    """Plan for <x, A> on S: row y lists x g y over g."""
    return np.ascontiguousarray(table[x, :, :].T)


def op_extension_plan(cayley: np.ndarray, r: int) -> np.ndarray:
    return cayley[r, :][:, None]


def level(G: Grades, t: Fraction) -> tuple[np.ndarray, np.ndarray]:
    """Boolean level sets U(mu; t) and L(nu; t)."""
    t = Fraction(t)
    scaled_mu = G.mu * t.denominator
    scaled_nu = G.nu * t.denominator
    bound = t.numerator * G.denom
    return scaled_mu >= bound, scaled_nu <= bound


def threshold_values(G: Grades) -> list[Fraction]:
    values = set(np.unique(G.mu).tolist()) | set(np.unique(G.nu).tolist()) | {0, G.denom}
    return sorted(Fraction(v, G.denom) for v in values)


def equal(A: Grades, B: Grades) -> np.ndarray:
    if A.denom != B.denom:
        raise ValueError("batches on different denominators")
    return (A.mu == B.mu).all(axis=1) & (A.nu == B.nu).all(axis=1)


def includes(A: Grades, B: Grades) -> np.ndarray:
    """Per row: A_i contained in B_i."""
    if A.denom != B.denom:
        raise ValueError("batches on different denominators")
    return (A.mu <= B.mu).all(axis=1) & (A.nu >= B.nu).all(axis=1)


def inf_rows(G: Grades, families: np.ndarray) -> Grades:
    """families: (F, k) row indices; returns the pointwise inf of each family."""
    return Grades(G.mu[families].min(axis=1), G.nu[families].max(axis=1), G.denom)


def _chunks(k: int):
    for start in range(0, k, CHUNK):
        yield slice(start, min(k, start + CHUNK))


def _diag(middles: np.ndarray) -> np.ndarray:
    n = middles.shape[0]
    return middles[np.arange(n), :, np.arange(n)]


def crisp_flags(frame: Frame, X: np.ndarray) -> dict[str, np.ndarray]:
    """Batch version of :func:`gammasg.fuzzy.classify_crisp`."""
    k = X.shape[0]
    out = {name: np.zeros(k, dtype=bool) for name in ("left_ideal", "right_ideal", "prime", "semiprime")}
    prod, mid, diag = frame.products, frame.middles, _diag(frame.middles)
    for sl in _chunks(k):
        x = X[sl]
        xp = x[:, prod]                                  # (c, n, m, n)
        out["left_ideal"][sl] = (xp | ~x[:, None, None, :]).all(axis=(1, 2, 3))
        out["right_ideal"][sl] = (xp | ~x[:, :, None, None]).all(axis=(1, 2, 3))
        inside = x[:, mid].all(axis=2)                   # x M y contained in X
        out["prime"][sl] = (~inside | x[:, :, None] | x[:, None, :]).all(axis=(1, 2))
        out["semiprime"][sl] = (~x[:, diag].all(axis=2) | x).all(axis=1)
    ideal = out["left_ideal"] & out["right_ideal"]
    out["ideal"] = ideal
    out["prime"] &= ideal
    out["semiprime"] &= ideal
    out["empty"] = ~X.any(axis=1)
    return out


def one_sided(frame: Frame, G: Grades, side: str) -> np.ndarray:
    k = len(G)
    out = np.zeros(k, dtype=bool)
    prod = frame.products
    for sl in _chunks(k):
        mu, nu = G.mu[sl], G.nu[sl]
        mp, np_ = mu[:, prod], nu[:, prod]
        if side == "left":
            ref_mu, ref_nu = mu[:, None, None, :], nu[:, None, None, :]
        else:
            ref_mu, ref_nu = mu[:, :, None, None], nu[:, :, None, None]
        out[sl] = (mp >= ref_mu).all(axis=(1, 2, 3)) & (np_ <= ref_nu).all(axis=(1, 2, 3))
    return out


def prime_condition(frame: Frame, G: Grades) -> np.ndarray:
    """min over middles of mu(x m y) equals max(mu x, mu y); dually for nu."""
    k = len(G)
    out = np.zeros(k, dtype=bool)
    mid = frame.middles
    for sl in _chunks(k):
        mu, nu = G.mu[sl], G.nu[sl]
        lo = mu[:, mid].min(axis=2)
        hi = nu[:, mid].max(axis=2)
        out[sl] = ((lo == np.maximum(mu[:, :, None], mu[:, None, :])).all(axis=(1, 2))
                   & (hi == np.minimum(nu[:, :, None], nu[:, None, :])).all(axis=(1, 2)))
    return out


def semiprime_levels(frame: Frame, G: Grades) -> np.ndarray:
    """Every non-empty level set satisfies x M x <= X  =>  x in X.

    The ideal half of crisp semiprimeness is left to the caller (it follows
    from IFI).
    """
    diag = _diag(frame.middles)
    ok = np.ones(len(G), dtype=bool)
    for t in threshold_values(G):
        for X in level(G, t):
            holds = (~X[:, diag].all(axis=2) | X).all(axis=1)
            ok &= holds | ~X.any(axis=1)
    return ok


class FuzzyFlagCache:
    """Lazily computed IFLI/IFRI/IFI/IFPI/IFSPI flags for one batch on one frame."""

    def __init__(self, frame: Frame, G: Grades):
        self.frame, self.G = frame, G
        self._cache: dict[str, np.ndarray] = {}

    def __getitem__(self, name: str) -> np.ndarray:
        if name not in self._cache:
            self._cache[name] = self._compute(name)
        return self._cache[name]

    def _compute(self, name: str) -> np.ndarray:
        if name == "ifli":
            return one_sided(self.frame, self.G, "left")
        if name == "ifri":
            return one_sided(self.frame, self.G, "right")
        if name == "ifi":
            return self["ifli"] & self["ifri"]
        ifi = self["ifi"]
        rows = np.flatnonzero(ifi)
        out = np.zeros(len(self.G), dtype=bool)
        if rows.size:
            sub = self.G.take(rows)
            if name == "ifpi":
                out[rows] = prime_condition(self.frame, sub)
            elif name == "ifspi":
                out[rows] = semiprime_levels(self.frame, sub)
            else:
                raise KeyError(name)
        return out
