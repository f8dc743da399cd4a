"""Intuitionistic fuzzy subsets with exact rational grades, level sets and classification.

A carrier is anything exposing ``size``, ``tag`` and ``frame()``: the
Gamma-semigroup itself or one of its operator semigroups.  Classification
runs off the carrier's :class:`~gammasg.core.Frame`:

* ideal conditions use the products ``x g y`` (Gamma-semigroup) or ``ab``;
* prime/semiprime conditions use the middle set, Gamma on S and R^1 on an
  operator semigroup, so "prime" reads ``x M y <= P  =>  x in P or y in P``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import InputError, _meaningful_lines

Grade = Fraction
ZERO, ONE = Fraction(0), Fraction(1)

_GRADE = re.compile(r"^(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_grade(tok: str, lineno: int | None = None) -> Fraction:
    m = _GRADE.match(tok)
    if not m:
        raise InputError(f"bad grade {tok!r}; expected p/q or an integer", lineno)
    value = Fraction(int(m.group(1)), int(m.group(2) or 1))
    if value > 1:
        raise InputError(f"grade {tok} exceeds 1", lineno)
    return value


def format_grade(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _grade(v) -> Fraction:
    if isinstance(v, str):
        return parse_grade(v)
    if isinstance(v, float):
        raise TypeError("grades are exact; pass Fraction, int or 'p/q'")
    return Fraction(v)


@dataclass(frozen=True)
class CrispSubset:
    carrier: object
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(m) for m in self.members))
        bad = [m for m in self.members if not 0 <= m < self.carrier.size]
        if bad:
            raise InputError(f"members {sorted(bad)} outside carrier of size {self.carrier.size}")

    def __contains__(self, item) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def empty(self) -> bool:
        return not self.members

    def __repr__(self):
        return f"CrispSubset({self.carrier.tag}, {sorted(self.members)})"


@dataclass(frozen=True)
class IFSubset:
    """A = (mu, nu) over a finite carrier with 0 <= mu + nu <= 1 pointwise."""

    carrier: object
    mu: tuple
    nu: tuple

    def __post_init__(self):
        mu = tuple(_grade(v) for v in self.mu)
        nu = tuple(_grade(v) for v in self.nu)
        n = self.carrier.size
        if len(mu) != n or len(nu) != n:
            raise InputError(f"grade vectors must have length {n}, got {len(mu)} and {len(nu)}")
        for i, (m, v) in enumerate(zip(mu, nu)):
            if not (0 <= m <= 1 and 0 <= v <= 1):
                raise InputError(f"element {i}: grades must lie in [0, 1]")
            if m + v > 1:
                raise InputError(f"element {i}: mu + nu = {format_grade(m + v)} exceeds 1")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    @classmethod
    def constant(cls, carrier, mu, nu) -> "IFSubset":
        return cls(carrier, (mu,) * carrier.size, (nu,) * carrier.size)

    def grades(self) -> set:
        return set(self.mu) | set(self.nu)

    def __repr__(self):
        def vec(v):
            return "(" + ", ".join(format_grade(g) for g in v) + ")"
        return f"IFSubset({self.carrier.tag}, mu={vec(self.mu)}, nu={vec(self.nu)})"


def _same_carrier(A, B):
    if A.carrier != B.carrier:
        raise InputError(f"carrier mismatch: {A.carrier.tag} vs {B.carrier.tag}")


def level_sets(A: IFSubset, t) -> tuple[CrispSubset, CrispSubset]:
    """``U(mu; t) = {x : mu(x) >= t}`` and ``L(nu; t) = {x : nu(x) <= t}``."""
    t = _grade(t)
    U = CrispSubset(A.carrier, {i for i, m in enumerate(A.mu) if m >= t})
    L = CrispSubset(A.carrier, {i for i, v in enumerate(A.nu) if v <= t})
    return U, L


def thresholds(A: IFSubset) -> list[Fraction]:
    """Occurring grades plus 0 and 1: every distinct level set arises at one of these."""
    return sorted(A.grades() | {ZERO, ONE})


def characteristic_pair(I: CrispSubset) -> IFSubset:
    n = I.carrier.size
    mu = tuple(ONE if i in I.members else ZERO for i in range(n))
    return IFSubset(I.carrier, mu, tuple(ONE - m for m in mu))


def support_if_crisp(A: IFSubset) -> CrispSubset | None:
    """Inverse of :func:`characteristic_pair` on characteristic pairs, else None."""
    if all(m in (ZERO, ONE) and m + v == ONE for m, v in zip(A.mu, A.nu)):
        return CrispSubset(A.carrier, {i for i, m in enumerate(A.mu) if m == ONE})
    return None


def inf_family(family: Sequence[IFSubset]) -> IFSubset:
    if not family:
        raise InputError("inf_family needs a non-empty family")
    first = family[0]
    for B in family[1:]:
        _same_carrier(first, B)
    mu = tuple(min(col) for col in zip(*(A.mu for A in family)))
    nu = tuple(max(col) for col in zip(*(A.nu for A in family)))
    return IFSubset(first.carrier, mu, nu)


def includes(A: IFSubset, B: IFSubset) -> bool:
    """A is contained in B: mu_A <= mu_B and nu_A >= nu_B pointwise."""
    _same_carrier(A, B)
    return all(a <= b for a, b in zip(A.mu, B.mu)) and all(a >= b for a, b in zip(A.nu, B.nu))


# ---------------------------------------------------------------------------
# crisp classification

@dataclass
class CrispFlags:
    left_ideal: bool
    right_ideal: bool
    ideal: bool
    prime: bool
    semiprime: bool
    empty: bool
    witnesses: dict = field(default_factory=dict, compare=False)


def _triples(frame, which: str):
    arr = frame.products if which == "products" else frame.middles
    n, m = arr.shape[0], arr.shape[1]
    return arr, n, m


def classify_crisp(P: CrispSubset) -> CrispFlags:
    """Ideal, prime and semiprime flags of a crisp subset.

    The empty set is an ideal vacuously and is flagged ``empty`` so callers
    can exclude it where non-emptiness is presumed.
    """
    frame = P.carrier.frame()
    prod, n, m = _triples(frame, "products")
    mid, _, mm = _triples(frame, "middles")
    X = P.members
    wit = {}
    left = right = True
    for x, k, p in itertools.product(range(n), range(m), sorted(X)):
        if left and int(prod[x, k, p]) not in X:
            left = False
            wit["left-ideal"] = (x, k, p)
        if right and int(prod[p, k, x]) not in X:
            right = False
            wit["right-ideal"] = (p, k, x)
    ideal = left and right
    prime = ideal
    if ideal:
        for x, y in itertools.product(range(n), repeat=2):
            if x not in X and y not in X and all(int(mid[x, k, y]) in X for k in range(mm)):
                prime = False
                wit["prime"] = (x, y)
                break
    semiprime = ideal
    if ideal:
        for x in range(n):
            if x not in X and all(int(mid[x, k, x]) in X for k in range(mm)):
                semiprime = False
                wit["semiprime"] = (x,)
                break
    return CrispFlags(left, right, ideal, prime, semiprime, not X, wit)


# ---------------------------------------------------------------------------
# fuzzy classification

@dataclass
class FuzzyFlags:
    ifli: bool
    ifri: bool
    ifi: bool
    ifpi: bool
    ifspi: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def get(self, name: str) -> bool:
        return getattr(self, name)


FUZZY_PREDICATES = ("ifli", "ifri", "ifi", "ifpi", "ifspi")
CRISP_PREDICATES = ("left-ideal", "right-ideal", "ideal", "prime", "semiprime")


def _one_sided(A: IFSubset, prod, n, m, side: str):
    mu, nu = A.mu, A.nu
    for x, k, y in itertools.product(range(n), range(m), range(n)):
        z = int(prod[x, k, y])
        src = y if side == "left" else x
        if mu[z] < mu[src] or nu[z] > nu[src]:
            return (x, k, y), (f"mu(z)={format_grade(mu[z])} mu(src)={format_grade(mu[src])} "
                               f"nu(z)={format_grade(nu[z])} nu(src)={format_grade(nu[src])} z={z}")
    return None


def classify_fuzzy(A: IFSubset) -> FuzzyFlags:
    """IFLI/IFRI/IFI by the product inequalities, IFPI pointwise, IFSPI by level sets.

    IFPI: IFI and ``min_k mu(x m_k y) = max(mu x, mu y)``, ``max_k nu(x m_k y) =
    min(nu x, nu y)`` over the middle set.  IFSPI: IFI and every non-empty
    level set at an occurring grade is a crisp semiprime ideal.
    """
    frame = A.carrier.frame()
    prod, n, m = _triples(frame, "products")
    mid, _, mm = _triples(frame, "middles")
    wit = {}
    lw = _one_sided(A, prod, n, m, "left")
    rw = _one_sided(A, prod, n, m, "right")
    if lw:
        wit["ifli"] = lw
    if rw:
        wit["ifri"] = rw
    ifi = lw is None and rw is None
    if not ifi:
        wit.setdefault("ifi", lw or rw)
    ifpi = ifi
    if ifi:
        for x, y in itertools.product(range(n), repeat=2):
            lo = min(A.mu[int(mid[x, k, y])] for k in range(mm))
            hi = max(A.nu[int(mid[x, k, y])] for k in range(mm))
            if lo != max(A.mu[x], A.mu[y]) or hi != min(A.nu[x], A.nu[y]):
                ifpi = False
                wit["ifpi"] = ((x, y), f"min mu over middles={format_grade(lo)} "
                                       f"max(mu x, mu y)={format_grade(max(A.mu[x], A.mu[y]))} "
                                       f"max nu over middles={format_grade(hi)} "
                                       f"min(nu x, nu y)={format_grade(min(A.nu[x], A.nu[y]))}")
                break
    else:
        wit["ifpi"] = wit["ifi"]
    ifspi = ifi
    if ifi:
        for t in thresholds(A):
            for name, level in zip(("U", "L"), level_sets(A, t)):
                if level.empty:
                    continue
                flags = classify_crisp(level)
                if not flags.semiprime:
                    ifspi = False
                    wit["ifspi"] = ((name, format_grade(t)), f"level set {sorted(level.members)} "
                                                             f"not semiprime at {flags.witnesses.get('semiprime')}")
                    break
            if not ifspi:
                break
    else:
        wit["ifspi"] = wit["ifi"]
    return FuzzyFlags(lw is None, rw is None, ifi, ifpi, ifspi, wit)


def semiprime_pointwise(A: IFSubset) -> bool:
    """IFI and ``mu(x) >= min_k mu(x m_k x)``, ``nu(x) <= max_k nu(x m_k x)`` for all x."""
    if not classify_fuzzy(A).ifi:
        return False
    mid = A.carrier.frame().middles
    n, mm = mid.shape[0], mid.shape[1]
    for x in range(n):
        if A.mu[x] < min(A.mu[int(mid[x, k, x])] for k in range(mm)):
            return False
        if A.nu[x] > max(A.nu[int(mid[x, k, x])] for k in range(mm)):
            return False
    return True


# ---------------------------------------------------------------------------
# IFS text format

def format_ifs(A: IFSubset) -> str:
    out = ["IFS 1", f"carrier {A.carrier.tag}"]
    out.extend(f"{i} {format_grade(m)} {format_grade(v)}" for i, (m, v) in enumerate(zip(A.mu, A.nu)))
    return "\n".join(out) + "\n"


def parse_ifs_raw(text: str) -> tuple[str, list[Fraction], list[Fraction]]:
    """Parse without binding a carrier: returns (tag, mu, nu)."""
    lines = list(_meaningful_lines(text))
    if not lines:
        raise InputError("empty input", 1)
    lineno, toks = lines[0]
    if toks != ["IFS", "1"]:
        raise InputError(f"expected header 'IFS 1', got {' '.join(toks)!r}", lineno)
    if len(lines) < 2:
        raise InputError("missing carrier line", lineno + 1)
    lineno, toks = lines[1]
    if len(toks) != 2 or toks[0] != "carrier" or toks[1] not in ("S", "L", "R"):
        raise InputError(f"expected 'carrier S|L|R', got {' '.join(toks)!r}", lineno)
    tag = toks[1]
    mu, nu = [], []
    for expected, (lineno, toks) in enumerate(lines[2:]):
        if len(toks) != 3:
            raise InputError(f"expected '<index> <mu> <nu>', got {' '.join(toks)!r}", lineno)
        if toks[0] != str(expected):
            raise InputError(f"expected element index {expected}, got {toks[0]!r}", lineno)
        m, v = parse_grade(toks[1], lineno), parse_grade(toks[2], lineno)
        if m + v > 1:
            raise InputError(f"element {expected}: mu + nu = {format_grade(m + v)} exceeds 1", lineno)
        mu.append(m)
        nu.append(v)
    return tag, mu, nu


def parse_ifs(text: str, resolve: Callable[[str], object]) -> IFSubset:
    """Parse an IFS file and bind it to ``resolve(tag)``; the element count must match."""
    tag, mu, nu = parse_ifs_raw(text)
    carrier = resolve(tag)
    if len(mu) != carrier.size:
        raise InputError(f"carrier {tag} has {carrier.size} elements, file lists {len(mu)}")
    return IFSubset(carrier, tuple(mu), tuple(nu))


def lattice_pairs(lattice: Iterable) -> list[tuple[Fraction, Fraction]]:
    """All (mu, nu) pairs from the lattice with mu + nu <= 1, in lexicographic order."""
    values = sorted({_grade(v) for v in lattice})
    return [(m, v) for m in values for v in values if m + v <= 1]
