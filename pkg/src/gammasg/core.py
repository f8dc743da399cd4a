"""Finite Gamma-semigroups: tables, axiom validation, text format, enumeration.

Elements of S and of Gamma are dense indices ``0..n-1``.  The ternary
product ``x gamma y`` lives in an integer array of shape ``(s, g, s)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


class InputError(ValueError):
    """Malformed input: bad file contents, out-of-range indices, bad arguments."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AxiomError(ValueError):
    """A well-formed table that violates an axiom it is required to satisfy."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"{len(report.violations)} axiom violation(s); first: {report.violations[0]}")


def _as_table(data, shape: tuple[int, int, int], bound: int, what: str) -> np.ndarray:
    try:
        arr = np.array(data, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: not an integer table ({exc})") from None
    if arr.shape != shape:
        raise InputError(f"{what}: expected shape {shape}, got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= bound):
        bad = tuple(int(i) for i in np.argwhere((arr < 0) | (arr >= bound))[0])
        raise InputError(f"{what}: entry at {bad} = {int(arr[bad])} out of range 0..{bound - 1}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Frame:
    """Multiplicative data a carrier exposes to ideal classification.

    ``products[x, k, y]`` enumerates the products used by the ideal
    conditions; ``middles[x, k, y]`` the products ``x m y`` over the middle
    set used by the prime and semiprime conditions.
    """

    size: int
    products: np.ndarray
    middles: np.ndarray
    tag: str


class GammaSemigroup:
    """A finite Gamma-semigroup given by its ternary multiplication table.

    ``table[x, a, y]`` is ``x a y``.  The optional ``gamma_table[a, x, b]``
    holds ``a x b`` in Gamma and only feeds the second rho-condition.
    Construction checks shapes and index ranges; axioms are checked by
    :func:`validate`.
    """

    def __init__(self, s_size: int, g_size: int, table, gamma_table=None,
                 labels: tuple[Sequence[str], Sequence[str]] | None = None):
        if s_size < 1 or g_size < 1:
            raise InputError(f"sizes must be positive, got S={s_size} G={g_size}")
        self.s_size = int(s_size)
        self.g_size = int(g_size)
        self.table = _as_table(table, (s_size, g_size, s_size), s_size, "table")
        self.gamma_table = None
        if gamma_table is not None:
            self.gamma_table = _as_table(gamma_table, (g_size, s_size, g_size), g_size, "gamma_table")
        if labels is not None:
            s_labels, g_labels = (tuple(str(v) for v in part) for part in labels)
            if len(s_labels) != s_size or len(g_labels) != g_size:
                raise InputError("labels do not match sizes")
            labels = (s_labels, g_labels)
        self.labels = labels

    @classmethod
    def from_function(cls, s_size: int, g_size: int, fn, **kwargs) -> "GammaSemigroup":
        table = [[[fn(x, a, y) for y in range(s_size)] for a in range(g_size)] for x in range(s_size)]
        return cls(s_size, g_size, table, **kwargs)

    tag = "S"

    @property
    def size(self) -> int:
        return self.s_size

    def product(self, x: int, gamma: int, y: int) -> int:
        return int(self.table[x, gamma, y])

    def elements(self) -> range:
        return range(self.s_size)

    def gammas(self) -> range:
        return range(self.g_size)

    def frame(self) -> Frame:
        return Frame(self.s_size, self.table, self.table, "S")

    def key(self) -> tuple:
        gt = None if self.gamma_table is None else self.gamma_table.tobytes()
        return (self.s_size, self.g_size, self.table.tobytes(), gt)

    def __eq__(self, other):
        return isinstance(other, GammaSemigroup) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        flat = "".join(str(v) for v in self.table.ravel()) if self.table.size <= 40 else "..."
        return f"GammaSemigroup(S={self.s_size}, G={self.g_size}, table={flat})"


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    lhs: int
    rhs: int

    def __str__(self):
        return f"{self.axiom} witness={self.witness} lhs={self.lhs} rhs={self.rhs}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(gs: GammaSemigroup, max_violations: int | None = None) -> ValidationReport:
    """Check associativity (and mixed associativity when a Gamma table is present).

    Each violation records its witness tuple and both evaluated sides.  The
    S-associativity witness is ``(x, y, z, alpha, beta)``.
    """
    t = gs.table
    report = ValidationReport()

    def add(v):
        report.violations.append(v)
        return max_violations is not None and len(report.violations) >= max_violations

    s_range, g_range = gs.elements(), gs.gammas()
    for x, y, z in itertools.product(s_range, repeat=3):
        for a, b in itertools.product(g_range, repeat=2):
            lhs, rhs = t[t[x, a, y], b, z], t[x, a, t[y, b, z]]
            if lhs != rhs and add(Violation("associativity", (x, y, z, a, b), int(lhs), int(rhs))):
                return report
    gt = gs.gamma_table
    if gt is None:
        return report
    # (x a y) b z = x [a y b] z
    for x, y, z in itertools.product(s_range, repeat=3):
        for a, b in itertools.product(g_range, repeat=2):
            lhs, rhs = t[t[x, a, y], b, z], t[x, gt[a, y, b], z]
            if lhs != rhs and add(Violation("mixed-S", (x, y, z, a, b), int(lhs), int(rhs))):
                return report
    # [a x b] y c = a x [b y c] = a (x b y) c
    for x, y in itertools.product(s_range, repeat=2):
        for a, b, c in itertools.product(g_range, repeat=3):
            left = gt[gt[a, x, b], y, c]
            for name, rhs in (("gamma-associativity", gt[a, x, gt[b, y, c]]),
                              ("mixed-gamma", gt[a, t[x, b, y], c])):
                if left != rhs and add(Violation(name, (x, y, a, b, c), int(left), int(rhs))):
                    return report
    return report


def require_valid(gs: GammaSemigroup) -> GammaSemigroup:
    report = validate(gs, max_violations=1)
    if not report.ok:
        raise AxiomError(report)
    return gs


def is_commutative(gs: GammaSemigroup) -> bool:
    return bool(np.array_equal(gs.table, gs.table.transpose(2, 1, 0)))


def left_unity_pair(gs: GammaSemigroup) -> tuple[int, int] | None:
    """First ``(e, delta)`` in lexicographic order with ``e delta s = s`` for all s."""
    ident = np.arange(gs.s_size)
    for e in gs.elements():
        for d in gs.gammas():
            if np.array_equal(gs.table[e, d, :], ident):
                return (e, d)
    return None


def right_unity_pair(gs: GammaSemigroup) -> tuple[int, int] | None:
    """First ``(gamma, f)`` in lexicographic order with ``s gamma f = s`` for all s."""
    ident = np.arange(gs.s_size)
    for g in gs.gammas():
        for f in gs.elements():
            if np.array_equal(gs.table[:, g, f], ident):
                return (g, f)
    return None


# ---------------------------------------------------------------------------
# text format

_INT = re.compile(r"^(0|[1-9][0-9]*)$")


def _meaningful_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int_token(tok: str, lineno: int) -> int:
    if not _INT.match(tok):
        raise InputError(f"expected a non-negative integer, got {tok!r}", lineno)
    return int(tok)


def parse_gsg(text: str) -> GammaSemigroup:
    """Parse the line-oriented ``GSG 1`` format.  Any deviation is an InputError."""
    lines = list(_meaningful_lines(text))
    pos = 0

    def take(expect_head: str | None = None, width: int | None = None):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 0
            raise InputError(f"unexpected end of input (expected {expect_head or 'a table row'})", last + 1)
        lineno, toks = lines[pos]
        pos += 1
        if expect_head is not None:
            if toks[0] != expect_head or len(toks) != 2:
                raise InputError(f"expected '{expect_head} <n>', got {' '.join(toks)!r}", lineno)
            return lineno, _int_token(toks[1], lineno)
        if len(toks) != width:
            raise InputError(f"expected {width} entries, got {len(toks)}", lineno)
        return lineno, [_int_token(t, lineno) for t in toks]

    if not lines:
        raise InputError("empty input", 1)
    lineno, toks = lines[0]
    if toks != ["GSG", "1"]:
        raise InputError(f"expected header 'GSG 1', got {' '.join(toks)!r}", lineno)
    pos = 1
    ln, s = take("S")
    if s < 1:
        raise InputError("S must be at least 1", ln)
    ln, g = take("G")
    if g < 1:
        raise InputError("G must be at least 1", ln)

    def block(head: str, k: int, rows: int, width: int, bound: int):
        ln, idx = take(head)
        if idx != k:
            raise InputError(f"expected '{head} {k}', got '{head} {idx}'", ln)
        out = []
        for _ in range(rows):
            ln, row = take(width=width)
            for v in row:
                if v >= bound:
                    raise InputError(f"index {v} out of range 0..{bound - 1}", ln)
            out.append(row)
        return out

    by_gamma = [block("T", k, s, s, s) for k in range(g)]
    table = [[[by_gamma[a][x][y] for y in range(s)] for a in range(g)] for x in range(s)]
    gamma_table = None
    if pos < len(lines):
        by_elem = [block("GT", k, g, g, g) for k in range(s)]
        gamma_table = [[[by_elem[x][a][b] for b in range(g)] for x in range(s)] for a in range(g)]
    if pos < len(lines):
        raise InputError(f"trailing content {' '.join(lines[pos][1])!r}", lines[pos][0])
    return GammaSemigroup(s, g, table, gamma_table)


def format_gsg(gs: GammaSemigroup) -> str:
    out = ["GSG 1", f"S {gs.s_size}", f"G {gs.g_size}"]
    for a in gs.gammas():
        out.append(f"T {a}")
        out.extend(" ".join(str(int(v)) for v in gs.table[x, a, :]) for x in gs.elements())
    if gs.gamma_table is not None:
        for x in gs.elements():
            out.append(f"GT {x}")
            out.extend(" ".join(str(int(v)) for v in gs.gamma_table[a, x, :]) for a in gs.gammas())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# enumeration

FILTERS = ("commutative", "has-left-unity", "has-right-unity", "has-both-unities")


def _passes(gs: GammaSemigroup, filters: Iterable[str]) -> bool:
    for f in filters:
        if f == "commutative" and not is_commutative(gs):
            return False
        if f in ("has-left-unity", "has-both-unities") and left_unity_pair(gs) is None:
            return False
        if f in ("has-right-unity", "has-both-unities") and right_unity_pair(gs) is None:
            return False
    return True


def _associative_tables(s: int, g: int) -> Iterator[tuple[int, ...]]:
    """Backtracking fill of the flattened table in lexicographic order.

    Every associativity equation is tested as soon as the last of its four
    lookups is assigned, so a complete table reaching the leaf is associative.
    """
    n = s * g * s

    def cell(x, a, y):
        return (x * g + a) * s + y

    touching: list[set] = [set() for _ in range(n)]
    for x, a, y in itertools.product(range(s), range(g), range(s)):
        c = cell(x, a, y)
        for b, z in itertools.product(range(g), range(s)):
            touching[c].add((x, a, y, b, z))          # c = x a y
        for u, b in itertools.product(range(s), range(g)):
            touching[c].add((u, b, x, a, y))          # c = y' b z'
        for u, b, v in itertools.product(range(s), range(g), range(s)):
            touching[c].add((u, b, v, a, y))          # c = (u b v) a y, outer lookup
            touching[c].add((x, a, u, b, v))          # c = x a (u b v), outer lookup
    eqs = [sorted(e) for e in touching]
    t: list[int | None] = [None] * n

    def consistent(c: int) -> bool:
        for x, a, y, b, z in eqs[c]:
            p = t[cell(x, a, y)]
            if p is None:
                continue
            q = t[cell(y, b, z)]
            if q is None:
                continue
            lhs, rhs = t[cell(p, b, z)], t[cell(x, a, q)]
            if lhs is not None and rhs is not None and lhs != rhs:
                return False
        return True

    def fill(c: int):
        if c == n:
            yield tuple(t)
            return
        for v in range(s):
            t[c] = v
            if consistent(c):
                yield from fill(c + 1)
        t[c] = None

    yield from fill(0)


class InstanceStream:
    """Iterator over enumerated instances; ``truncated`` is set once the limit cuts it short."""

    def __init__(self, sizes: Sequence[tuple[int, int]], filters: Iterable[str] = (),
                 limit: int | None = None):
        for s, g in sizes:
            if s < 1 or g < 1:
                raise InputError(f"sizes must be positive, got S={s} G={g}")
        filters = tuple(filters)
        unknown = [f for f in filters if f not in FILTERS]
        if unknown:
            raise InputError(f"unknown filter(s) {unknown}; choose from {FILTERS}")
        self.sizes, self.filters, self.limit = list(sizes), filters, limit
        self.truncated = False
        self.count = 0
        self._it = self._run()

    def _run(self) -> Iterator[GammaSemigroup]:
        for s, g in self.sizes:
            for flat in _associative_tables(s, g):
                gs = GammaSemigroup(s, g, np.array(flat, dtype=np.int64).reshape(s, g, s))
                if not _passes(gs, self.filters):
                    continue
                if self.limit is not None and self.count >= self.limit:
                    self.truncated = True
                    return
                self.count += 1
                yield gs

    def __iter__(self):
        return self

    def __next__(self) -> GammaSemigroup:
        return next(self._it)


def enumerate_instances(s_size: int, g_size: int, filters: Iterable[str] = (),
                        limit: int | None = None) -> InstanceStream:
    """All associative tables of the given sizes passing ``filters``, in lexicographic order."""
    return InstanceStream([(s_size, g_size)], filters, limit)


def enumerate_bounded(max_s: int, max_g: int, filters: Iterable[str] = (),
                      limit: int | None = None) -> InstanceStream:
    """Instances with ``1 <= s <= max_s`` and ``1 <= g <= max_g``, ordered by (s, g) then table."""
    sizes = [(s, g) for s in range(1, max_s + 1) for g in range(1, max_g + 1)]
    return InstanceStream(sizes, filters, limit)


# ---------------------------------------------------------------------------
# named small instances used across tests, docs and the CLI

def singleton() -> GammaSemigroup:
    return GammaSemigroup(1, 1, [[[0]]])


def left_zero(n: int = 2) -> GammaSemigroup:
    return GammaSemigroup.from_function(n, 1, lambda x, a, y: x)


def mod2() -> GammaSemigroup:
    """S = {0, 1} with one operator acting as multiplication mod 2."""
    return GammaSemigroup.from_function(2, 1, lambda x, a, y: (x * y) % 2)
