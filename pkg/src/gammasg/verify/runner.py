"""Run catalog checks over an instance population."""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..core import GammaSemigroup, InstanceStream
from .catalog import CATALOG, CheckEntry, Tally, negate, Witness, hypothesis_failure, resolve
from .population import Explicit, InstanceData, Policy


@dataclass
class Population:
    """A fixed list of instances plus where they came from."""
    instances: list
    source: str = "explicit"
    truncated: bool = False

    @classmethod
    def from_stream(cls, stream: InstanceStream, source: str) -> "Population":
        items = list(stream)
        return cls(items, source, stream.truncated)

    def __len__(self):
        return len(self.instances)


@dataclass
class CheckResult:
    id: str
    instances: int = 0
    cases: int = 0
    skips: Counter = field(default_factory=Counter)
    witness: Witness | None = None
    witness_instance: int | None = None

    @property
    def skipped(self) -> int:
        return sum(self.skips.values())

    @property
    def verdict(self) -> str:
        if self.witness is not None:
            return "FAIL"
        return "PASS" if self.cases else "VACUOUS"

    def merge(self, other: "CheckResult"):
        self.instances += other.instances
        self.cases += other.cases
        self.skips.update(other.skips)
        if other.witness is not None and (self.witness is None or other.witness_instance < self.witness_instance):
            self.witness, self.witness_instance = other.witness, other.witness_instance


@dataclass
class SuiteResult:
    results: list
    population: Population
    policy: Policy
    sampled: int = 0
    weak_rho: int = 0

    @property
    def verdict(self) -> str:
        return "FAIL" if any(r.verdict == "FAIL" for r in self.results) else "PASS"


def evaluate(entry: CheckEntry, d: InstanceData, result: CheckResult, ignore_hypothesis: bool = False):
    """Evaluate one entry on one instance, accumulating into ``result``."""
    if not ignore_hypothesis:
        reason = hypothesis_failure(d, entry.hypothesis)
        if reason is not None:
            result.skips[reason] += 1
            return
    result.instances += 1
    tally = Tally()
    for out in entry.assertion(d, tally):
        ok = ~out.ok if entry.negated else out.ok
        result.cases += int(ok.size)
        if result.witness is None and not ok.all():
            j = int(np.argmin(ok))
            subsets, detail = out.witness(j)
            if entry.negated:
                detail = "negated assertion; original holds: " + detail
            result.witness = Witness(entry.id, d.S, subsets, detail)
            result.witness_instance = d.index
    result.skips.update(tally.skips)


def _run_block(entries, block: list, policy: Policy,
               ignore_hypothesis: bool = False) -> tuple[list, int, int]:
    entries = [_entry_from_key(e) for e in entries]
    results = [CheckResult(e.id) for e in entries]
    sampled = weak = 0
    for index, S in block:
        d = InstanceData(S, index, policy)
        for e, r in zip(entries, results):
            evaluate(e, d, r, ignore_hypothesis)
        sampled += len(d.sampled)
        weak += S.gamma_table is None
    return results, sampled, weak


def _entry_from_key(e):
    # worker processes receive (id, negated) since assertions are closures
    if isinstance(e, CheckEntry):
        return e
    check_id, negated = e
    entry = CATALOG[check_id]
    return negate(entry) if negated else entry


def run_suite(population: Population, checks="all", policy: Policy | None = None,
              entries: Sequence[CheckEntry] | None = None) -> SuiteResult:
    """Evaluate the selected checks on every instance; results come back in catalog order."""
    policy = policy or Policy()
    entries = list(entries) if entries is not None else resolve(checks)
    indexed = list(enumerate(population.instances))
    jobs = policy.jobs if policy.jobs > 0 else (os.cpu_count() or 1)
    if jobs > 1 and len(indexed) > 1:
        blocks = [indexed[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            keys = [(e.id, e.negated) for e in entries]
            parts = list(pool.map(_run_block, [keys] * jobs, blocks, [policy] * jobs))
    else:
        parts = [_run_block(entries, indexed, policy)]
    results = [CheckResult(e.id) for e in entries]
    sampled = weak = 0
    for part, s, w in parts:
        for total, r in zip(results, part):
            total.merge(r)
        sampled += s
        weak += w
    return SuiteResult(results, population, policy, sampled, weak)


def run_check(check_id, population: Population, policy: Policy | None = None) -> CheckResult:
    entry = check_id if isinstance(check_id, CheckEntry) else resolve([check_id])[0]
    return run_suite(population, entries=[entry], policy=policy).results[0]


def reevaluate(witness: Witness, entry: CheckEntry, ignore_hypothesis: bool = False) -> bool:
    """True iff the violation reproduces using only the witness's own instance and subsets."""
    explicit = Explicit()
    for _, kind, subset in witness.subsets:
        tag = subset.carrier.tag
        bucket = explicit.crisp if kind == "crisp" else explicit.fuzzy
        bucket.setdefault(tag, []).append(subset)
    d = InstanceData(witness.instance, 0, Policy(), explicit)
    result = CheckResult(entry.id)
    evaluate(entry, d, result, ignore_hypothesis)
    return result.witness is not None


def population_of(instances: Iterable[GammaSemigroup], source: str = "explicit") -> Population:
    return Population(list(instances), source)
