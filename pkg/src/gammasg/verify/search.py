"""Counterexample search: run a check with its hypothesis dropped over enumerated instances."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import enumerate_bounded
from .catalog import CheckEntry, resolve
from .population import InstanceData, Policy
from .report import format_witness
from .runner import CheckResult, evaluate


@dataclass
class SearchResult:
    check_id: str
    status: str             # COUNTEREXAMPLE | EXHAUSTED | INCONCLUSIVE
    instances: int
    cases: int
    dropped: str
    result: CheckResult

    def format(self) -> str:
        line = (f"SEARCH {self.check_id} {self.status} dropped={self.dropped} "
                f"instances={self.instances} cases={self.cases}\n")
        if self.result.witness is not None:
            line += format_witness(self.result.witness)
        return line


def search_counterexample(check, max_s: int, max_g: int, limit: int | None = None,
                          drop_hypothesis: bool = True, policy: Policy | None = None) -> SearchResult:
    """Stream instances with S <= max_s and G <= max_g until the check fails.

    COUNTEREXAMPLE: a failing (instance, subset) was found.  EXHAUSTED: every
    instance within the bounds passed.  INCONCLUSIVE: the instance limit cut
    the stream before either happened.
    """
    entry = check if isinstance(check, CheckEntry) else resolve([check])[0]
    policy = policy or Policy()
    stream = enumerate_bounded(max_s, max_g, limit=limit)
    result = CheckResult(entry.id)
    for index, S in enumerate(stream):
        evaluate(entry, InstanceData(S, index, policy), result, ignore_hypothesis=drop_hypothesis)
        if result.witness is not None:
            status = "COUNTEREXAMPLE"
            break
    else:
        status = "INCONCLUSIVE" if stream.truncated else "EXHAUSTED"
    dropped = entry.hypothesis if drop_hypothesis else "none"
    return SearchResult(entry.id, status, result.instances, result.cases, dropped, result)
