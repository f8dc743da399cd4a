"""Text and JSON rendering of suite results, and witness block parsing."""
from __future__ import annotations

import json
from fractions import Fraction

from ..core import InputError, format_gsg, parse_gsg
from ..fuzzy import characteristic_pair, format_ifs, parse_ifs, support_if_crisp
from ..operator import OperatorContext
from .catalog import Witness
from .runner import CheckResult, SuiteResult

WEAK_RHO_NOTE = ("NOTE weak-rho instances={n}: no gamma table, so rho uses the S-action condition only "
                 "and R multiplies as [a,x][b,y]=[a,x b y]")


def _lattice_text(policy) -> str:
    return ",".join(str(Fraction(v)) for v in policy.lattice)


def population_line(suite: SuiteResult) -> str:
    pop, pol = suite.population, suite.policy
    return (f"POPULATION instances={len(pop)} source={pop.source} truncated={str(pop.truncated).lower()} "
            f"lattice={_lattice_text(pol)} cap={pol.cap} samples={pol.samples} seed={pol.seed} "
            f"sampled_carriers={suite.sampled}")


def check_line(r: CheckResult) -> str:
    return f"CHECK {r.id} {r.verdict} instances={r.instances} cases={r.cases} skipped={r.skipped}"


def format_witness(w: Witness) -> str:
    out = [f"WITNESS {w.check_id}", f"DETAIL {w.detail}", format_gsg(w.instance).rstrip("\n")]
    for label, kind, subset in w.subsets:
        out.append(f"SUBSET {label} {kind}")
        if kind == "crisp":
            subset = characteristic_pair(subset)
        out.append(format_ifs(subset).rstrip("\n"))
    out.append("END WITNESS")
    return "\n".join(out) + "\n"


def format_report(suite: SuiteResult) -> str:
    lines = [population_line(suite)]
    if suite.weak_rho:
        lines.append(WEAK_RHO_NOTE.format(n=suite.weak_rho))
    body = []
    for r in suite.results:
        lines.append(check_line(r))
        if r.witness is not None:
            body.append(format_witness(r.witness).rstrip("\n"))
    lines.extend(body)
    lines.append(f"SUITE {suite.verdict} checks={len(suite.results)}")
    return "\n".join(lines) + "\n"


def witness_dict(w: Witness) -> dict:
    return {
        "check": w.check_id,
        "detail": w.detail,
        "gsg": format_gsg(w.instance),
        "subsets": [{"label": label, "kind": kind,
                     "ifs": format_ifs(characteristic_pair(s) if kind == "crisp" else s)}
                    for label, kind, s in w.subsets],
    }


def report_dict(suite: SuiteResult) -> dict:
    pop, pol = suite.population, suite.policy
    return {
        "population": {"instances": len(pop), "source": pop.source, "truncated": pop.truncated,
                       "lattice": [str(Fraction(v)) for v in pol.lattice], "cap": pol.cap,
                       "samples": pol.samples, "seed": pol.seed, "sampled_carriers": suite.sampled,
                       "weak_rho_instances": suite.weak_rho},
        "checks": [{"id": r.id, "verdict": r.verdict, "instances": r.instances, "cases": r.cases,
                    "skipped": r.skipped, "skip_reasons": dict(sorted(r.skips.items())),
                    "witness": witness_dict(r.witness) if r.witness else None}
                   for r in suite.results],
        "suite": {"verdict": suite.verdict, "checks": len(suite.results)},
    }


def format_json(suite: SuiteResult) -> str:
    return json.dumps(report_dict(suite), indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# parsing witness blocks back

def parse_witnesses(text: str) -> list[Witness]:
    """Every WITNESS ... END WITNESS block in a report, rebuilt from its text alone."""
    out = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        if not lines[i].startswith("WITNESS "):
            i += 1
            continue
        check_id = lines[i].split(None, 1)[1].strip()
        j = i + 1
        while j < len(lines) and lines[j] != "END WITNESS":
            j += 1
        if j == len(lines):
            raise InputError(f"unterminated witness block for {check_id}", i + 1)
        out.append(_parse_block(check_id, lines[i + 1:j], i + 2))
        i = j + 1
    return out


def _parse_block(check_id: str, body: list[str], first_line: int) -> Witness:
    detail = ""
    if body and body[0].startswith("DETAIL "):
        detail = body[0][len("DETAIL "):]
        body = body[1:]
        first_line += 1
    sections, current, header = [], [], None
    for line in body:
        if line.startswith("SUBSET "):
            sections.append((header, current))
            header, current = line.split()[1:], []
        else:
            current.append(line)
    sections.append((header, current))
    gsg_lines = sections[0][1]
    try:
        S = parse_gsg("\n".join(gsg_lines) + "\n")
    except InputError as exc:
        raise InputError(f"witness {check_id}: {exc}", first_line) from exc
    ctx = OperatorContext(S)
    subsets = []
    for header, content in sections[1:]:
        if len(header) != 2 or header[1] not in ("crisp", "fuzzy"):
            raise InputError(f"witness {check_id}: bad SUBSET header {' '.join(header)!r}")
        label, kind = header
        A = parse_ifs("\n".join(content) + "\n", ctx.carrier)
        if kind == "crisp":
            crisp = support_if_crisp(A)
            if crisp is None:
                raise InputError(f"witness {check_id}: subset {label} is marked crisp but is not a characteristic pair")
            subsets.append((label, kind, crisp))
        else:
            subsets.append((label, kind, A))
    return Witness(check_id, S, subsets, detail)
