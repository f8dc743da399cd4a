"""Command-line interface: ``gammasg <subcommand> ...``.

Exit status: 0 success or pass, 1 check failure / counterexample / invalid
structure, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .core import (FILTERS, AxiomError, InputError, enumerate_instances, enumerate_bounded, format_gsg,
                   parse_gsg, require_valid, validate)
from .extension import extend_any
from .fuzzy import (CRISP_PREDICATES, FUZZY_PREDICATES, classify_crisp, classify_fuzzy, format_ifs,
                    parse_grade, parse_ifs, support_if_crisp)
from .operator import LEFT, RIGHT, ConstructionError, OperatorContext, normalize_map
from .transfer import transfer_fuzzy
from .verify import CATALOG, Policy, reevaluate
from .verify.population import DEFAULT_LATTICE
from .verify.report import format_json, format_report, parse_witnesses
from .verify.runner import Population, run_suite
from .verify.search import search_counterexample

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str):
    return require_valid(parse_gsg(_read(path)))


def _load_subset(path: str, ctx: OperatorContext):
    return parse_ifs(_read(path), ctx.carrier)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _pair(text: str, what: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"{what} must look like S,G (two integers), got {text!r}") from None
    return a, b


def _lattice(text: str) -> tuple:
    values = tuple(sorted({parse_grade(t.strip()) for t in text.split(",") if t.strip()}))
    if not values:
        raise InputError("empty --lattice")
    return values


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    gs = parse_gsg(_read(args.file))
    report = validate(gs, max_violations=args.max_violations)
    if report.ok:
        print(f"VALID S={gs.s_size} G={gs.g_size}")
        return EXIT_OK
    print(f"INVALID S={gs.s_size} G={gs.g_size} violations={len(report.violations)}")
    for v in report.violations:
        print(f"VIOLATION {v}")
    return EXIT_FAIL


def _print_operator(op, print_classes: bool, unity):
    print(f"OPERATOR {op.side} classes={op.class_count}")
    if print_classes:
        for k, members in enumerate(op.members):
            print(f"CLASS {op.label(k)} members=" + " ".join(f"({a},{b})" for a, b in members))
    print("CAYLEY")
    for row in op.cayley:
        print(" ".join(str(int(v)) for v in row))
    print(f"UNITY {op.side} " + (op.label(unity) if unity is not None else "none"))


def cmd_operators(args) -> int:
    ctx = OperatorContext(_load_instance(args.file))
    u = ctx.unities
    sides = [args.side] if args.side else [LEFT, RIGHT]
    for side in sides:
        op = ctx.left if side == LEFT else ctx.right
        _print_operator(op, args.print_classes, u.left_unity if side == LEFT else u.right_unity)
    if ctx.S.gamma_table is None:
        print("NOTE weak-rho: no gamma table; rho uses the S-action condition only")
    return EXIT_OK


def _witness_text(value) -> str:
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], str):
        where, detail = value
        return f" witness={_tuple_text(where)} {detail}"
    return f" witness={_tuple_text(value)}"


def _tuple_text(t) -> str:
    return "(" + ",".join(str(v) for v in t) + ")" if isinstance(t, tuple) else str(t)


def cmd_check(args) -> int:
    ctx = OperatorContext(_load_instance(args.file))
    A = _load_subset(args.subset, ctx)
    preds = [args.predicate] if args.predicate != "all" else list(FUZZY_PREDICATES)
    fuzzy_preds = [p for p in preds if p in FUZZY_PREDICATES]
    crisp_preds = [p for p in preds if p in CRISP_PREDICATES]
    if fuzzy_preds:
        flags = classify_fuzzy(A)
        for p in fuzzy_preds:
            value = flags.get(p)
            extra = _witness_text(flags.witnesses[p]) if not value and p in flags.witnesses else ""
            print(f"{p}: {str(value).lower()}{extra}")
    if crisp_preds:
        P = support_if_crisp(A)
        if P is None:
            raise InputError(f"predicate {crisp_preds[0]} needs a crisp subset (a characteristic pair)")
        flags = classify_crisp(P)
        for p in crisp_preds:
            value = getattr(flags, p.replace("-", "_"))
            wit = flags.witnesses.get(p)
            if not value and wit is None and p in ("ideal", "prime", "semiprime"):
                wit = flags.witnesses.get("left-ideal") or flags.witnesses.get("right-ideal")
            extra = _witness_text(wit) if not value and wit is not None else ""
            print(f"{p}: {str(value).lower()}{extra}")
    return EXIT_OK


def cmd_transfer(args) -> int:
    ctx = OperatorContext(_load_instance(args.file))
    A = _load_subset(args.subset, ctx)
    _emit(format_ifs(transfer_fuzzy(A, normalize_map(args.map), ctx)), args.output)
    return EXIT_OK


def cmd_extend(args) -> int:
    ctx = OperatorContext(_load_instance(args.file))
    A = _load_subset(args.subset, ctx)
    _emit(format_ifs(extend_any(A, args.by)), args.output)
    return EXIT_OK


def _policy(args) -> Policy:
    return Policy(lattice=_lattice(args.lattice), cap=args.cap, samples=args.samples, seed=args.seed,
                  family_size=args.family_size, jobs=args.jobs)


def cmd_verify(args) -> int:
    instances, sources = [], []
    for f in args.files:
        instances.append(_load_instance(f))
        sources.append(Path(f).name)
    truncated = False
    if args.enumerate:
        s, g = _pair(args.enumerate, "--enumerate")
        stream = enumerate_bounded(s, g, args.filter or (), args.limit)
        instances.extend(stream)
        truncated = stream.truncated
        sources.append(f"enumerate:{s},{g}")
    if not instances:
        raise InputError("verify needs instance files and/or --enumerate S,G")
    population = Population(instances, "+".join(sources), truncated)
    suite = run_suite(population, args.checks, _policy(args))
    _emit(format_json(suite) if args.json else format_report(suite), args.output)
    return EXIT_FAIL if suite.verdict == "FAIL" else EXIT_OK


def cmd_search(args) -> int:
    s, g = _pair(args.bounds, "--bounds")
    result = search_counterexample(args.check, s, g, args.limit, drop_hypothesis=not args.keep_hypothesis,
                                   policy=_policy(args))
    _emit(result.format(), args.output)
    return EXIT_FAIL if result.status == "COUNTEREXAMPLE" else EXIT_OK


def cmd_replay(args) -> int:
    witnesses = parse_witnesses(_read(args.report))
    if not witnesses:
        print("REPLAY witnesses=0")
        return EXIT_OK
    reproduced = 0
    for w in witnesses:
        if w.check_id not in CATALOG:
            raise InputError(f"unknown check id {w.check_id!r} in witness")
        hit = reevaluate(w, CATALOG[w.check_id], ignore_hypothesis=args.ignore_hypothesis)
        reproduced += hit
        print(f"REPLAY {w.check_id} {'REPRODUCED' if hit else 'NOT-REPRODUCED'}")
    return EXIT_FAIL if reproduced else EXIT_OK


def cmd_enumerate(args) -> int:
    stream = enumerate_instances(args.s_size, args.g_size, args.filter or (), args.limit)
    if args.count:
        n = sum(1 for _ in stream)
        print(f"COUNT {n} truncated={str(stream.truncated).lower()}")
        return EXIT_OK
    for k, gs in enumerate(stream):
        sys.stdout.write(f"# instance {k}\n{format_gsg(gs)}")
    if stream.truncated:
        print(f"# truncated after {stream.count} instances")
    return EXIT_OK


# ---------------------------------------------------------------------------

def _population_flags(p: argparse.ArgumentParser):
    p.add_argument("--lattice", default=",".join(str(Fraction(v)) for v in DEFAULT_LATTICE),
                   help="grade lattice for generated fuzzy subsets (comma separated p/q)")
    p.add_argument("--cap", type=int, default=10 ** 6, help="largest exhaustive fuzzy population per carrier")
    p.add_argument("--samples", type=int, default=4096, help="random draws when a population exceeds the cap")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family-size", type=int, default=3, help="largest family for intersection/inf checks")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammasg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms of a GSG file")
    p.add_argument("file")
    p.add_argument("--max-violations", type=int, default=20)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("operators", help="print the left/right operator semigroups")
    p.add_argument("file")
    p.add_argument("--side", choices=(LEFT, RIGHT))
    p.add_argument("--print-classes", action="store_true")
    p.set_defaults(fn=cmd_operators)

    p = sub.add_parser("check", help="classify a subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.add_argument("--predicate", default="all", choices=("all",) + FUZZY_PREDICATES + CRISP_PREDICATES)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("transfer", help="apply a transfer map to a fuzzy subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.add_argument("--map", required=True, choices=("star", "star-prime", "plus", "plus-prime"))
    p.add_argument("--output", "-o")
    p.set_defaults(fn=cmd_transfer)

    p = sub.add_parser("extend", help="extension of a fuzzy subset by an element")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.add_argument("--by", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("verify", help="run catalog checks over instances")
    p.add_argument("files", nargs="*")
    p.add_argument("--enumerate", metavar="S,G", help="add all instances with sizes up to S,G")
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--limit", type=int, help="cap on enumerated instances (flags the report as truncated)")
    p.add_argument("--checks", default="all", help="'all' or comma separated ids / id prefixes")
    p.add_argument("--json", action="store_true")
    _population_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="look for a counterexample with the hypothesis dropped")
    p.add_argument("check")
    p.add_argument("--bounds", default="2,1", metavar="S,G")
    p.add_argument("--limit", type=int)
    p.add_argument("--keep-hypothesis", action="store_true")
    _population_flags(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("replay", help="re-evaluate the witness blocks of a report")
    p.add_argument("report")
    p.add_argument("--ignore-hypothesis", action="store_true", help="for witnesses produced by search")
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("enumerate", help="list associative tables")
    p.add_argument("s_size", type=int)
    p.add_argument("g_size", type=int)
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--limit", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, AxiomError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
