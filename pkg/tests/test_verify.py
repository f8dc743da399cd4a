import json
from fractions import Fraction as F

import pytest

from gammasg.core import InputError, enumerate_bounded, enumerate_instances, left_zero, mod2, singleton
from gammasg.verify import CATALOG, ENTRIES, Policy, negate, reevaluate, resolve, run_check, run_suite
from gammasg.verify.catalog import HYPOTHESES, WITNESS_KINDS
from gammasg.verify.report import format_json, format_report, parse_witnesses
from gammasg.verify.runner import Population
from gammasg.verify.search import search_counterexample

SMALL = Policy(lattice=(F(0), F(1, 2), F(1)))

EXPECTED_IDS = [
    "prop-2.3-crisp-star",
    "prop-2.4-crisp-star-prime",
    "prop-2.5-level-star",
    "prop-2.6-level-star-prime",
    "prop-2.7-fuzzy-star",
    "prop-2.8-fuzzy-star-prime",
    "remark-1-prop-2.3-plus",
    "remark-1-prop-2.4-plus-prime",
    "remark-1-prop-2.5-level-plus",
    "remark-1-prop-2.6-level-plus-prime",
    "remark-1-prop-2.7-plus",
    "remark-1-prop-2.8-plus-prime",
    "thm-2.9-roundtrip",
    "thm-2.10-roundtrip",
    "lemma-2.11-char-star",
    "lemma-2.12-char-star-prime",
    "remark-2-lemma-2.11-char-plus",
    "remark-2-lemma-2.12-char-plus-prime",
    "thm-2.13-crisp-bijection",
    "remark-3-crisp-bijection-plus",
    "prop-2.14-prime-star",
    "prop-2.15-prime-star-prime",
    "prop-2.16-ifpi-star",
    "prop-2.17-ifpi-star-prime",
    "remark-4-prop-2.14-plus",
    "remark-4-prop-2.15-plus-prime",
    "remark-4-prop-2.16-plus",
    "remark-4-prop-2.17-plus-prime",
    "thm-2.18-ifpi-roundtrip",
    "remark-5-ifspi-roundtrip",
    "remark-5-left-roundtrip",
    "cor-2.19-ifpi-r-l",
    "remark-6-ifi-r-l",
    "thm-2.21-prime-bijection",
    "prop-2.22-extension-operator",
    "prop-2.23-extension-source",
    "lemma-2.23-1-extension-inclusion",
    "lemma-2.23-2-extension-inf",
    "lemma-2.24-extension-star",
    "lemma-2.25-char-star-prime-ideal",
    "lemma-2.26-intersection-star-prime",
    "lemma-2.27-inf-star-prime",
    "prop-2.28-extension-ifi",
    "prop-2.29-extension-ifspi",
    "prop-2.30-extension-inf-ifspi",
    "thm-2.30-extension-semiprime-intersection",
    "thm-2.31-prime-extension",
    "ext-monotone",
]


def pop(*instances, source="test"):
    return Population(list(instances), source)


def test_catalog_is_complete_and_well_formed():
    assert sorted(EXPECTED_IDS) == sorted(CATALOG)
    assert len(CATALOG) == len(ENTRIES)
    for e in ENTRIES:
        assert e.hypothesis in HYPOTHESES
        assert e.witness_kind in WITNESS_KINDS
        assert e.statement


def test_resolve():
    assert len(resolve("all")) == len(ENTRIES)
    assert [e.id for e in resolve("prop-2.5")] == ["prop-2.5-level-star"]
    assert [e.id for e in resolve("thm-2.9-roundtrip,prop-2.5")] == ["thm-2.9-roundtrip", "prop-2.5-level-star"]
    with pytest.raises(InputError):
        resolve(["no-such-check"])


def test_level_star_on_singleton():
    r = run_check("prop-2.5-level-star", pop(singleton()))
    assert r.verdict == "PASS" and r.cases >= 1


def test_prime_extension_on_i2():
    r = run_check("thm-2.31-prime-extension", pop(mod2()))
    assert r.verdict == "PASS" and r.cases == 2      # ideals {0} and {0,1}


def test_roundtrip_skips_without_left_unity():
    r = run_check("thm-2.9-roundtrip", pop(left_zero()))
    assert r.verdict == "VACUOUS"
    assert dict(r.skips) == {"no left unity": 1}
    assert r.cases == 0


def test_suite_on_singleton_passes():
    suite = run_suite(pop(singleton()))
    assert suite.verdict == "PASS"
    assert all(r.verdict == "PASS" for r in suite.results)


def test_suite_on_order_two_passes():
    population = Population(list(enumerate_instances(2, 1)), "2,1")
    suite = run_suite(population, policy=SMALL)
    assert suite.verdict == "PASS"
    assert not [r.id for r in suite.results if r.verdict == "FAIL"]


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.id)
def test_negated_entry_fails_with_reproducible_witness(entry):
    population = Population(list(enumerate_bounded(2, 1)), "2,1")
    bad = negate(entry)
    suite = run_suite(population, entries=[bad], policy=SMALL)
    assert suite.verdict == "FAIL"
    witnesses = parse_witnesses(format_report(suite))
    assert len(witnesses) == 1
    assert reevaluate(witnesses[0], bad)
    assert not reevaluate(witnesses[0], entry)


def test_negated_fixture_fails_on_singleton():
    result = search_counterexample(negate(CATALOG["prop-2.5-level-star"]), 1, 1)
    assert result.status == "COUNTEREXAMPLE"
    assert result.result.witness.instance == singleton()


def test_search_unconditional_claim_exhausts():
    result = search_counterexample("prop-2.5", 2, 1)
    assert result.status == "EXHAUSTED"
    assert result.dropped == "none"


def test_search_reports_shape_only():
    result = search_counterexample("thm-2.9-roundtrip", 2, 1)
    assert result.status in ("COUNTEREXAMPLE", "EXHAUSTED")
    text = result.format()
    assert text.startswith(f"SEARCH thm-2.9-roundtrip {result.status} dropped=both-unities")
    if result.status == "COUNTEREXAMPLE":
        w = parse_witnesses(text)[0]
        assert reevaluate(w, CATALOG["thm-2.9-roundtrip"], ignore_hypothesis=True)


def test_search_limit_is_inconclusive():
    result = search_counterexample("prop-2.5", 3, 1, limit=3)
    assert result.status == "INCONCLUSIVE"


def test_report_is_deterministic_and_well_formed():
    policy = Policy(lattice=(F(0), F(1, 2), F(1)), cap=100, samples=64, seed=7)
    population = Population(list(enumerate_bounded(2, 2)), "2,2")
    a = format_report(run_suite(population, policy=policy))
    b = format_report(run_suite(population, policy=policy))
    assert a == b
    lines = a.splitlines()
    assert lines[0].startswith("POPULATION instances=24 ")
    assert "seed=7" in lines[0] and "cap=100" in lines[0]
    assert lines[1].startswith("NOTE weak-rho instances=24")
    checks = [ln for ln in lines if ln.startswith("CHECK ")]
    assert len(checks) == len(ENTRIES)
    assert lines[-1] == f"SUITE PASS checks={len(ENTRIES)}"


def test_parallel_run_matches_serial():
    population = Population(list(enumerate_bounded(2, 2)), "2,2")
    serial = format_report(run_suite(population, "prop-2.5,thm-2.31,thm-2.9", SMALL))
    parallel = format_report(run_suite(population, "prop-2.5,thm-2.31,thm-2.9",
                                       Policy(lattice=SMALL.lattice, jobs=2)))
    assert serial == parallel


def test_json_mirrors_text():
    population = Population([left_zero(), mod2()], "pair")
    suite = run_suite(population, "thm-2.9,prop-2.5", SMALL)
    doc = json.loads(format_json(suite))
    assert doc["suite"] == {"verdict": "PASS", "checks": 2}
    first = doc["checks"][0]
    assert set(first) == {"id", "verdict", "instances", "cases", "skipped", "skip_reasons", "witness"}
    assert first["skip_reasons"] == {"no left unity": 1}
    text = format_report(suite)
    for c in doc["checks"]:
        assert (f"CHECK {c['id']} {c['verdict']} instances={c['instances']} cases={c['cases']} "
                f"skipped={c['skipped']}") in text


def test_truncated_population_is_flagged():
    stream = enumerate_bounded(3, 1, limit=4)
    population = Population.from_stream(stream, "3,1")
    assert population.truncated
    assert "truncated=true" in format_report(run_suite(population, "prop-2.5", SMALL))
