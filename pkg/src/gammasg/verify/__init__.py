"""Check catalog, population runner, reports and counterexample search."""
from .catalog import CATALOG, ENTRIES, CheckEntry, Witness, negate, resolve
from .population import DEFAULT_LATTICE, Policy
from .runner import CheckResult, Population, SuiteResult, reevaluate, run_check, run_suite

__all__ = ["CATALOG", "ENTRIES", "CheckEntry", "CheckResult", "DEFAULT_LATTICE", "Policy", "Population",
           "SuiteResult", "Witness", "negate", "reevaluate", "resolve", "run_check", "run_suite"]
