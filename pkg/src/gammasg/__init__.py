"""Finite Gamma-semigroups, their operator semigroups and intuitionistic fuzzy ideal theory."""
from .core import (AxiomError, GammaSemigroup, InputError, enumerate_bounded, enumerate_instances,
                   format_gsg, is_commutative, parse_gsg, validate)
from .extension import extend, extend_op
from .fuzzy import (CrispSubset, IFSubset, characteristic_pair, classify_crisp, classify_fuzzy,
                    includes, inf_family, level_sets)
from .operator import OperatorContext, OperatorSemigroup, build_operator, find_unities, transfer_crisp
from .transfer import transfer_fuzzy

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "CrispSubset", "GammaSemigroup", "IFSubset", "InputError", "OperatorContext",
    "OperatorSemigroup", "build_operator", "characteristic_pair", "classify_crisp", "classify_fuzzy",
    "enumerate_bounded", "enumerate_instances", "extend", "extend_op", "find_unities", "format_gsg",
    "includes", "inf_family", "is_commutative", "level_sets", "parse_gsg", "transfer_crisp",
    "transfer_fuzzy", "validate",
]
