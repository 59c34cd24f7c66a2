"""Filters, principal filters and semilattice congruences on finite ordered Γ-semigroups."""

__version__ = "0.1.0"

from .core import (AxiomError, ElementSet, KindError, PoGammaStructure,
                   StructuralProfile, StructureError, ValidationReport,
                   Violation, structural_profile, up_set, validate)
from .filters import (FilterCheck, Theorem27Sets, all_filters, filter_closure,
                      is_filter, principal_filter, principal_filter_oracle,
                      theorem27_sets)
from .congruences import (CongruenceCheck, Partition, QuotientStructure,
                          check_congruence, class_order,
                          enumerate_semilattice_congruences, quotient,
                          quotient_upset_T, relation_N,
                          smallest_semilattice_congruence)
from .enumerate import (EnumConfig, canonical_key, enumerate_structures,
                        gamma_from_semigroup, random_structure)
from .claims import CATALOG, ClaimVerdict, SearchReport, check_claim, search_counterexamples
from .io import hasse_dot, parse_structure, serialize_structure

__all__ = [
    "AxiomError", "ElementSet", "KindError", "PoGammaStructure", "StructuralProfile",
    "StructureError", "ValidationReport", "Violation", "structural_profile", "up_set",
    "validate",
    "FilterCheck", "Theorem27Sets", "all_filters", "filter_closure", "is_filter",
    "principal_filter", "principal_filter_oracle", "theorem27_sets",
    "CongruenceCheck", "Partition", "QuotientStructure", "check_congruence", "class_order",
    "enumerate_semilattice_congruences", "quotient", "quotient_upset_T", "relation_N",
    "smallest_semilattice_congruence",
    "EnumConfig", "canonical_key", "enumerate_structures", "gamma_from_semigroup",
    "random_structure",
    "CATALOG", "ClaimVerdict", "SearchReport", "check_claim", "search_counterexamples",
    "hasse_dot", "parse_structure", "serialize_structure",
]
