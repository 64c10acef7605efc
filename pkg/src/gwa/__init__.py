"""Finite groups with action on themselves: axiom checks, ideals, derived
actions, semi-direct products and exhaustive audits over small carriers."""

from .actions import (ActionTriple, check_conditions_A, check_conditions_B,
                      check_dot_group_action, check_reduced_conditions, check_unit_and_zero,
                      ideal_action, is_derived_action, is_derived_action_reduced,
                      naive_self_action, self_action)
from .core import (CheckReport, FiniteGwa, GroupTable, GwaMorphism, StructureError,
                   conjugation_gwa, cyclic_group, identity_action_gwa, is_morphism, is_reduced,
                   klein_four, symmetric_group, trivial_group, validate_group, validate_gwa,
                   validate_self_action)
from .enumeration import (AuditSummary, audit_implication, audit_theorem_3_3, audit_theorem_4_3,
                          enumerate_action_triples, enumerate_ideals, enumerate_self_actions)
from .ideals import SubsetMask, ideal_closure, is_ideal, is_normal_subgroup, quotient_gwa, \
    quotient_map
from .semidirect import (SemidirectCandidate, SplitExtension, build_semidirect,
                         canonical_split_extension, extract_derived_actions, roundtrip_check,
                         validate_candidate)

__version__ = "0.1.0"
