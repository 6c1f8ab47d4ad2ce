"""Finite assemblers: sites with an initial object and finite disjoint
covering families, their K0 presentations, quotients, cofibers, sink
groups, tuple categories, and truncated nerve homology."""

from .budget import Budget, BudgetExhausted, DEFAULT_LIMIT, as_budget
from .category import (FiniteCategory, PackedCategory, ValidationReport,
                       cones, identity_id, initial_morphism_id,
                       monomorphism_flags, pack_category, pullback,
                       validate_category)
from .coverage import (Assembler, AxiomReport, CoverFamily, check_axioms,
                       common_refinement,
                       enumerate_disjoint_covering_families,
                       find_disjoint_covering_family, refines)
from .document import (DocumentError, assembler_from_document,
                       assembler_to_document, dumps, load, loads, save)
from .fixtures import (FIXTURES, SIEVES, SUBS, fixture, fixture_sieve,
                       fixture_sub, intervals, open_sets, seg_euler,
                       seg_length, sphere_group)
from .kzero import (K0Group, devissage_check, k0, k0_map,
                    k0_map_is_isomorphism, localization_check,
                    scissors_congruent)
from .morphisms import (AssemblerMorphism, MorphismReport,
                        check_assembler_morphism, coproduct,
                        has_complements, is_sieve, is_subassembler,
                        product, quotient, smash_with_pointed_set,
                        subassembler_on)
from .nerve import (TruncatedSimplicialSet, boundary_squared_is_zero,
                    diagonal_level_space, homology, nerve_h0_matches_pi0,
                    truncated_nerve)
from .simplicial import (SimplicialAssembler, check_simplicial_identities,
                         circle_smash, cofiber, constant_simplicial,
                         k0_simplicial)
from .sinks import (SinkGroup, Span, check_sink_conditions, find_sink,
                    group_isomorphism, restrict_to_object,
                    restriction_span_map, sink_group, sink_projection,
                    verify_sink_family_conjugation)
from .snf import (Presentation, invariant_factors, map_is_isomorphism,
                  smith_normal_form)
from .wcat import (WCategory, WMorphism, WRelCategory, build_w,
                   build_w_rel, check_w_properties, pi0_wcat,
                   wedge_decomposition_check)
from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION

__version__ = "0.1.0"

__all__ = [n for n in dir() if not n.startswith("_")]
