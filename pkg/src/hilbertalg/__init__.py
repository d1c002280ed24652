"""Finite Hilbert algebra toolkit.

Implication tables with their filters, multipliers, closure endomorphisms,
the kernel and fixpoint correspondences, adjoint semilattices and minimal
Brouwerian extensions; exhaustive enumeration up to isomorphism; and
verification suites that check the structure theorems on concrete algebras.
"""

from .adjoint import (
    AdjointSemilattice,
    BrouwerianExtension,
    adjoint_ideal_lattice,
    adjoint_semilattice,
    compact_elements,
    composite_translation,
    minimal_brouwerian_extension,
    subtraction,
)
from .closure import (
    CeLattice,
    NonMonomialFilterError,
    NotClosureRetractError,
    NotSpecialError,
    all_closure_endos,
    ce_from_monomial_filter,
    ce_from_retract,
    cross_meets,
    endomorphisms_bruteforce,
    finitely_generated_ce,
    is_closure_endomorphism,
    is_closure_operator,
    is_closure_retract,
    is_endomorphism,
    is_extensive,
    is_idempotent,
    is_isotone,
    is_special,
    search_endomorphisms,
    special_closure_retracts,
)
from .core import (
    AlgebraClass,
    FiniteHilbertAlgebra,
    HilbertAxiomError,
    InvariantViolation,
    MalformedTableError,
    Violation,
    axiom_violations,
    block_from,
    classify,
    compatible_meet,
    is_block,
    is_compatible,
    is_relative_subsemilattice,
    is_subalgebra,
    natural_order,
    partial_join,
    partial_meet,
    subalgebras,
    validate_hilbert,
)
from .enumeration import (
    AlgebraCatalog,
    CatalogEntry,
    EndoMonoid,
    EnumerationBound,
    are_isomorphic,
    canonical_form,
    canonical_table,
    catalog_through,
    cross_survey_report,
    endomorphism_monoid,
    enumerate_algebras,
    monoid_isomorphism,
    search_valid_tables,
)
from .filters import (
    CongruenceClasses,
    FilterLattice,
    all_filters,
    class_of,
    congruence_classes,
    filter_generated,
    filter_join,
    is_filter,
    is_filter_via_bounds,
    is_monomial,
    lower_set,
    monomial_max,
)
from .lattice import FiniteLattice, LatticeError
from .multipliers import (
    MultiplierAlgebra,
    all_multipliers,
    compose,
    constant_one,
    fixpoints,
    identity_map,
    is_multiplier,
    join_translation,
    kernel,
    multiplier_calculus_report,
    multiplier_orbit,
    multipliers_bruteforce,
    peirce_map,
    pointwise_imp,
    pointwise_leq,
    pointwise_meet,
    search_multipliers,
    translation,
)
from .report import CheckResult, ReportBuilder, VerificationReport

__version__ = "0.1.0"
