"""Finite Hilbert algebras, their dual spaces and their free extensions.

Elements are integers ``0..size-1``; subsets of a carrier or of a point set
are bitmask ints.
"""

from .algebra import (
    FiniteAlgebra,
    StructureError,
    ValidationReport,
    Variety,
    chain,
    enrich,
    g4,
    h3,
    natural_order,
    order_algebra,
    trivial,
    validate,
)
from .duality import (
    FilterRelation,
    UpsetFamily,
    compose as compose_relations,
    d_of_x,
    epsilon,
    functional_check,
    h_space_check,
    has_lifting_property,
    phi,
    relation_of,
    upset_algebra,
)
from .enumeration import are_isomorphic, canonical_form, enumerate_algebras, naive_catalog
from .extensions import (
    CertificationError,
    Construction,
    ExtensionResult,
    big_phi,
    extend,
    extend_dagger,
    extend_ghey,
    extend_hey,
    extend_is,
    fc,
    is_envelope,
    x_star,
)
from .filters import (
    FilterPoset,
    PreconditionError,
    SeparationFailure,
    all_filters,
    extend_along,
    extend_along_star,
    generated_filter,
    irreducible_filters,
    is_implicative_filter,
    is_order_ideal,
    prime_filters,
    separate,
)
from .io import DocumentError, emit, load_algebra, load_morphism, parse_algebra, parse_morphism
from .morphisms import (
    LawReport,
    Morphism,
    compose,
    enumerate_morphisms,
    hat_g,
    identity,
    lift,
    validate_morphism,
    verify_functor_laws,
    verify_universal_property,
)

__all__ = [
    "FiniteAlgebra",
    "StructureError",
    "ValidationReport",
    "Variety",
    "chain",
    "enrich",
    "g4",
    "h3",
    "natural_order",
    "order_algebra",
    "trivial",
    "validate",
    "FilterRelation",
    "UpsetFamily",
    "compose_relations",
    "d_of_x",
    "epsilon",
    "functional_check",
    "h_space_check",
    "has_lifting_property",
    "phi",
    "relation_of",
    "upset_algebra",
    "are_isomorphic",
    "canonical_form",
    "enumerate_algebras",
    "naive_catalog",
    "CertificationError",
    "Construction",
    "ExtensionResult",
    "big_phi",
    "extend",
    "extend_dagger",
    "extend_ghey",
    "extend_hey",
    "extend_is",
    "fc",
    "is_envelope",
    "x_star",
    "FilterPoset",
    "PreconditionError",
    "SeparationFailure",
    "all_filters",
    "extend_along",
    "extend_along_star",
    "generated_filter",
    "irreducible_filters",
    "is_implicative_filter",
    "is_order_ideal",
    "prime_filters",
    "separate",
    "DocumentError",
    "emit",
    "load_algebra",
    "load_morphism",
    "parse_algebra",
    "parse_morphism",
    "LawReport",
    "Morphism",
    "compose",
    "enumerate_morphisms",
    "hat_g",
    "identity",
    "lift",
    "validate_morphism",
    "verify_functor_laws",
    "verify_universal_property",
]
