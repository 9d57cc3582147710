"""Exact invariants of nilpotent Lie algebras with complex structures.

Everything computes over explicit number fields Q(sqrt(d1), ..., sqrt(dm));
no floating point appears anywhere.  The submodules layer bottom-up:

* :mod:`nilalg.scalar` exact real and complex scalars with decidable sign,
* :mod:`nilalg.linalg` dense exact matrices, subspaces, integer lattices,
* :mod:`nilalg.liealg` structure constants, validation, invariant cohomology,
* :mod:`nilalg.complexstruct` almost complex structures and their invariants,
* :mod:`nilalg.hermitian` closed semipositive (1,1)-forms and nullspaces,
* :mod:`nilalg.torus` period matrices, Neron-Severi lattices, algebraic
  dimension of complex 2-tori,
* :mod:`nilalg.catalog` built-in example families,
* :mod:`nilalg.cli` the ``nilalg`` command.
"""

from nilalg.catalog import (
    CatalogEntry,
    algebra_from_one_form_differentials,
    default_entries,
    entry_names,
    entry_to_data,
    get_entry,
    h3_r3,
    iwasawa,
    iwasawa_algebraic_dimension,
    kodaira_thurston,
    standard_block_j,
    ugarte_a,
    ugarte_b,
)
from nilalg.complexstruct import (
    ComplexStructure,
    albanese_dim,
    closed_one_zero_forms_dim,
    commutator_j_span,
    complex_structure_to_data,
    holomorphic_one_forms_dim,
    integrability_witness,
    invariant_report,
    is_integrable,
    is_rational_j,
    j_invariant_span,
    kahler_rank,
    load_complex_structure,
    nijenhuis_tensor,
    rational_hull,
    rational_j_invariant_span,
)
from nilalg.hermitian import (
    Abelianization,
    PreconditionError,
    abelianization,
    adjoint_square_identity_holds,
    contraction_nullspace,
    contraction_nullspace_report,
    hermitian_matrix,
    hermitian_nullspace,
    hermitian_signature,
    is_closed,
    is_holomorphic_subalgebra,
    is_one_one,
    is_semipositive,
    is_subalgebra,
    load_two_form,
    positive_hermitian_form,
    pullback_two_form,
    random_positive_hermitian_form,
    two_form_from_matrix,
    two_form_matrix,
    two_form_to_data,
    verify_nullspace_contains_commutator,
)
from nilalg.liealg import (
    KForm,
    NilpotentLieAlgebra,
    ValidationReport,
    algebra_to_data,
    average,
    cohomology_dims,
    load_algebra,
)
from nilalg.linalg import (
    IntLattice,
    Mat,
    ShapeError,
    Subspace,
    hermite_normal_form,
    image,
    integer_kernel,
    inverse,
    kernel,
    rank,
    row_space,
    rref,
    solve,
    symmetric_signature,
)
from nilalg.scalar import (
    CScalar,
    FieldTower,
    RealAlg,
    ScalarParseError,
    TowerOverflowError,
    format_cscalar,
    format_realalg,
    parse_cscalar,
    parse_realalg,
)
from nilalg.torus import (
    E_COORD_PAIRS,
    AlgebraicDimension,
    J_from_X,
    J_from_tau,
    PeriodTau,
    algebraic_dimension,
    alpha_degeneracy,
    e_coords,
    e_matrix,
    is_one_one_on_torus,
    load_torus,
    ns_condition_coefficients,
    ns_condition_value,
    ns_lattice,
    tau_from_J,
    tau_to_data,
)

__all__ = [
    # scalar
    "CScalar",
    "FieldTower",
    "RealAlg",
    "ScalarParseError",
    "TowerOverflowError",
    "format_cscalar",
    "format_realalg",
    "parse_cscalar",
    "parse_realalg",
    # linalg
    "IntLattice",
    "Mat",
    "ShapeError",
    "Subspace",
    "hermite_normal_form",
    "image",
    "integer_kernel",
    "inverse",
    "kernel",
    "rank",
    "row_space",
    "rref",
    "solve",
    "symmetric_signature",
    # liealg
    "KForm",
    "NilpotentLieAlgebra",
    "ValidationReport",
    "algebra_to_data",
    "average",
    "cohomology_dims",
    "load_algebra",
    # complexstruct
    "ComplexStructure",
    "albanese_dim",
    "closed_one_zero_forms_dim",
    "commutator_j_span",
    "complex_structure_to_data",
    "holomorphic_one_forms_dim",
    "integrability_witness",
    "invariant_report",
    "is_integrable",
    "is_rational_j",
    "j_invariant_span",
    "kahler_rank",
    "load_complex_structure",
    "nijenhuis_tensor",
    "rational_hull",
    "rational_j_invariant_span",
    # hermitian
    "Abelianization",
    "PreconditionError",
    "abelianization",
    "adjoint_square_identity_holds",
    "contraction_nullspace",
    "contraction_nullspace_report",
    "hermitian_matrix",
    "hermitian_nullspace",
    "hermitian_signature",
    "is_closed",
    "is_holomorphic_subalgebra",
    "is_one_one",
    "is_semipositive",
    "is_subalgebra",
    "load_two_form",
    "positive_hermitian_form",
    "pullback_two_form",
    "random_positive_hermitian_form",
    "two_form_from_matrix",
    "two_form_matrix",
    "two_form_to_data",
    "verify_nullspace_contains_commutator",
    # torus
    "AlgebraicDimension",
    "E_COORD_PAIRS",
    "J_from_X",
    "J_from_tau",
    "PeriodTau",
    "algebraic_dimension",
    "alpha_degeneracy",
    "e_coords",
    "e_matrix",
    "is_one_one_on_torus",
    "load_torus",
    "ns_condition_coefficients",
    "ns_condition_value",
    "ns_lattice",
    "tau_from_J",
    "tau_to_data",
    # catalog
    "CatalogEntry",
    "algebra_from_one_form_differentials",
    "default_entries",
    "entry_names",
    "entry_to_data",
    "get_entry",
    "h3_r3",
    "iwasawa",
    "iwasawa_algebraic_dimension",
    "kodaira_thurston",
    "standard_block_j",
    "ugarte_a",
    "ugarte_b",
]
