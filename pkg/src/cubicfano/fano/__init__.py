"""Genus-2 curve configurations on Fano surfaces: lattices, line normal forms, invariant families."""

from .configs import (
    GENUS2_RULE,
    IntersectionRule,
    MissingOrder,
    NumericIdentityReport,
    gram_from_group,
    group_lattice_report,
    klein_report,
    lambda_survey,
    numeric_identities,
    scaled_lattice_report,
    survey_low_rank,
)
from .families import (
    FAMILIES,
    KLEIN_CUBIC,
    d4_decompositions,
    d4_nonexistence_scan,
    dihedral_contains_d4,
    family_membership_check,
    family_polynomials,
    family_representation,
    smoothness_scan,
    subspace_certificate,
)
from .lines import (
    HARMONIC_INVERSION,
    LineError,
    LineNormalForm,
    conic_matrix,
    gamma_quintic,
    genus2_classification,
    harmonic_inversion_test,
    line_normal_form,
    normalize_line_coords,
    random_normal_form,
    reconstruct_cubic,
)

__all__ = [
    "GENUS2_RULE",
    "IntersectionRule",
    "MissingOrder",
    "NumericIdentityReport",
    "gram_from_group",
    "group_lattice_report",
    "klein_report",
    "lambda_survey",
    "numeric_identities",
    "scaled_lattice_report",
    "survey_low_rank",
    "FAMILIES",
    "KLEIN_CUBIC",
    "d4_decompositions",
    "d4_nonexistence_scan",
    "dihedral_contains_d4",
    "family_membership_check",
    "family_polynomials",
    "family_representation",
    "smoothness_scan",
    "HARMONIC_INVERSION",
    "LineError",
    "LineNormalForm",
    "conic_matrix",
    "gamma_quintic",
    "genus2_classification",
    "harmonic_inversion_test",
    "line_normal_form",
    "normalize_line_coords",
    "random_normal_form",
    "reconstruct_cubic",
]
