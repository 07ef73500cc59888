"""Exact computations for a Hopf-plumbed knot family of genus g.

Integer linear algebra (Bareiss determinants, Sturm-certified eigenvalue
enclosures, Gershgorin discs), Seifert matrices of plumbed Hopf bands,
Thurston's two-twist construction for the monodromy, and the classical
invariants read off a Seifert matrix.
"""
from .errors import NoRealRootError, UnresolvedError
from .interval import RationalEnclosure
from .invariants import (LaurentPolynomial, alexander, alexander_module_agrees, fox_milnor_witness,
                         homological_monodromy, knot_signature, levine_tristram, seifert_forms_equal)
from .linalg import (IntegerMatrix, IntegerPolynomial, char_poly, determinant, disc_is_isolated,
                     gershgorin_discs, gram, largest_root_enclosure, signature_exact)
from .plumbing import (PlumbingTree, SeifertMatrix, build_family_matrix, seifert_chain, seifert_family,
                       seifert_tree, transvection_power, twist_intersection_bounds)
from .records import FamilyRecord, family_record, family_table
from .thurston import (g2_closed_form_mu, stretch_factors_distinct, thurston_classify,
                       verify_family_bounds)

__all__ = [
    "NoRealRootError", "UnresolvedError", "RationalEnclosure",
    "LaurentPolynomial", "alexander", "alexander_module_agrees", "fox_milnor_witness",
    "homological_monodromy", "knot_signature", "levine_tristram", "seifert_forms_equal",
    "IntegerMatrix", "IntegerPolynomial", "char_poly", "determinant", "disc_is_isolated",
    "gershgorin_discs", "gram", "largest_root_enclosure", "signature_exact",
    "PlumbingTree", "SeifertMatrix", "build_family_matrix", "seifert_chain", "seifert_family",
    "seifert_tree", "transvection_power", "twist_intersection_bounds",
    "FamilyRecord", "family_record", "family_table",
    "g2_closed_form_mu", "stretch_factors_distinct", "thurston_classify", "verify_family_bounds",
]

__version__ = "0.1.0"
