"""Exact construction, normal forms and classification of two-variable
extension presentations over Q[t1..tm], with a brute-force linear-algebra
certificate for the PBW basis."""

from .catalogue import CatalogueEntry, get_entry, get_example, names
from .classify import (ClassificationReport, SPBWView, check_graded_biconditional,
                       check_trimmed_biconditional, classify, doe_to_spbw,
                       is_double_via_det, spbw_to_doe)
from .errors import (ConstraintError, DescriptorMismatchError, DorexError,
                     InconsistentMapsError, InconsistentPresentationError,
                     ParseError, RefusalError, ResourceCapError)
from .extension import (DegreeResult, DOEPresentation, Element, GradingReport,
                        OverlapReport, det_sigma, det_sigma_endo, element_degree,
                        grading_check, multiply, overlap_consistency_check,
                        x_times_ring)
from .maps import (Endo, PairCheckReport, StructureMaps, apply_delta,
                   apply_sigma, check_delta_derivation, check_sigma_hom)
from .oracle import (FreenessCertificate, free_dims, hilbert_closed_form,
                     pbw_freeness_check, pbw_monomial_counts, relation_set)
from .poly import Poly, Ring, Scalar, as_scalar, poly_add, poly_mul, poly_scale
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "CatalogueEntry", "ClassificationReport", "ConstraintError",
    "DegreeResult", "DescriptorMismatchError", "DorexError",
    "DOEPresentation", "Element", "Endo", "FreenessCertificate",
    "GradingReport", "InconsistentMapsError", "InconsistentPresentationError",
    "OverlapReport", "PairCheckReport", "ParseError", "Poly", "RefusalError",
    "ResourceCapError", "Ring", "SPBWView", "Scalar", "StructureMaps",
    "Verdict", "apply_delta", "apply_sigma", "as_scalar",
    "check_delta_derivation", "check_graded_biconditional", "check_sigma_hom",
    "check_trimmed_biconditional", "classify", "det_sigma", "det_sigma_endo",
    "doe_to_spbw", "element_degree", "free_dims", "get_entry", "get_example",
    "grading_check", "hilbert_closed_form", "is_double_via_det", "multiply",
    "names", "overlap_consistency_check", "pbw_freeness_check",
    "pbw_monomial_counts", "poly_add", "poly_mul", "poly_scale",
    "relation_set", "spbw_to_doe", "x_times_ring",
]
