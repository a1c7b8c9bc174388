"""Graded K[T]-modules, homogeneous matrix reduction, and barcodes."""

from .field import FieldElement, FieldSpec
from .graded_matrix import GradedMatrix
from .graded_poly import INF, GradedSignature, HomogeneousTerm
from .persistence import Barcode, FilteredComplex, homology_persistence_module, persistent_homology
from .presentation import GradedPresentation, PersistenceModule, decompose, presentation_from_persistence
from .reduction import (
    ReductionResult,
    SmithNormalForm,
    elementary_divisors_by_minors,
    quotient_signature,
    reduce,
    to_smith_normal_form,
    verify_signature_uniqueness,
)

__all__ = [
    "INF",
    "Barcode",
    "FieldElement",
    "FieldSpec",
    "FilteredComplex",
    "GradedMatrix",
    "GradedPresentation",
    "GradedSignature",
    "HomogeneousTerm",
    "PersistenceModule",
    "ReductionResult",
    "SmithNormalForm",
    "decompose",
    "elementary_divisors_by_minors",
    "homology_persistence_module",
    "persistent_homology",
    "presentation_from_persistence",
    "quotient_signature",
    "reduce",
    "to_smith_normal_form",
    "verify_signature_uniqueness",
]
