"""Exact homological algebra for operadic plus-constructions and matrix algebras."""

from .linalg import GF, QQ, SparseMatrix, SubspaceBasis, decompose, field_from_name, quotient_basis
from .complexes import ChainComplex, ComplexMap, HomologyReport, homology, induced_map, suspension
from .algebra import (
    Ideal,
    Module,
    StructureConstantAlgebra,
    derivations,
    indecomposables,
    is_perfect,
    perfect_radical,
    quotient_map,
    uce,
)
from .matrices import (
    MatrixAlgebraSpec,
    dual_numbers,
    full_matrix_ring,
    gl,
    ground_ring,
    matrix_ring,
    product_ring,
    sl,
    steinberg_verify,
    truncated_polynomial_ring,
    upper_triangular_ring,
)
from .theories import homology_dim, stability_sweep, theory_complex, theory_homology
from .operads import SigmaModule, check_may_axioms, classical_operad, free_operad
from .freealg import Generator, QuasiFreePresentation, admissibility_probe, hurewicz, pi0, quillen_homology
from .plus import (
    cofiber_pi0_law,
    cofiber_presentation,
    cone_presentation,
    otree_family,
    otree_telescope,
    plus_pi0,
    plus_report,
    telescope_report,
)

__all__ = [
    "QQ",
    "GF",
    "SparseMatrix",
    "SubspaceBasis",
    "decompose",
    "field_from_name",
    "quotient_basis",
    "ChainComplex",
    "ComplexMap",
    "HomologyReport",
    "homology",
    "induced_map",
    "suspension",
    "Ideal",
    "Module",
    "StructureConstantAlgebra",
    "derivations",
    "indecomposables",
    "is_perfect",
    "perfect_radical",
    "quotient_map",
    "uce",
    "MatrixAlgebraSpec",
    "dual_numbers",
    "full_matrix_ring",
    "gl",
    "ground_ring",
    "matrix_ring",
    "product_ring",
    "sl",
    "steinberg_verify",
    "truncated_polynomial_ring",
    "upper_triangular_ring",
    "homology_dim",
    "stability_sweep",
    "theory_complex",
    "theory_homology",
    "SigmaModule",
    "check_may_axioms",
    "classical_operad",
    "free_operad",
    "Generator",
    "QuasiFreePresentation",
    "admissibility_probe",
    "hurewicz",
    "pi0",
    "quillen_homology",
    "cofiber_pi0_law",
    "cofiber_presentation",
    "cone_presentation",
    "otree_family",
    "otree_telescope",
    "plus_pi0",
    "plus_report",
    "telescope_report",
]

__version__ = "0.1.0"
