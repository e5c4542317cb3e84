"""Z2 Cheeger numbers, spectral gaps and homology of finite simplicial complexes."""

from .algebra import (
    Z2Basis, Z2Chain, Z2Matrix, betti, betti_numbers, boundary_matrix, rank, smith_normal_form,
    torsion_coefficients,
)
from .cheeger import CheegerCertificate, chain_certificate, cheeger, structural_cheeger, verify_certificate
from .complex import SimplicialComplex, build_complex, simplex
from .config import Config, load_config
from .dirichlet import (
    agreement_check, border_extension, dirichlet_cheeger_mincut, dirichlet_pair, dual_graph,
    top_cheeger_mincut,
)
from .errors import BeyondBruteForceCap, HypothesisViolated, ParseError, SCXError, ValidationError
from .generators import FamilySpec, gk, random_disk, random_tree, rp2, sigma, stellar_subdivide, xk, yk
from .io import parse_complex, serialize_complex
from .spectra import jacobi_eigenvalues, laplacian, spectral_gap, symmetric_spectrum
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "BeyondBruteForceCap",
    "CheegerCertificate",
    "Config",
    "FamilySpec",
    "HypothesisViolated",
    "ParseError",
    "SCXError",
    "SimplicialComplex",
    "ValidationError",
    "Z2Basis",
    "Z2Chain",
    "Z2Matrix",
    "agreement_check",
    "betti",
    "betti_numbers",
    "border_extension",
    "boundary_matrix",
    "build_complex",
    "chain_certificate",
    "cheeger",
    "dirichlet_cheeger_mincut",
    "dirichlet_pair",
    "dual_graph",
    "gk",
    "jacobi_eigenvalues",
    "laplacian",
    "load_config",
    "parse_complex",
    "random_disk",
    "random_tree",
    "rank",
    "rp2",
    "run_suite",
    "serialize_complex",
    "sigma",
    "simplex",
    "smith_normal_form",
    "spectral_gap",
    "stellar_subdivide",
    "structural_cheeger",
    "symmetric_spectrum",
    "top_cheeger_mincut",
    "torsion_coefficients",
    "verify_certificate",
    "xk",
    "yk",
]
