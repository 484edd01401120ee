"""Exact spectral calculus for the Kohn Laplacian and the complex Green
operator on the unit sphere S^{2n-1} in C^n.

The package works over Gaussian rationals end to end: closed-form spectra,
harmonic decomposition of polynomials, the operator calculus built on it,
Schatten-norm estimation with certified tail brackets, and best Sobolev
constants -- each closed form cross-checked by a brute-force polynomial
oracle (exact kernels of the ambient Laplacian).
"""

from . import harmonic_spaces, operators, schatten, sobolev, spectrum
from .harmonic_spaces import (
    HarmonicBasis,
    VerificationReport,
    harmonic_basis,
    orthonormalize,
    verify_eigen_identities,
)
from .operators import (
    FloatScaledDecomposition,
    HarmonicComponent,
    SphericalDecomposition,
    apply_boxb,
    apply_green,
    apply_sobolev_power,
    decompose,
    hardy_projection,
    residual_check,
    sobolev_norm_squared,
)
from .polynomials import (
    Bidegree,
    DimensionMismatchError,
    ExactScalar,
    FormatError,
    Multiindex,
    Polynomial,
    ambient_laplacian,
    bidegree_split,
    fraction_from_string,
    fraction_to_string,
    l2_norm_squared,
    monomial_sphere_integral,
    polynomial_from_dict,
    polynomial_to_dict,
    radius_squared,
    random_polynomial,
    sphere_inner_product,
)
from .schatten import SchattenReport, schatten_report
from .sobolev import BestConstantReport, GainCertificate, best_constant, sobolev_gain_certificate
from .spectrum import (
    AggregatedSpectrum,
    SpectrumEntry,
    aggregate_spectrum,
    boxb_eigenvalue,
    lambda_min,
    laplace_beltrami_eigenvalue,
    multiplicity,
)

__version__ = "0.1.0"

__all__ = [
    "AggregatedSpectrum",
    "BestConstantReport",
    "Bidegree",
    "DimensionMismatchError",
    "ExactScalar",
    "FloatScaledDecomposition",
    "FormatError",
    "GainCertificate",
    "HarmonicBasis",
    "HarmonicComponent",
    "Multiindex",
    "Polynomial",
    "SchattenReport",
    "SpectrumEntry",
    "SphericalDecomposition",
    "VerificationReport",
    "aggregate_spectrum",
    "ambient_laplacian",
    "apply_boxb",
    "apply_green",
    "apply_sobolev_power",
    "best_constant",
    "bidegree_split",
    "boxb_eigenvalue",
    "decompose",
    "fraction_from_string",
    "fraction_to_string",
    "hardy_projection",
    "harmonic_basis",
    "harmonic_spaces",
    "l2_norm_squared",
    "lambda_min",
    "laplace_beltrami_eigenvalue",
    "monomial_sphere_integral",
    "multiplicity",
    "operators",
    "orthonormalize",
    "polynomial_from_dict",
    "polynomial_to_dict",
    "radius_squared",
    "random_polynomial",
    "residual_check",
    "schatten",
    "schatten_report",
    "sobolev",
    "sobolev_gain_certificate",
    "sobolev_norm_squared",
    "spectrum",
    "sphere_inner_product",
    "verify_eigen_identities",
]
