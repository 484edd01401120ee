"""Brute-force construction of harmonic polynomial bases by exact linear algebra.

This module is the independent oracle for the closed-form spectral data: it
computes kernels of the ambient Laplacian on bidegree monomial spaces by
exact Gaussian elimination over the rationals, so dimensions, orthogonality,
and the eigenvalue bookkeeping can all be checked without trusting any
formula.

Determinism: monomials of a fixed bidegree are ordered lexicographically on
the concatenated exponent pair (alpha, beta) (all candidates share the same
grade, so graded-lex reduces to lex), and elimination always pivots on the
first nonzero entry.  Bases are therefore reproducible bit for bit.

The Kohn-Laplacian eigenvalue itself is not re-derived (that would need the
tangential Cauchy-Riemann operators on forms); the oracle verifies the two
ingredients the spectral assignment rests on -- harmonicity and bidegree,
via the Euler degree operators -- and records 2q(p+n-1) from the verified
bidegree.  This trust boundary is deliberate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import spectrum
from .polynomials import (
    Bidegree,
    ExactScalar,
    Multiindex,
    Polynomial,
    ambient_laplacian,
    euler_z,
    euler_z_bar,
    multiindices,
    sphere_inner_product,
)

__all__ = [
    "HarmonicBasis",
    "CellVerification",
    "VerificationReport",
    "bidegree_monomials",
    "harmonic_basis",
    "orthonormalize",
    "verify_eigen_identities",
]


@dataclass(frozen=True)
class HarmonicBasis:
    """A basis of the bidegree-(p, q) harmonic polynomials on C^n.

    ``squared_norms`` is populated by :func:`orthonormalize`; elements are
    kept rational (orthogonal, not unit) because square roots leave the
    coefficient field.
    """

    n: int
    bidegree: Bidegree
    elements: tuple[Polynomial, ...]
    squared_norms: tuple[Fraction, ...] | None = None


def bidegree_monomials(n: int, d: Bidegree) -> list[tuple[Multiindex, Multiindex]]:
    """All monomial exponent pairs of bidegree (p, q), lex-sorted."""
    d = Bidegree(*d)
    return [(a, b) for a in multiindices(n, d.p) for b in multiindices(n, d.q)]


def _rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (matrix, pivot columns)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if matrix[i][c]), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        pivot = matrix[r][c]
        if pivot != 1:
            matrix[r] = [x / pivot for x in matrix[r]]
        for i in range(rows):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                row_r = matrix[r]
                matrix[i] = [a - factor * b if b else a for a, b in zip(matrix[i], row_r)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return matrix, pivots


def _nullspace(matrix: list[list[Fraction]], cols: int) -> list[list[Fraction]]:
    """Standard kernel basis from the RREF: one vector per free column."""
    if not matrix:
        return [[Fraction(1) if i == f else Fraction(0) for i in range(cols)] for f in range(cols)]
    reduced, pivots = _rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            if row[free]:
                vec[pc] = -row[free]
        basis.append(vec)
    return basis


def harmonic_basis(n: int, d: Bidegree) -> HarmonicBasis:
    """Basis of ker(ambient Laplacian) on the bidegree-(p, q) monomial space.

    For p = 0 or q = 0 every monomial is already harmonic and the monomial
    basis is returned directly.  Otherwise the Laplacian is written as an
    exact integer matrix from the (p, q) monomial space to the (p-1, q-1)
    one and its kernel is extracted by exact elimination.
    """
    spectrum._check_dimension(n)
    d = Bidegree(*d)
    source = bidegree_monomials(n, d)
    if d.p == 0 or d.q == 0:
        elements = tuple(Polynomial.monomial(n, a, b) for a, b in source)
        return HarmonicBasis(n, d, elements)

    target = bidegree_monomials(n, Bidegree(d.p - 1, d.q - 1))
    target_index = {key: i for i, key in enumerate(target)}
    matrix = [[Fraction(0)] * len(source) for _ in target]
    for col, (alpha, beta) in enumerate(source):
        for j in range(n):
            a, b = alpha[j], beta[j]
            if a and b:
                key = (
                    alpha[:j] + (a - 1,) + alpha[j + 1 :],
                    beta[:j] + (b - 1,) + beta[j + 1 :],
                )
                matrix[target_index[key]][col] += 4 * a * b

    elements = []
    for vec in _nullspace(matrix, len(source)):
        terms = {source[i]: ExactScalar(vec[i]) for i in range(len(source)) if vec[i]}
        elements.append(Polynomial(n, terms))
    return HarmonicBasis(n, d, tuple(elements))


def orthonormalize(basis: HarmonicBasis) -> HarmonicBasis:
    """Gram-Schmidt with the exact sphere pairing.

    Returns mutually orthogonal elements with their exact squared norms;
    normalization is deferred since square roots are generally irrational.
    """
    orthogonal: list[Polynomial] = []
    norms: list[Fraction] = []
    for element in basis.elements:
        u = element
        for v, nsq in zip(orthogonal, norms):
            coeff = sphere_inner_product(u, v) / ExactScalar(nsq)
            u = u - v * coeff
        if not u:
            raise RuntimeError(
                f"basis for {basis.bidegree} on C^{basis.n} is linearly dependent"
            )
        value = sphere_inner_product(u, u)
        if value.im or value.re <= 0:
            raise RuntimeError(f"non-positive squared norm {value}; this is a bug")
        orthogonal.append(u)
        norms.append(value.re)
    return HarmonicBasis(basis.n, basis.bidegree, tuple(orthogonal), tuple(norms))


@dataclass(frozen=True)
class CellVerification:
    bidegree: Bidegree
    dimension: int
    formula_dimension: int
    harmonic_ok: bool
    bidegree_ok: bool
    boxb_eigenvalue: Fraction
    laplace_beltrami_eigenvalue: Fraction

    @property
    def ok(self) -> bool:
        return (
            self.dimension == self.formula_dimension
            and self.harmonic_ok
            and self.bidegree_ok
        )


@dataclass(frozen=True)
class VerificationReport:
    n: int
    max_degree: int
    cells: tuple[CellVerification, ...]
    orthogonality_ok: bool
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.orthogonality_ok and all(cell.ok for cell in self.cells)

    def to_json_dict(self) -> dict:
        from .polynomials import fraction_to_string

        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "orthogonality_ok": self.orthogonality_ok,
            "cells": [
                {
                    "p": c.bidegree.p,
                    "q": c.bidegree.q,
                    "dimension": c.dimension,
                    "formula_dimension": c.formula_dimension,
                    "harmonic_ok": c.harmonic_ok,
                    "bidegree_ok": c.bidegree_ok,
                    "boxb_eigenvalue": fraction_to_string(c.boxb_eigenvalue),
                    "laplace_beltrami_eigenvalue": fraction_to_string(
                        c.laplace_beltrami_eigenvalue
                    ),
                    "ok": c.ok,
                }
                for c in self.cells
            ],
            "failures": list(self.failures),
        }


def verify_eigen_identities(n: int, max_degree: int) -> VerificationReport:
    """Run the full oracle over every bidegree cell with p+q <= max_degree.

    Per cell and basis element h this checks, all exactly:

    * ambient Laplacian of h is 0 (so h restricted to the sphere is a
      spherical harmonic of degree k = p+q, hence a Laplace-Beltrami
      eigenfunction with eigenvalue k(k+2n-2) by homogeneity);
    * h is bihomogeneous of the stated bidegree under the Euler operators
      sum z_j d/dz_j and sum zbar_j d/dzbar_j, which pins the Kohn-Laplacian
      eigenvalue 2q(p+n-1);
    * the kernel dimension matches the closed-form multiplicity;
    * elements of distinct cells are pairwise orthogonal on the sphere.
    """
    spectrum._check_dimension(n)
    if max_degree < 1:
        raise ValueError(f"max_degree must be >= 1, got {max_degree}")

    cells: list[CellVerification] = []
    failures: list[str] = []
    bases: list[HarmonicBasis] = []
    for k in range(max_degree + 1):
        for p in range(k + 1):
            d = Bidegree(p, k - p)
            basis = harmonic_basis(n, d)
            bases.append(basis)
            harmonic_ok = True
            bidegree_ok = True
            for h in basis.elements:
                if ambient_laplacian(h):
                    harmonic_ok = False
                    failures.append(f"cell {d}: not harmonic: {h}")
                if euler_z(h) != h * d.p or euler_z_bar(h) != h * d.q:
                    bidegree_ok = False
                    failures.append(f"cell {d}: wrong bidegree: {h}")
            cells.append(
                CellVerification(
                    bidegree=d,
                    dimension=len(basis.elements),
                    formula_dimension=spectrum.multiplicity(n, d),
                    harmonic_ok=harmonic_ok,
                    bidegree_ok=bidegree_ok,
                    boxb_eigenvalue=spectrum.boxb_eigenvalue(n, d),
                    laplace_beltrami_eigenvalue=spectrum.laplace_beltrami_eigenvalue(n, k),
                )
            )
            if len(basis.elements) != cells[-1].formula_dimension:
                failures.append(
                    f"cell {d}: kernel rank {len(basis.elements)} != formula "
                    f"{cells[-1].formula_dimension}"
                )

    orthogonality_ok = True
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            for f in bases[i].elements:
                for g in bases[j].elements:
                    value = sphere_inner_product(f, g)
                    if value:
                        orthogonality_ok = False
                        failures.append(
                            f"cells {bases[i].bidegree} vs {bases[j].bidegree}: "
                            f"<{f}, {g}> = {value} != 0"
                        )

    return VerificationReport(
        n=n,
        max_degree=max_degree,
        cells=tuple(cells),
        orthogonality_ok=orthogonality_ok,
        failures=tuple(failures),
    )
