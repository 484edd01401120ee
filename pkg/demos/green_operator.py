"""The complex Green operator as an exact spectral calculus.

A polynomial restricted to the sphere decomposes into harmonic bihomogeneous
components; the Kohn Laplacian, its inverse (the Green operator G), and the
Hardy projection all act diagonally on that decomposition.  Everything below
is exact rational arithmetic, including the final residual identity

    boxb(G f) = f - hardy(f)        (the canonical solution property).
"""

from fractions import Fraction

from kohn_spectra import (
    Polynomial,
    apply_boxb,
    apply_green,
    decompose,
    hardy_projection,
    residual_check,
)

n = 2
z1 = Polynomial.z(n, 1)
zb1 = Polynomial.z_bar(n, 1)
f = z1 * zb1 + zb1 * Fraction(3, 4) + z1 ** 2

print("f =", f)
print("\nspherical decomposition (each part harmonic, bihomogeneous):")
for comp in decompose(f).components:
    print(f"  (p={comp.bidegree.p}, q={comp.bidegree.q}):  {comp.part}")

print("\nThe (1,1) monomial z1*zb1 is NOT harmonic; on the sphere it splits as")
print("  z1*zb1 = 1/2 (z1*zb1 - z2*zb2) + 1/2,   since |z|^2 = 1 there.")

print("\nboxb f   =", apply_boxb(f).as_polynomial())
print("G f      =", apply_green(f).as_polynomial())
print("hardy f  =", hardy_projection(f).as_polynomial(), "   (the q = 0 part: boxb kernel)")

print("\ncanonical solution identity, exact residual:")
print("  || boxb(G f) - (f - hardy f) ||^2 =", residual_check(f))

print("\nG annihilates the Hardy space and inverts boxb elsewhere:")
print("  G(z1^3)  =", apply_green(z1 ** 3).as_polynomial(), "  (holomorphic input)")
print("  G(zb1)   =", apply_green(zb1).as_polynomial(), " (eigenvalue 2, so G scales by 1/2)")
