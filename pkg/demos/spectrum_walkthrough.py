"""Walk through the spectrum of the Kohn Laplacian on S^{2n-1}.

Every number printed here is an exact rational or integer: eigenvalues are
2q(p+n-1) on the bidegree-(p, q) harmonic space, multiplicities are the
space dimensions, and coinciding eigenvalues are merged by exact equality.
"""

from kohn_spectra import Bidegree, aggregate_spectrum, boxb_eigenvalue, multiplicity
from kohn_spectra.spectrum import sphere_harmonic_dim

n = 2
print(f"=== Kohn Laplacian on S^{2 * n - 1} (n = {n}) ===\n")

print("eigenvalues and multiplicities by bidegree (p, q):")
for k in range(4):
    row = []
    for p in range(k + 1):
        d = Bidegree(p, k - p)
        row.append(f"(p={d.p},q={d.q}): ev={boxb_eigenvalue(n, d)}, mult={multiplicity(n, d)}")
    print(f"  degree {k}:  " + "   ".join(row))

print("""
Note the kernel: every (p, 0) cell has eigenvalue 0 (the Hardy space), and
eigenvalues genuinely collide across bidegrees, e.g. (1,1) and (0,2):
""")
print(f"  ev(1,1) = {boxb_eigenvalue(n, Bidegree(1, 1))}, ev(0,2) = {boxb_eigenvalue(n, Bidegree(0, 2))}")

print("\naggregated spectrum up to eigenvalue 12 (exact grouping):")
for entry in aggregate_spectrum(n, 12).entries:
    cells = ", ".join(f"({d.p},{d.q})" for d in entry.contributors)
    print(f"  lambda = {entry.eigenvalue!s:>4}   total mult = {entry.multiplicity:>3}   from {cells}")

print("\ndegree slices fill out the classical spherical harmonics:")
for k in range(6):
    total = sum(multiplicity(n, Bidegree(p, k - p)) for p in range(k + 1))
    print(f"  sum of dim H_(p,q), p+q={k}:  {total}  == dim H_{k} = {sphere_harmonic_dim(n, k)}")
