"""Holomorphic-disc spectra and the invariant m that separates the families.

Run with: python demos/03_disc_invariants.py
"""

from polylag import (
    disc_spectrum,
    distinguish,
    invariant_m,
    minimal_maslov,
    simplex_product_family,
    smooth_isotopy_class_count,
    stretched_family,
)

# Disc boundary classes land in pi_1 = Z^2 and come in two branches with
# linear index formulas.  For the member (10, 4, 2) the low spectrum:
F = simplex_product_family(10, 4, 2)
print("== disc spectrum of simplex-product (10, 4, 2), index <= 16 ==")
for d in disc_spectrum(F, 16):
    print(
        f"branch {d.branch}  lambda=({d.lam1},{d.lam2})  index {d.index:>3}  "
        f"boundary {d.boundary_class}  generic point: {d.generic_point}"
    )

# m = least index over doubled-primitive branch-A classes above the
# threshold; here the enumeration reproduces the closed form 2(n-p+k).
rep = invariant_m(F)
print(
    f"\ninvariant m = {rep.m} (closed form {rep.closed_form}), "
    f"witness boundary class {rep.witness_class}"
)

# Varying k at fixed (n, p) = (14, 6): three members, pairwise distinct m,
# hence three Hamiltonian isotopy classes (= p/2) with one diffeo type.
print("\n== simplex-product grid n=14, p=6, k in {0, 2, 4} ==")
grid = [simplex_product_family(14, 6, k) for k in (0, 2, 4)]
for F6 in grid:
    print(
        f"k={F6.k}: minimal Maslov {minimal_maslov(F6.model)}, "
        f"m = {invariant_m(F6).m}, diffeo {F6.diffeo_type}"
    )
report = distinguish(grid)
print("non-isotopic classes:", report["class_count"])
print(
    "smooth isotopy classes available (Haefliger-Hirsch):",
    smooth_isotopy_class_count(grid[0]),
)

# The stretched family is non-monotone for k > 0 and branch B produces
# discs of zero and negative index once k > 2.
F5 = stretched_family(2, 4)
print("\n== stretched family p=2, k=4 ==")
print("monotone:", F5.model.monotone, " t:", F5.model.t)
negative = [d for d in disc_spectrum(F5, 0) if d.branch == "B"][:4]
for d in negative:
    print(f"branch B lambda=({d.lam1},{d.lam2}) index {d.index}")

# All even k > 2 give the same diffeo type but different m: infinitely many
# non-isotopic embeddings, three of them shown here.
report5 = distinguish([stretched_family(2, k) for k in (4, 6, 8)])
for c in report5["classes"]:
    print(f"k values {c['k_values']}: m = {c['m']}, diffeo {c['diffeo_type']}")
for pair in report5["same_diffeo_nonisotopic_pairs"]:
    print(f"k pair {pair['k_pair']}: {pair['verdict']}")
