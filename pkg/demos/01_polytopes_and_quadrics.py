"""Halfspace presentations, exact combinatorics, and the quadric dictionary.

Run with: python demos/01_polytopes_and_quadrics.py
"""

from polylag import (
    combinatorially_equivalent,
    enumerate_vertices,
    fano_constant,
    is_delzant,
    nondegenerate,
    polytope_of,
    presentation,
    presentation_report,
    quadrics_of,
    simplex_product_presentation,
    standard_simplex_product_presentation,
    topology_hint,
    trapezoid_presentation,
    unit_square_presentation,
)

# A trapezoid from the Hirzebruch family: x1 >= 0, x2 >= 0, 1 - x2 >= 0,
# 3 - x1 - 2 x2 >= 0.  Everything below is exact rational arithmetic.
trap = trapezoid_presentation(2)
print("== trapezoid, k = 2 ==")
for v in enumerate_vertices(trap):
    print("vertex", tuple(map(str, v.point)), "active facets", v.active_set)
print("report:", presentation_report(trap))

# Delzant: at every vertex the active normals form a lattice basis.
print("Delzant:", is_delzant(trap).is_delzant)

# Fano would mean a constant offset vector works for the same normals;
# the trapezoid family fails this for k > 0.
print("Fano constant:", fano_constant(trap))
print("Fano constant of the unit square:", fano_constant(unit_square_presentation()))

# A non-Delzant triangle, with the witness vertex and its lattice index.
triangle = presentation(2, [(1, 0), (0, 1), (-1, -2)], [0, 0, 2])
verdict = is_delzant(triangle)
print("triangle Delzant:", verdict.is_delzant, "witness:", verdict.witness)

# The quadric dictionary: rows of Gamma span the relations among the
# normals, delta = Gamma @ b.  The trapezoid becomes
#   u2^2 + u3^2 = 1,   u1^2 + 2 u2^2 + u4^2 = 3.
Q = quadrics_of(trap)
print("\n== quadric system ==")
print("Gamma:", Q.gamma)
print("delta:", tuple(map(str, Q.delta)))
print("nondegenerate:", nondegenerate(Q))

# Going back: the recovered presentation is the same polytope up to a
# lattice-compatible change of coordinates.
back = polytope_of(Q)
print("round trip combinatorially equivalent:", combinatorially_equivalent(trap, back))

# The product-of-simplices polytope behind the monotone family:
# x_i + 1 >= 0 plus two sum facets, combinatorially Delta^4 x Delta^6.
P4 = simplex_product_presentation(10, 4, 2)
print("\n== product-of-simplices polytope (n=10, p=4, k=2) ==")
print("vertices:", len(enumerate_vertices(P4)), "= (p+1)(n-p+1)")
print("Delzant:", is_delzant(P4).is_delzant, " Fano constant:", fano_constant(P4))
print(
    "equivalent to the standard Delta^4 x Delta^6:",
    combinatorially_equivalent(P4, standard_simplex_product_presentation(4, 6)),
)

# Certificate-based diffeomorphism hints for the real quadric locus.
print("real locus of the product polytope:", topology_hint(P4).description)
print("real locus of the trapezoid:", topology_hint(trap).description)
