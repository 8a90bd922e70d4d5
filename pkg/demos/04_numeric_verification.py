"""Numerical cross-checks: Lagrangian residuals, areas, winding indices.

Run with: python demos/04_numeric_verification.py
"""

import math

from polylag import (
    build_model,
    cycle_area_numeric,
    disc_index_winding,
    exact_cycle_area_coeff,
    lagrangian_residual,
    simplex_disc,
    perturbed_residual,
    sample_lagrangian,
    simplex_product_family,
    stretched_disc,
    stretched_family,
    trapezoid_presentation,
)

F = simplex_product_family(10, 4, 2)
M_trap = build_model(trapezoid_presentation(2))

# Sample points of the model (sphere blocks from normalized Gaussians,
# angles uniform) and measure how far the tangent frames are from being
# omega-isotropic.  Machine-precision residuals confirm the construction.
print("== Lagrangian condition ==")
for name, model in (("simplex(10,4,2)", F.model), ("trapezoid k=2", M_trap)):
    samples = sample_lagrangian(model, 100, seed=7)
    residual = lagrangian_residual(model, samples)
    control = perturbed_residual(model, samples)  # deliberately broken frame
    print(f"{name}: max |omega| = {residual:.2e}, negative control {control:.2e}")

# The generator cycles e_i have exact area pi * <eps_i, delta>; a midpoint
# line integral of (1/2)(x dy - y dx) reproduces it to second order.
print("\n== cycle areas ==")
for name, model in (("trapezoid k=2", M_trap), ("simplex(10,4,2)", F.model)):
    for i in range(model.torus.deck_rank):
        numeric = cycle_area_numeric(model, i, steps=10_000)
        exact = math.pi * float(exact_cycle_area_coeff(model, i))
        print(
            f"{name} e_{i}: numeric {numeric:.9f}  exact {exact:.9f}  "
            f"rel err {abs(numeric - exact) / abs(exact):.1e}"
        )

# Maslov indices of the explicit monomial discs, read off the winding
# numbers of their boundary circles.
print("\n== disc indices by winding numbers ==")
disc = simplex_disc(F, 1, 1)
print("simplex disc, lambda = (1,1): index", disc_index_winding(F.model, disc))

F5 = stretched_family(2, 4)
print("stretched disc (p=2, k=4): index", disc_index_winding(F5.model, stretched_disc(F5)))
print("constant disc: index", disc_index_winding(F.model, simplex_disc(F, 0, 0)))
