"""Lagrangian models: Maslov/area pairings, monotonicity, the deck group.

Run with: python demos/02_lagrangian_models.py
"""

from fractions import Fraction

from polylag import (
    build_model,
    deck_representatives,
    deck_transform,
    generator_pairing,
    minimal_maslov,
    monotonicity,
    psi_eval,
    trapezoid_presentation,
    unit_square_presentation,
)
from polylag.families import simplex_product_family

# The trapezoid model: embedded (Delzant) but not monotone.
M = build_model(trapezoid_presentation(2))
print("== trapezoid model ==")
print("Maslov vector t:", M.t)
print("embedded:", M.embedded, " monotone:", M.monotone)
for p in generator_pairing(M):
    print(f"generator r_{p.generator}: Maslov {p.maslov}, area {p.area_coeff} * pi")
print("minimal Maslov number:", minimal_maslov(M))
print("monotonicity report:", monotonicity(M))

# The unit square (a Clifford-type torus): monotone with C = 1/2, and the
# exact relation area = (pi C / 2) * Maslov holds per generator.
Msq = build_model(unit_square_presentation())
C, report = monotonicity(Msq)
print("\n== unit square ==")
print("Fano constant:", C)
for row in report["generators"]:
    print(f"generator {row['generator']}: Maslov {row['maslov']}, area {row['area_over_pi']} * pi")

# The monotone family member in C^10 with p = 4, k = 2.
F = simplex_product_family(10, 4, 2)
print("\n== simplex-product member (10, 4, 2) ==")
print("t:", F.model.t, " C:", F.model.fano_C)
print("minimal Maslov number:", minimal_maslov(F.model))

# The embedding map psi at a quarter turn of the first angle: the second
# and third coordinates rotate, the others sit still.
xy = psi_eval(M, (1, 1, 0, 0), (Fraction(1, 2), 0))
print("\npsi(1,1,0,0 ; 1/2, 0) =", [round(v, 12) for v in xy])

# The deck group Lambda*/2Lambda* has 2^2 elements here; acting by a dual
# basis vector flips the signs of the coordinates it pairs oddly with and
# shifts the angle, leaving psi unchanged.
print("deck representatives:", deck_representatives(M))
u2, phi2 = deck_transform(M, M.torus.eps[0], (1, 2, 3, 4), (0, 0))
print("eps_1 action on u:", u2, " new phi:", phi2)
