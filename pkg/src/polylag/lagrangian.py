"""Lagrangian models: torus data, Maslov and area homomorphisms, monotonicity.

Given a quadric system with coefficient columns gamma_1..gamma_n, the map

    psi(u, phi) = (u_1 e^{i pi <gamma_1, phi>}, ..., u_n e^{i pi <gamma_n, phi>})

immerses the quotient of R x T_Gamma by the deck group Lambda*/2Lambda* into
C^n; it is an embedding exactly when the associated polytope is Delzant.
The generator cycles e_i (phi moving 2 units along a dual basis vector) have

    Maslov index   I_mu(e_i)    = 2 <eps_i, t>,      t = gamma_1 + ... + gamma_n,
    symplectic area I_omega(e_i) = pi <eps_i, delta>,

and e_i = 2 r_i for primitive r_i, so the r_i pairings drop the factor 2.
Monotonicity (I_mu proportional to I_omega with positive ratio) holds exactly
when some C > 0 solves C * t = delta, i.e. when the polytope is Fano.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin
from .polytope import (
    GateError,
    HalfspacePresentation,
    presentation_report,
)
from .quadrics import (
    QuadricSystem,
    membership,
    polytope_of,
    quadrics_of,
    sphere_factor_dims,
    topology_hint,
)


@dataclass(frozen=True)
class TorusData:
    """Lattice of the torus factor and its dual.

    lattice_basis rows are an HNF basis of the lattice spanned by the
    columns gamma_j; eps rows are the dual basis, so the pairing matrix
    <eps_i, basis_j> is the identity.  The deck group Lambda*/2Lambda* has
    order 2^deck_rank.
    """

    lattice_basis: tuple[tuple[int, ...], ...]
    eps: tuple[tuple[Fraction, ...], ...]
    deck_rank: int


@dataclass(frozen=True)
class GeneratorPairing:
    generator: int
    maslov: int                 # I_mu(r_i) = <eps_i, t>
    area_coeff: Fraction        # I_omega(r_i) = pi * area_coeff

    @property
    def area(self) -> float:
        return math.pi * float(self.area_coeff)


@dataclass(frozen=True)
class LagrangianModel:
    quadrics: QuadricSystem
    torus: TorusData
    t: tuple[int, ...]
    fano_C: Fraction | None
    monotone: bool
    embedded: bool                       # Delzant gate; False means immersed only
    delzant_witness: tuple | None
    r_simply_connected: bool | None      # certified True/False, None unknown
    presentation: HalfspacePresentation

    @property
    def immersed_only(self) -> bool:
        return not self.embedded


def torus_data(Q: QuadricSystem) -> TorusData:
    """Lattice data for the torus factor of the model."""
    cols = [list(c) for c in Q.columns]
    h, _ = exactlin.hnf(cols)
    basis = [row for row in h if any(x != 0 for x in row)]
    if len(basis) != len(Q.gamma):
        raise GateError("gamma columns do not span a full-rank lattice")
    eps = exactlin.dual_basis(basis)
    return TorusData(
        lattice_basis=tuple(tuple(row) for row in basis),
        eps=tuple(tuple(row) for row in eps),
        deck_rank=len(basis),
    )


def _assemble(Q: QuadricSystem, P: HalfspacePresentation) -> LagrangianModel:
    from .polytope import fano_constant, is_delzant

    report = presentation_report(P)
    if not (report.bounded and report.simple):
        raise GateError("not a simple bounded presentation")
    if report.redundant_facets:
        raise GateError(
            "redundant presentation: the construction needs a connected real locus"
        )
    verdict = is_delzant(P)
    hint = topology_hint(P)
    dims = sphere_factor_dims(hint)
    if dims is not None:
        simply_connected = all(d >= 2 for d in dims)
    elif hint.description.startswith("T^"):
        simply_connected = False
    else:
        simply_connected = None
    t = Q.maslov_vector
    # Fano test on the quadric data itself: C * t = delta solvable with C > 0
    c = None
    for tj, dj in zip(t, Q.delta):
        if tj == 0:
            if dj != 0:
                c = None
                break
            continue
        cj = Fraction(dj, tj)
        if c is None:
            c = cj
        elif c != cj:
            c = None
            break
    if c is not None and c <= 0:
        c = None
    if not Q.gamma:
        c = Fraction(1)
    assert c == fano_constant(P), "quadric-level and polytope-level Fano disagree"
    return LagrangianModel(
        quadrics=Q,
        torus=torus_data(Q) if Q.gamma else TorusData((), (), 0),
        t=t,
        fano_C=c,
        monotone=c is not None,
        embedded=verdict.is_delzant,
        delzant_witness=verdict.witness,
        r_simply_connected=simply_connected,
        presentation=P,
    )


def build_model(P: HalfspacePresentation) -> LagrangianModel:
    """Model of the Lagrangian associated to a presentation.

    Requires bounded, simple, irredundant input; a non-Delzant presentation
    still builds but the model is flagged immersed-only.
    """
    return _assemble(quadrics_of(P), P)


def build_model_from_quadrics(Q: QuadricSystem) -> LagrangianModel:
    """Model built directly on a quadric system, keeping its Gamma verbatim.

    The associated presentation is recovered for the gates, but all torus and
    Maslov data use the given coefficients, so models match the coordinates
    the system was written in.
    """
    return _assemble(Q, polytope_of(Q))


def _require_embedded(M: LagrangianModel):
    if not M.embedded:
        raise GateError("model is immersed only (presentation is not Delzant)")


def generator_pairing(M: LagrangianModel) -> list[GeneratorPairing]:
    """Maslov and area pairings of the primitive generators r_i."""
    _require_embedded(M)
    out = []
    for i, eps_i in enumerate(M.torus.eps):
        mu = sum(e * ti for e, ti in zip(eps_i, M.t))
        assert mu.denominator == 1, "Maslov pairing must be integral"
        area2 = sum(e * d for e, d in zip(eps_i, M.quadrics.delta))
        out.append(GeneratorPairing(generator=i, maslov=int(mu), area_coeff=area2 / 2))
    return out


def minimal_maslov(M: LagrangianModel) -> int:
    """gcd of the Maslov indices over the H_1 generators; errors when zero."""
    pairings = generator_pairing(M)
    g = exactlin.gcd_list([p.maslov for p in pairings])
    if g == 0:
        raise GateError("Maslov class vanishes")
    return g


def monotonicity(M: LagrangianModel):
    """Monotonicity constant and per-generator relation report, if monotone.

    Returns None when no C > 0 solves C * t = delta.  Otherwise each
    generator satisfies I_omega(r_i) = (pi C / 2) * I_mu(r_i), verified
    exactly.
    """
    _require_embedded(M)
    if M.fano_C is None:
        return None
    c = M.fano_C
    rows = []
    for p in generator_pairing(M):
        assert p.area_coeff == c * Fraction(p.maslov) / 2
        rows.append(
            {
                "generator": p.generator,
                "maslov": p.maslov,
                "area_over_pi": p.area_coeff,
            }
        )
    return c, {
        "fano_C": c,
        "relation": "area = (pi*C/2) * maslov per generator",
        "generators": rows,
        "simply_connected_hypothesis": M.r_simply_connected,
    }


def psi_eval(M: LagrangianModel, u, phi, tol=1e-9):
    """Evaluate the model map at (u, phi) as interleaved R^{2n} coordinates.

    u must satisfy the quadric system within tol (exactly for tol = 0).
    """
    Q = M.quadrics
    if not membership(Q, u, tol):
        raise GateError("point is off the quadric locus beyond tolerance")
    phis = [float(x) for x in phi]
    out = []
    for ui, col in zip(u, Q.columns):
        angle = math.pi * sum(c * p for c, p in zip(col, phis))
        z = float(ui) * cmath.exp(1j * angle)
        out.extend((z.real, z.imag))
    return out


def psi_eval_complex(M: LagrangianModel, u, phi, tol=1e-9):
    xy = psi_eval(M, u, phi, tol)
    return [complex(xy[2 * i], xy[2 * i + 1]) for i in range(len(xy) // 2)]


def in_dual_lattice(M: LagrangianModel, gamma_star) -> bool:
    """Exact integrality of the pairings <gamma_star, gamma_j>."""
    for col in M.quadrics.columns:
        pairing = sum(Fraction(g) * c for g, c in zip(gamma_star, col))
        if pairing.denominator != 1:
            return False
    return True


def deck_transform(M: LagrangianModel, gamma_star, u, phi):
    """Deck-group action: sign flips on u and a shift of phi.

    gamma_star must lie in the dual lattice; then each cosine factor is +-1
    and psi takes the same value at the transformed point.
    """
    if not in_dual_lattice(M, gamma_star):
        raise GateError("gamma_star is not in the dual lattice")
    signs = []
    for col in M.quadrics.columns:
        pairing = sum(Fraction(g) * c for g, c in zip(gamma_star, col))
        signs.append(-1 if pairing % 2 else 1)
    u_out = tuple(s * x for s, x in zip(signs, u))
    phi_out = tuple(p + g for p, g in zip(phi, gamma_star))
    return u_out, phi_out


def deck_representatives(M: LagrangianModel):
    """One representative per element of Lambda*/2Lambda* (2^deck_rank many)."""
    reps = [tuple()]
    for eps_i in M.torus.eps:
        reps = [r + (c,) for r in reps for c in (0, 1)]
    out = []
    for coeffs in reps:
        vec = [Fraction(0)] * M.torus.deck_rank
        for c, eps_i in zip(coeffs, M.torus.eps):
            if c:
                vec = [v + e for v, e in zip(vec, eps_i)]
        out.append(tuple(vec))
    return out
