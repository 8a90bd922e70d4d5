"""The dictionary between halfspace presentations and quadric systems.

A presentation <a_i, x> + b_i >= 0 in R^k with n facets corresponds to the
intersection of n-k real quadrics

    sum_i Gamma[j][i] * u_i^2 = delta[j],    j = 1..n-k,

where the rows of Gamma span the integer relations among the normals a_i and
delta = Gamma @ b.  The same coefficients cut out the moment-angle manifold
Z = {z in C^n : Gamma |z|^2 = delta}, whose fixed locus under coordinatewise
conjugation is the real locus R above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlin
from .polytope import (
    GateError,
    HalfspacePresentation,
    enumerate_vertices,
    facet_relations,
    presentation_report,
)


@dataclass(frozen=True)
class QuadricSystem:
    """Integer quadric coefficients Gamma ((n-k) x n) and offsets delta."""

    gamma: tuple[tuple[int, ...], ...]
    delta: tuple[Fraction, ...]
    ambient_n: int
    solution_dim: int

    def __post_init__(self):
        rows = len(self.gamma)
        if rows != self.ambient_n - self.solution_dim:
            raise ValueError("row count must be n - k")
        if len(self.delta) != rows:
            raise ValueError("delta length must match the quadric count")
        for row in self.gamma:
            if len(row) != self.ambient_n:
                raise ValueError("gamma row has wrong length")
        if rows and exactlin.rank([list(r) for r in self.gamma]) != rows:
            raise ValueError("gamma rows must be independent")

    @property
    def columns(self) -> list[tuple[int, ...]]:
        """gamma_1..gamma_n, the coefficient vector of each coordinate."""
        return [tuple(row[i] for row in self.gamma) for i in range(self.ambient_n)]

    @property
    def maslov_vector(self) -> tuple[int, ...]:
        """t = gamma_1 + ... + gamma_n."""
        return tuple(sum(row) for row in self.gamma)


@dataclass(frozen=True)
class TopologyHint:
    description: str
    provenance: str


def quadric_system(gamma, delta, ambient_n=None, solution_dim=None) -> QuadricSystem:
    gamma = tuple(tuple(int(x) for x in row) for row in gamma)
    n = ambient_n if ambient_n is not None else (len(gamma[0]) if gamma else 0)
    k = solution_dim if solution_dim is not None else n - len(gamma)
    return QuadricSystem(
        gamma=gamma,
        delta=tuple(Fraction(x) for x in delta),
        ambient_n=n,
        solution_dim=k,
    )


def quadrics_of(P: HalfspacePresentation) -> QuadricSystem:
    """Quadric system of a presentation: Gamma @ A^T = 0, delta = Gamma @ b."""
    A = P.A
    if exactlin.rank(A) != P.dim:
        raise GateError("normals do not span")
    gamma = facet_relations(P)
    delta = exactlin.mat_vec(gamma, P.b) if gamma else []
    return quadric_system(gamma, delta, ambient_n=P.facet_count, solution_dim=P.dim)


def polytope_of(Q: QuadricSystem) -> HalfspacePresentation:
    """Presentation realizing a quadric system.

    A is a saturated kernel basis of Gamma (columns are the normals) and b is
    the first echelon solution of Gamma @ b = delta; any solution gives the
    same polytope up to translation.
    """
    n, k = Q.ambient_n, Q.solution_dim
    if not Q.gamma:
        return HalfspacePresentation(
            dim=n,
            normals=tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n)),
            b=tuple(Fraction(0) for _ in range(n)),
        )
    a_rows = exactlin.kernel_saturated([list(r) for r in Q.gamma])
    if len(a_rows) != k:
        raise GateError("gamma does not have full row rank")
    b = exactlin.solve_linear([list(r) for r in Q.gamma], list(Q.delta))
    if b is None:  # pragma: no cover - impossible at full row rank
        raise GateError("no polyhedron realizes delta")
    normals = tuple(tuple(row[i] for row in a_rows) for i in range(n))
    return HalfspacePresentation(dim=k, normals=normals, b=tuple(b))


def nondegenerate(Q: QuadricSystem) -> bool:
    """Is the real quadric locus nonempty and nondegenerate?

    Delegates to the presentation: nonempty polytope with a generic
    presentation.
    """
    P = polytope_of(Q)
    report = presentation_report(P)
    nonempty = report.vertex_count > 0 or not Q.gamma
    return nonempty and report.generic


FLOAT_MEMBERSHIP_TOL = 1e-9


def membership(Q: QuadricSystem, u, tol=None) -> bool:
    """Does u satisfy the quadric system within tol?

    With tol = 0 the entries of u must be exact (ints or Fractions) and the
    test is exact.  Otherwise the max absolute residual is compared to tol.
    By default exact inputs are tested exactly and float inputs against
    FLOAT_MEMBERSHIP_TOL.
    """
    if len(u) != Q.ambient_n:
        raise ValueError("dimension mismatch")
    if tol is None:
        exact = all(isinstance(x, (int, Fraction)) for x in u)
        tol = 0 if exact else FLOAT_MEMBERSHIP_TOL
    if tol == 0:
        for row, d in zip(Q.gamma, Q.delta):
            if sum(c * Fraction(x) ** 2 for c, x in zip(row, u)) != d:
                return False
        return True
    worst = 0.0
    for row, d in zip(Q.gamma, Q.delta):
        r = abs(sum(c * float(x) ** 2 for c, x in zip(row, u)) - float(d))
        worst = max(worst, r)
    return worst <= tol


def moment_map(gamma, z):
    """Torus moment map H_j(z) = sum_i gamma[j][i] |z_i|^2.

    Accepts complex entries (floats come back) or exact (re, im) pairs of
    rationals (Fractions come back).  A point lies on the moment-angle
    manifold exactly when the result equals delta.
    """
    if gamma and len(z) != len(gamma[0]):
        raise ValueError("dimension mismatch")
    sq = []
    for entry in z:
        if isinstance(entry, tuple):
            re, im = Fraction(entry[0]), Fraction(entry[1])
            sq.append(re * re + im * im)
        elif isinstance(entry, complex):
            sq.append(entry.real**2 + entry.imag**2)
        elif isinstance(entry, (int, Fraction)):
            sq.append(Fraction(entry) ** 2)
        else:
            sq.append(float(entry) ** 2)
    return [sum(c * s for c, s in zip(row, sq)) for row in gamma]


def _simplex_product_groups(P: HalfspacePresentation):
    """Facet partition certifying that P is a product of simplices.

    In such a product every vertex omits exactly one facet per factor, and
    two facets belong to the same factor exactly when no vertex omits both.
    Returns the groups or None when the certificate fails.
    """
    verts = enumerate_vertices(P)
    n = P.facet_count
    missing = [frozenset(range(n)) - frozenset(v.active_set) for v in verts]
    comissed = [[False] * n for _ in range(n)]
    for ms in missing:
        for f in ms:
            for g in ms:
                if f != g:
                    comissed[f][g] = True
    groups: list[list[int]] = []
    assigned = [-1] * n
    for f in range(n):
        if assigned[f] >= 0:
            continue
        group = [f]
        assigned[f] = len(groups)
        for g in range(f + 1, n):
            if assigned[g] < 0 and not comissed[f][g]:
                group.append(g)
                assigned[g] = len(groups)
        groups.append(group)
    # verify the certificate
    if sum(len(g) - 1 for g in groups) != P.dim:
        return None
    expected = 1
    for g in groups:
        expected *= len(g)
    if expected != len(verts):
        return None
    for ms in missing:
        per_group = [0] * len(groups)
        for f in ms:
            per_group[assigned[f]] += 1
        if any(c != 1 for c in per_group):
            return None
    return groups


def topology_hint(P: HalfspacePresentation) -> TopologyHint:
    """Certificate-based diffeomorphism-type hint for the real locus.

    Emits a product of spheres for a product of simplices, a torus for a
    cube, and 'unknown' otherwise; never guesses beyond the certificate.
    """
    report = presentation_report(P)
    if not (report.bounded and report.simple):
        raise GateError("topology hint needs a bounded simple presentation")
    if report.redundant_facets:
        raise GateError(
            "redundant presentation: the real locus splits into disjoint copies"
        )
    groups = _simplex_product_groups(P)
    if groups is None:
        return TopologyHint("unknown", "no product-of-simplices certificate")
    if all(len(g) == 2 for g in groups):
        return TopologyHint(
            f"T^{len(groups)}",
            f"combinatorially a {len(groups)}-cube",
        )
    dims = [len(g) - 1 for g in groups]
    desc = " x ".join(f"S^{d - 1}" for d in dims)
    shape = " x ".join(f"Delta^{d}" for d in dims)
    return TopologyHint(desc, f"combinatorially {shape}")


def sphere_factor_dims(hint: TopologyHint) -> list[int] | None:
    """Sphere dimensions in a product-of-spheres hint, None otherwise."""
    parts = hint.description.split(" x ")
    if all(p.startswith("S^") for p in parts) and parts:
        return [int(p[2:]) for p in parts]
    return None
