"""The two parametric families and their holomorphic-disc invariants.

* The simplex-product family in C^n, n > 2p, 0 <= k < p-1, cut out by

      u_1^2 + ... + u_p^2                          = p
      u_1^2 + ... + u_k^2 + u_{p+1}^2 + ... + u_n^2 = n - p + k

  (monotone; minimal Maslov number gcd(p, n-p+k)).

* The stretched family in C^{4p}, a Hirzebruch-type construction:

      sum_{p+1..2p} u^2 + sum_{2p+1..3p} u^2                      = 1
      sum_{1..p} u^2 + k sum_{p+1..2p} u^2 + sum_{3p+1..4p} u^2   = k + 1

  (p = 1 is the trapezoid family; non-monotone for k > 0).

Boundary classes of holomorphic discs live in pi_1 = Z^2 and fall into two
branches with linear index formulas in the winding numbers (lambda_1,
lambda_2).  The invariant m is the least index over the set K of doubled
primitive classes that pass through a generic point (branch A) with index
above the family threshold; it separates Hamiltonian isotopy classes inside
a family even when diffeomorphism type and minimal Maslov number agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lagrangian import LagrangianModel, build_model_from_quadrics, minimal_maslov
from .polytope import GateError, HalfspacePresentation, presentation
from .quadrics import QuadricSystem, quadric_system
from .verify import DiscSpec


@dataclass(frozen=True)
class FamilyModel:
    family: str                      # "simplex_product" | "stretched" | "trapezoid"
    n: int
    p: int
    k: int
    model: LagrangianModel | None    # None when built with build=False
    diffeo_type: str | None          # certificate, only under the parity conditions
    index_threshold: int
    parity_ok: bool
    strict_range: bool               # n > 2p resp. k > 2, where the isotopy classes separate
    branch_a: tuple[int, int]        # index = a1*lambda1 + a2*lambda2
    branch_b: tuple[int, int]
    closed_form_m: int

    def branch_boundary(self, branch: str, lam1: int, lam2: int) -> tuple[int, int]:
        if branch == "A":
            return (2 * lam1, 2 * lam2)
        if self.family == "simplex_product":
            return (2 * lam1 - 2 * lam2, 2 * lam2)
        return (2 * lam1 - 2 * self.k * lam2, 2 * lam2)


@dataclass(frozen=True)
class DiscClass:
    branch: str
    lam1: int
    lam2: int
    index: int
    boundary_class: tuple[int, int]
    generic_point: bool


@dataclass(frozen=True)
class InvariantReport:
    m: int
    witness_class: tuple[int, int]
    witness_lambdas: tuple[int, int]
    doubled_primitive: bool
    threshold: int
    closed_form: int
    bound_used: int


def simplex_product_presentation(n: int, p: int, k: int) -> HalfspacePresentation:
    """Inequality presentation x_i + 1 >= 0 (i=1..n), two sum facets.

    This is the product-of-simplices polytope itself: n + 2 facets in R^n,
    combinatorially Delta^p x Delta^{n-p} with (p+1)(n-p+1) vertices, Delzant
    and Fano with constant 1.  Note it is the polytope the family is usually
    drawn with; the quadric model of the family lives in C^n and is built by
    simplex_product_family from the two-quadric system above.
    """
    _check_simplex_range(n, p, k)
    normals = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    normals.append(tuple(-1 if j < p else 0 for j in range(n)))
    normals.append(tuple(-1 if (j < k or j >= p) else 0 for j in range(n)))
    return presentation(n, normals, [1] * (n + 2))


def _check_simplex_range(n: int, p: int, k: int):
    # the quadric system is valid from n >= 2p on; the isotopy-class
    # separation needs n > 2p strictly, recorded as FamilyModel.strict_range
    if not (n >= 2 * p and 0 <= k < p - 1 and p >= 1):
        raise GateError(
            f"simplex-product family needs n >= 2p and 0 <= k < p-1, got {(n, p, k)}"
        )


def simplex_product_quadrics(n: int, p: int, k: int) -> QuadricSystem:
    row1 = [1] * p + [0] * (n - p)
    row2 = [1] * k + [0] * (p - k) + [1] * (n - p)
    return quadric_system([row1, row2], [p, n - p + k])


def simplex_product_family(n: int, p: int, k: int, build: bool = True) -> FamilyModel:
    """Family member L_k in C^n from the two-quadric system.

    build=False skips the Lagrangian model (and its polytope gates), keeping
    only the disc-index metadata; handy for large parameter sweeps.
    """
    _check_simplex_range(n, p, k)
    model = build_model_from_quadrics(simplex_product_quadrics(n, p, k)) if build else None
    parity = n % 2 == 0 and p % 2 == 0 and k % 2 == 0
    return FamilyModel(
        family="simplex_product",
        n=n,
        p=p,
        k=k,
        model=model,
        diffeo_type=f"S^{p - 1} x S^{n - p - 1} x T^2" if parity else None,
        index_threshold=2 * (n - p) - 1,
        parity_ok=parity,
        strict_range=n > 2 * p,
        branch_a=(2 * p, 2 * (n - p + k)),
        branch_b=(2 * p, 2 * (n - 2 * p + k)),
        closed_form_m=2 * (n - p + k),
    )


def stretched_quadrics(p: int, k: int) -> QuadricSystem:
    row1 = [0] * p + [1] * p + [1] * p + [0] * p
    row2 = [1] * p + [k] * p + [0] * p + [1] * p
    return quadric_system([row1, row2], [1, k + 1])


def stretched_family(p: int, k: int, build: bool = True) -> FamilyModel:
    """Stretched family member L_k in C^{4p}; p = 1 gives the trapezoids."""
    if p < 1 or k < 0:
        raise GateError(f"stretched family needs p >= 1 and k >= 0, got {(p, k)}")
    model = build_model_from_quadrics(stretched_quadrics(p, k)) if build else None
    if p == 1:
        diffeo = "T^4" if k % 2 == 0 else None
    else:
        diffeo = f"S^{2 * p - 1} x S^{2 * p - 1} x T^2" if k % 2 == 0 else None
    return FamilyModel(
        family="trapezoid" if p == 1 else "stretched",
        n=4 * p,
        p=p,
        k=k,
        model=model,
        diffeo_type=diffeo,
        index_threshold=4 * p,
        parity_ok=k % 2 == 0,
        strict_range=k > 2,
        branch_a=(4 * p, 2 * p * (k + 2)),
        branch_b=(4 * p, 2 * p * (2 - k)),
        closed_form_m=2 * p * (k + 2),
    )


def trapezoid_presentation(k: int) -> HalfspacePresentation:
    """The trapezoid x1 >= 0, x2 >= 0, 1 - x2 >= 0, k+1 - x1 - k x2 >= 0."""
    return presentation(2, [(1, 0), (0, 1), (0, -1), (-1, -k)], [0, 0, 1, k + 1])


def unit_square_presentation() -> HalfspacePresentation:
    return presentation(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [0, 0, 1, 1])


def standard_simplex_product_presentation(p: int, q: int) -> HalfspacePresentation:
    """Delta^p x Delta^q in R^{p+q} with the standard simplex inequalities."""
    dim = p + q
    normals = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    normals.append(tuple(-1 if j < p else 0 for j in range(dim)))
    normals.append(tuple(-1 if j >= p else 0 for j in range(dim)))
    b = [Fraction(0)] * dim + [Fraction(1), Fraction(1)]
    return presentation(dim, normals, b)


def _branch_classes(F: FamilyModel, branch: str, index_bound: int, lambda_cap: int):
    c1, c2 = F.branch_a if branch == "A" else F.branch_b
    out = []
    # positive coefficients bound the enumeration by the index alone; a
    # non-positive coefficient (stretched branch B, k >= 2) needs the cap
    lim1 = index_bound // c1 if c1 > 0 else lambda_cap
    for lam1 in range(0, max(lim1, 0) + 1):
        if c2 > 0:
            rest = index_bound - c1 * lam1
            if rest < 0:
                break
            lim2 = rest // c2
        else:
            lim2 = lambda_cap
        for lam2 in range(0, max(lim2, 0) + 1):
            idx = c1 * lam1 + c2 * lam2
            if idx > index_bound:
                continue
            out.append(
                DiscClass(
                    branch=branch,
                    lam1=lam1,
                    lam2=lam2,
                    index=idx,
                    boundary_class=F.branch_boundary(branch, lam1, lam2),
                    generic_point=branch == "A",
                )
            )
    return out


def disc_spectrum(F: FamilyModel, index_bound: int, lambda_cap: int = 12) -> list[DiscClass]:
    """All disc classes with index <= index_bound on both branches.

    Branch B of the stretched family has indices unbounded below for k > 2,
    so its enumeration is truncated at lambda_cap per winding coordinate.
    """
    if F.family not in ("simplex_product", "stretched", "trapezoid"):
        raise GateError(f"unsupported family tag {F.family!r}")
    classes = _branch_classes(F, "A", index_bound, lambda_cap) + _branch_classes(
        F, "B", index_bound, lambda_cap
    )
    seen = set()
    out = []
    for d in sorted(classes, key=lambda d: (d.index, d.branch, d.lam1, d.lam2)):
        key = (d.branch, d.lam1, d.lam2)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


def invariant_m(F: FamilyModel, index_bound: int | None = None) -> InvariantReport:
    """Least index over K: doubled-primitive branch-A classes above threshold.

    Branch A is the generic-point branch; its boundary class 2(lambda_1,
    lambda_2) is twice a primitive vector exactly when gcd(lambda_1,
    lambda_2) = 1.  The closed forms 2(n-p+k) and 2p(k+2) are carried along
    for cross-checking.
    """
    bound = index_bound if index_bound is not None else 4 * max(
        F.closed_form_m, F.index_threshold
    )
    attempts = [bound]
    if index_bound is not None and bound < 2 * F.closed_form_m:
        attempts.append(max(bound, 2 * F.closed_form_m))
    for attempt in attempts:
        best = None
        for d in _branch_classes(F, "A", attempt, 0):
            if gcd(d.lam1, d.lam2) != 1:
                continue
            if d.index <= F.index_threshold:
                continue
            if best is None or d.index < best.index:
                best = d
        if best is not None:
            return InvariantReport(
                m=best.index,
                witness_class=best.boundary_class,
                witness_lambdas=(best.lam1, best.lam2),
                doubled_primitive=True,
                threshold=F.index_threshold,
                closed_form=F.closed_form_m,
                bound_used=attempt,
            )
    raise GateError("bound too small: no admissible disc class found")


def distinguish(models: list[FamilyModel], index_bound: int | None = None) -> dict:
    """Partition family members by (diffeo certificate, minimal Maslov, m).

    Members in distinct parts are not Hamiltonian isotopic; pairs sharing a
    diffeomorphism certificate but differing in m are reported as smoothly
    identical in type yet not Hamiltonian isotopic.
    """
    if not models:
        raise GateError("nothing to compare")
    if any(F.model is None for F in models):
        raise GateError("comparison needs fully built family members")
    kinds = {F.family for F in models}
    if len(kinds) > 1:
        raise GateError("mixed family kinds")
    if models[0].family == "simplex_product":
        if len({(F.n, F.p) for F in models}) > 1:
            raise GateError("simplex-product comparison needs identical (n, p)")
    else:
        if len({F.p for F in models}) > 1:
            raise GateError("stretched comparison needs identical p")
    entries = []
    for F in models:
        entries.append(
            {
                "family": F.family,
                "n": F.n,
                "p": F.p,
                "k": F.k,
                "diffeo_type": F.diffeo_type,
                "minimal_maslov": minimal_maslov(F.model),
                "m": invariant_m(F, index_bound).m,
                "monotone": F.model.monotone,
            }
        )
    keys = {}
    for e in entries:
        keys.setdefault((e["diffeo_type"], e["minimal_maslov"], e["m"]), []).append(e["k"])
    classes = [
        {"diffeo_type": d, "minimal_maslov": mm, "m": m, "k_values": sorted(ks)}
        for (d, mm, m), ks in sorted(keys.items(), key=lambda kv: str(kv[0]))
    ]
    same_type_pairs = []
    for e1, e2 in itertools.combinations(entries, 2):
        if (
            e1["diffeo_type"] is not None
            and e1["diffeo_type"] == e2["diffeo_type"]
            and e1["m"] != e2["m"]
        ):
            same_type_pairs.append(
                {
                    "k_pair": sorted((e1["k"], e2["k"])),
                    "diffeo_type": e1["diffeo_type"],
                    "verdict": "smoothly identical-type, not Hamiltonian isotopic",
                }
            )
    same_type_pairs.sort(key=lambda d: d["k_pair"])
    return {
        "members": entries,
        "classes": classes,
        "class_count": len(classes),
        "same_diffeo_nonisotopic_pairs": same_type_pairs,
    }


def smooth_isotopy_class_count(F: FamilyModel) -> int:
    """|H_1(L; Z_2)| for members carrying a sphere x sphere x T^2 certificate.

    The sphere factors (dimension >= 2) contribute nothing, the T^2 factor
    gives Z_2^2, and the ambient dimension is even, so the Haefliger-Hirsch
    count is 4.
    """
    d = F.diffeo_type
    if d is None or not d.endswith(" x T^2"):
        raise GateError("H_1 unknown: no sphere-product certificate")
    dims = [int(part[2:]) for part in d[: -len(" x T^2")].split(" x ")]
    if any(dim < 2 for dim in dims):
        raise GateError("H_1 unknown: sphere factors below dimension 2")
    return 4


def simplex_disc(F: FamilyModel, lam1: int, lam2: int) -> DiscSpec:
    """The explicit branch-A disc of the simplex-product family.

    All coordinates vanish except coordinate p carrying sqrt(p) z^{lam1} and
    coordinate n carrying sqrt(n-p+k) z^{lam2}.
    """
    if F.family != "simplex_product":
        raise GateError("simplex_disc is defined for the simplex-product family")
    n, p, k = F.n, F.p, F.k
    amps = [0.0] * n
    exps = [0] * n
    amps[p - 1] = float(p) ** 0.5
    exps[p - 1] = lam1
    amps[n - 1] = float(n - p + k) ** 0.5
    exps[n - 1] = lam2
    return DiscSpec(amplitudes=tuple(amps), phases=(0.0,) * n, exponents=tuple(exps))


def stretched_disc(F: FamilyModel, alpha: float = 0.0, beta: float = 0.0) -> DiscSpec:
    """The explicit stretched-family disc: unit exponents on blocks 1, 2, 4.

    Amplitudes put mass 1 on the first coordinate of blocks 1 and 3 and k on
    block 4, which satisfies both quadrics; block 3 is constant in z.
    """
    if F.family not in ("stretched", "trapezoid"):
        raise GateError("stretched_disc is defined for the stretched family")
    p, k = F.p, F.k
    n = 4 * p
    amps = [0.0] * n
    exps = [0] * n
    phases = [0.0] * n
    amps[0] = 1.0
    amps[2 * p] = 1.0
    amps[3 * p] = float(k) ** 0.5
    for i in range(p):
        phases[i] = beta
        phases[p + i] = alpha + k * beta
        phases[2 * p + i] = alpha
        phases[3 * p + i] = beta
        exps[i] = 1
        exps[p + i] = 1
        exps[3 * p + i] = 1
    return DiscSpec(amplitudes=tuple(amps), phases=tuple(phases), exponents=tuple(exps))
