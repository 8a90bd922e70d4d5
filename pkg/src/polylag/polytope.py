"""Halfspace presentations of polyhedra and their exact combinatorics.

A presentation is the system <a_i, x> + b_i >= 0, i = 1..n, in R^k with
integer normals a_i and rational offsets b_i.  All decisions here (vertices,
boundedness, simplicity, genericity, redundancy, the Delzant and Fano tests,
combinatorial equivalence) are exact; nothing is rounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import exactlin


class GateError(ValueError):
    """A mathematical precondition failed (not a parse or usage error)."""


# Guard for the exhaustive k-subset vertex enumeration.
SUBSET_BUDGET = 5_000_000


@dataclass(frozen=True)
class HalfspacePresentation:
    """The polyhedron {x in R^dim : <normals[i], x> + b[i] >= 0}.

    ``normals`` holds a_1..a_n as integer tuples; this is the transpose of
    the k x n normal matrix whose columns are the a_i.
    """

    dim: int
    normals: tuple[tuple[int, ...], ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.normals)
        if n < self.dim or self.dim < 1:
            raise ValueError("need n >= k >= 1")
        if len(self.b) != n:
            raise ValueError("offset count must match facet count")
        for a in self.normals:
            if len(a) != self.dim:
                raise ValueError("normal has wrong dimension")
            if all(x == 0 for x in a):
                raise ValueError("zero normal vector")

    @property
    def facet_count(self) -> int:
        return len(self.normals)

    @property
    def A(self) -> list[list[int]]:
        """k x n matrix with column i = a_i."""
        return [list(col) for col in zip(*self.normals)]


def presentation(dim, normals, b) -> HalfspacePresentation:
    """Convenience constructor normalizing entry types."""
    return HalfspacePresentation(
        dim=dim,
        normals=tuple(tuple(int(x) for x in a) for a in normals),
        b=tuple(Fraction(x) for x in b),
    )


@dataclass(frozen=True)
class VertexData:
    point: tuple[Fraction, ...]
    active_set: tuple[int, ...]  # sorted indices of facets tight at the point


@dataclass(frozen=True)
class PresentationReport:
    bounded: bool
    simple: bool
    generic: bool
    redundant_facets: tuple[int, ...]
    vertex_count: int


@dataclass(frozen=True)
class DelzantVerdict:
    is_delzant: bool
    witness: tuple[tuple[Fraction, ...], int] | None  # (vertex, lattice index)

    def __bool__(self) -> bool:
        return self.is_delzant


@lru_cache(maxsize=256)
def enumerate_vertices(P: HalfspacePresentation) -> tuple[VertexData, ...]:
    """All vertices of P with their full active sets, lexicographically sorted.

    Exhaustive over k-subsets of facets, solved exactly; O(C(n, k)) subset
    solves.  Raises GateError above SUBSET_BUDGET subsets.
    """
    k, n = P.dim, P.facet_count
    if comb(n, k) > SUBSET_BUDGET:
        raise GateError(
            f"vertex enumeration over C({n},{k}) subsets exceeds the budget"
        )
    b_num = [f.numerator for f in P.b]
    b_den = [f.denominator for f in P.b]
    seen: dict[tuple[Fraction, ...], tuple[int, ...]] = {}
    for subset in itertools.combinations(range(n), k):
        rows = [P.normals[i] for i in subset]
        rhs = [-P.b[i] for i in subset]
        x = exactlin.solve_square(rows, rhs)
        if x is None:
            continue
        if x in seen:
            continue
        feasible = True
        active = []
        for i in range(n):
            s = sum(a * xi for a, xi in zip(P.normals[i], x)) + P.b[i]
            if s < 0:
                feasible = False
                break
            if s == 0:
                active.append(i)
        if feasible:
            seen[x] = tuple(active)
    verts = [VertexData(point=pt, active_set=act) for pt, act in seen.items()]
    verts.sort(key=lambda v: v.point)
    return tuple(verts)


def _strictly_positive_kernel_point(A) -> bool:
    """Exact test for a strictly positive rational solution of A @ x = 0.

    By Stiemke's lemma this decides triviality of the recession cone when A
    has full row rank.  Works by Fourier-Motzkin elimination on the kernel
    coordinates, so it is meant for small kernel dimension.
    """
    kernel = exactlin.kernel_saturated(A)
    if not kernel:
        return False
    # constraints: sum_j mu_j * kernel[j][i] > 0 for every column i
    n = len(kernel[0])
    d = len(kernel)
    cons = [[Fraction(kernel[j][i]) for j in range(d)] for i in range(n)]
    return _fm_strictly_feasible(cons)


def _fm_strictly_feasible(cons) -> bool:
    """Feasibility of the strict system {c . mu > 0 for all rows c}."""
    cons = [list(c) for c in cons]
    if not cons:
        return True
    nvar = len(cons[0])
    if nvar == 0:
        return False
    for var in range(nvar - 1, 0, -1):
        pos = [c for c in cons if c[var] > 0]
        neg = [c for c in cons if c[var] < 0]
        new = [c[:var] for c in cons if c[var] == 0]
        # rows bounding the variable from one side only impose nothing further
        for cp in pos:
            for cn in neg:
                new.append(
                    [cp[var] * cn[j] - cn[var] * cp[j] for j in range(var)]
                )
        seen = set()
        cons = []
        for c in new:
            key = tuple(c)
            if key not in seen:
                seen.add(key)
                cons.append(c)
        if not cons:
            return True
    if any(c[0] == 0 for c in cons):
        return False
    return all(c[0] > 0 for c in cons) or all(c[0] < 0 for c in cons)


def _ray_candidate_unbounded(P: HalfspacePresentation) -> bool:
    """Extreme-ray search over (k-1)-subsets; fallback boundedness test."""
    k, n = P.dim, P.facet_count
    if comb(n, k - 1) > SUBSET_BUDGET:
        raise GateError("recession cone test exceeds the subset budget")
    for subset in itertools.combinations(range(n), k - 1):
        rows = [list(P.normals[i]) for i in subset]
        kern = exactlin.kernel_saturated(rows) if rows else exactlin.identity(k)
        if len(kern) != 1:
            continue
        for d in (kern[0], [-x for x in kern[0]]):
            if all(sum(a * di for a, di in zip(P.normals[i], d)) >= 0 for i in range(n)):
                return True
    return False


def _is_bounded(P: HalfspacePresentation) -> bool:
    """Recession cone {x : <a_i, x> >= 0 for all i} == {0}, decided exactly."""
    A = P.A
    if exactlin.rank(A) < P.dim:
        return False
    if P.facet_count - P.dim <= 4:
        return _strictly_positive_kernel_point(A)
    return not _ray_candidate_unbounded(P)


def _same_halfspace(P, i, j) -> bool:
    """True if facets i and j describe the same halfspace (positive scaling)."""
    ai, aj = P.normals[i], P.normals[j]
    bi, bj = P.b[i], P.b[j]
    ratio = None
    for x, y in zip(ai, aj):
        if (x == 0) != (y == 0):
            return False
        if x != 0:
            r = Fraction(y, x)
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    if ratio is None:
        return False
    return bj == ratio * bi


def _delete_facet(P, drop) -> HalfspacePresentation:
    keep = [i for i in range(P.facet_count) if i not in drop]
    return HalfspacePresentation(
        dim=P.dim,
        normals=tuple(P.normals[i] for i in keep),
        b=tuple(P.b[i] for i in keep),
    )


def presentation_report(P: HalfspacePresentation) -> PresentationReport:
    """Boundedness, simplicity, genericity, redundancy, and the vertex count.

    Simplicity and genericity are decided on the vertex list, which suffices
    for bounded presentations (active sets are maximal at vertices).
    Redundant facets are reported greedily in index order: exact duplicate
    halfspaces first (later copy marked), then facets whose single deletion
    leaves the vertex set and boundedness unchanged.  Redundancy is only
    decided for bounded presentations.
    """
    verts = enumerate_vertices(P)
    bounded = _is_bounded(P)
    simple = all(len(v.active_set) == P.dim for v in verts)
    generic = all(
        exactlin.rank([list(P.normals[i]) for i in v.active_set]) == len(v.active_set)
        for v in verts
    )
    redundant: list[int] = []
    if bounded and verts:
        n = P.facet_count
        for j in range(n):
            for i in range(j):
                if i not in redundant and _same_halfspace(P, i, j):
                    redundant.append(j)
                    break
        if simple:
            tight_somewhere = set()
            for v in verts:
                tight_somewhere.update(v.active_set)
            for i in range(n):
                if i not in redundant and i not in tight_somewhere:
                    redundant.append(i)
        else:
            points = {v.point for v in verts}
            for i in range(n):
                if i in redundant:
                    continue
                if P.facet_count - len(redundant) - 1 < P.dim:
                    break
                sub = _delete_facet(P, set(redundant) | {i})
                ref = _delete_facet(P, set(redundant))
                if not _is_bounded(sub):
                    continue
                ref_points = {v.point for v in enumerate_vertices(ref)}
                sub_points = {v.point for v in enumerate_vertices(sub)}
                if sub_points == ref_points:
                    redundant.append(i)
    return PresentationReport(
        bounded=bounded,
        simple=simple,
        generic=generic,
        redundant_facets=tuple(sorted(redundant)),
        vertex_count=len(verts),
    )


def ambient_lattice_basis(P: HalfspacePresentation) -> list[list[int]]:
    """HNF basis of the lattice Z<a_1, ..., a_n> spanned by all normals."""
    h, _ = exactlin.hnf([list(a) for a in P.normals])
    basis = [row for row in h if any(x != 0 for x in row)]
    if len(basis) < P.dim:
        raise GateError("normals do not span a full-rank lattice")
    return basis


def is_delzant(P: HalfspacePresentation) -> DelzantVerdict:
    """Do the active normals at every vertex form a basis of Z<a_1..a_n>?

    Requires a bounded simple presentation.  On failure the witness carries
    the offending vertex and the index of the sublattice its normals span.
    """
    report = presentation_report(P)
    if not (report.bounded and report.simple):
        raise GateError("not a simple bounded presentation")
    basis = ambient_lattice_basis(P)
    covol = abs(exactlin.det(basis))
    for v in enumerate_vertices(P):
        nmat = [list(P.normals[i]) for i in v.active_set]
        index, rem = divmod(abs(exactlin.det(nmat)), covol)
        if rem != 0:  # pragma: no cover - normals always lie in the lattice
            raise GateError("vertex normals outside the ambient lattice")
        if index != 1:
            return DelzantVerdict(False, (v.point, index))
    return DelzantVerdict(True, None)


def facet_relations(P: HalfspacePresentation) -> list[list[int]]:
    """Saturated basis of the integer relations among the normals a_i."""
    return exactlin.kernel_saturated(P.A)


def fano_constant(P: HalfspacePresentation) -> Fraction | None:
    """The constant C > 0 with Gamma @ (C,...,C) = Gamma @ b, if one exists.

    Existence means P can be re-presented with all offsets equal to C while
    keeping the same normals (same quadric system).  Equivalent to solving
    C * t = delta where t is the sum of the columns of Gamma.
    """
    gamma = facet_relations(P)
    if not gamma:
        return Fraction(1)
    delta = exactlin.mat_vec(gamma, P.b)
    t = [sum(row) for row in gamma]
    c = None
    for tj, dj in zip(t, delta):
        if tj == 0:
            if dj != 0:
                return None
            continue
        cj = Fraction(dj, tj)
        if c is None:
            c = cj
        elif c != cj:
            return None
    if c is None or c <= 0:
        return None
    return c


def _incidence(P: HalfspacePresentation) -> list[frozenset[int]]:
    return [frozenset(v.active_set) for v in enumerate_vertices(P)]


def _refine_colors(active_sets, n) -> list[int]:
    colors = [0] * n
    while True:
        signatures = []
        vertex_sigs = [tuple(sorted(colors[f] for f in s)) for s in active_sets]
        for f in range(n):
            touching = sorted(vertex_sigs[i] for i, s in enumerate(active_sets) if f in s)
            signatures.append((colors[f], tuple(touching)))
        order = {sig: c for c, sig in enumerate(sorted(set(signatures)))}
        new = [order[sig] for sig in signatures]
        if new == colors:
            return colors
        colors = new


def combinatorially_equivalent(P1: HalfspacePresentation, P2: HalfspacePresentation) -> bool:
    """Face-poset equivalence of bounded simple polytopes.

    Decided by searching for a facet relabeling carrying the vertex-facet
    incidence structure of P1 onto that of P2, with color refinement to cut
    the search down.  For simple polytopes the incidences determine the face
    poset.
    """
    for P in (P1, P2):
        rep = presentation_report(P)
        if not (rep.bounded and rep.simple):
            raise GateError("combinatorial comparison needs bounded simple input")
    inc1, inc2 = _incidence(P1), _incidence(P2)
    n1, n2 = P1.facet_count, P2.facet_count
    if n1 != n2 or len(inc1) != len(inc2) or P1.dim != P2.dim:
        return False
    colors1 = _refine_colors(inc1, n1)
    colors2 = _refine_colors(inc2, n2)
    if sorted(colors1) != sorted(colors2):
        return False
    inc2_set = set(inc2)
    # match facets color class by color class, backtracking
    order = sorted(range(n1), key=lambda f: (colors1[f], f))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent() -> bool:
        for s in inc1:
            if all(f in mapping for f in s):
                if frozenset(mapping[f] for f in s) not in inc2_set:
                    return False
        return True

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        f = order[idx]
        for g in range(n2):
            if g in used or colors2[g] != colors1[f]:
                continue
            mapping[f] = g
            used.add(g)
            if consistent() and extend(idx + 1):
                return True
            del mapping[f]
            used.discard(g)
        return False

    return extend(0)
