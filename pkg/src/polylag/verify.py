"""Floating-point verification harness for the Lagrangian models.

Samples points of the quotient model, checks that the standard symplectic
form vanishes on the tangent frames of the image, integrates the primitive
1-form over the generator cycles against the exact area pairing, and reads
Maslov indices of explicit discs off boundary winding numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactlin
from .lagrangian import LagrangianModel
from .polytope import GateError
from .quadrics import membership

QUADRIC_TOL = 1e-12
LAGRANGIAN_TOL = 1e-8
AREA_REL_TOL = 1e-6


@dataclass(frozen=True)
class SampleSet:
    points: tuple  # tuple of (u, phi) numpy array pairs
    seed: int
    residual_tol: float


@dataclass(frozen=True)
class DiscSpec:
    """Monomial disc data: coordinate i is amp_i * e^{i pi phase_i} * z^{exp_i}.

    Boundary amplitudes must satisfy the quadric system; phases are in the
    same pi-units as the torus angles.
    """

    amplitudes: tuple
    phases: tuple
    exponents: tuple


def _gamma_array(M: LagrangianModel) -> np.ndarray:
    return np.array([list(r) for r in M.quadrics.gamma], dtype=float)


def _sampling_plan(M: LagrangianModel):
    """Order quadrics so each introduces fresh coordinates with positive
    coefficients (pure spheres preferred); None when no such order exists."""
    gamma = M.quadrics.gamma
    n = M.quadrics.ambient_n
    unassigned = set(range(n))
    remaining = list(range(len(gamma)))
    plan = []
    while remaining:
        pick = None
        for equal_only in (True, False):
            for j in remaining:
                support = [i for i in unassigned if gamma[j][i] != 0]
                if not support or any(gamma[j][i] <= 0 for i in support):
                    continue
                if equal_only and len({gamma[j][i] for i in support}) != 1:
                    continue
                pick = (j, support)
                break
            if pick:
                break
        if pick is None:
            return None
        j, support = pick
        plan.append((j, support))
        unassigned -= set(support)
        remaining.remove(j)
    if unassigned:
        return None
    return plan


def _newton_project(M: LagrangianModel, u0: np.ndarray, tol: float, max_iter: int = 80):
    gamma = _gamma_array(M)
    delta = np.array([float(d) for d in M.quadrics.delta])
    u = u0.astype(float).copy()
    for _ in range(max_iter):
        residual = gamma @ (u * u) - delta
        if np.max(np.abs(residual)) < tol:
            return u
        jac = 2.0 * gamma * u[None, :]
        step, *_ = np.linalg.lstsq(jac, -residual, rcond=None)
        u = u + step
    raise GateError(
        f"Newton projection failed after {max_iter} iterations "
        f"(residual {np.max(np.abs(gamma @ (u * u) - delta)):.3e})"
    )


def sample_lagrangian(
    M: LagrangianModel, count: int, seed: int, residual_tol: float = QUADRIC_TOL
) -> SampleSet:
    """Deterministic samples (u, phi) with quadric residual below tolerance.

    Sphere blocks are drawn from normalized Gaussians, angles uniformly;
    systems without a sequential sphere structure fall back to Newton
    projection of a Gaussian start.
    """
    rng = np.random.default_rng(seed)
    gamma = M.quadrics.gamma
    n = M.quadrics.ambient_n
    deck = M.torus.deck_rank
    delta = [float(d) for d in M.quadrics.delta]
    plan = _sampling_plan(M)
    points = []
    for _ in range(count):
        u = np.zeros(n)
        if not gamma:
            u = rng.standard_normal(n)
        elif plan is not None:
            ok = True
            for j, support in plan:
                rest = delta[j] - sum(
                    gamma[j][i] * u[i] ** 2 for i in range(n) if i not in support
                )
                if rest < 0:
                    ok = False
                    break
                w = rng.standard_normal(len(support))
                denom = sum(gamma[j][i] * wi**2 for i, wi in zip(support, w))
                if denom == 0:
                    ok = False
                    break
                scale = math.sqrt(rest / denom)
                for i, wi in zip(support, w):
                    u[i] = wi * scale
            if not ok:
                u = _newton_project(M, rng.standard_normal(n), residual_tol)
        else:
            u = _newton_project(M, rng.standard_normal(n), residual_tol)
        if gamma and not membership(M.quadrics, u, residual_tol):
            u = _newton_project(M, u, residual_tol)
        phi = rng.uniform(0.0, 2.0, size=deck)
        points.append((u, phi))
    return SampleSet(points=tuple(points), seed=seed, residual_tol=residual_tol)


def _phases(M: LagrangianModel, phi: np.ndarray) -> np.ndarray:
    cols = np.array([list(c) for c in M.quadrics.columns], dtype=float)  # (n, m)
    return np.exp(1j * math.pi * (cols @ phi))


def _frame(M: LagrangianModel, u: np.ndarray, phi: np.ndarray, u_eval=None):
    """Tangent frame of the image at psi(u, phi), as complex n-vectors.

    The phi-directions are analytic; the directions along the real locus come
    from a numeric kernel basis of the quadric Jacobian at u.  u_eval
    substitutes perturbed amplitudes into the frame while keeping the kernel
    at u (the negative-control hook).
    """
    gamma = _gamma_array(M)
    if u_eval is None:
        u_eval = u
    jac = gamma * u[None, :]
    m, n = jac.shape
    _, svals, vt = np.linalg.svd(jac)
    if m and (svals.size < m or svals[-1] < 1e-9 * max(1.0, svals[0])):
        raise GateError(f"singular sample: quadric Jacobian degenerate at u={u}")
    kernel = vt[m:]
    phases = _phases(M, phi)
    vectors = []
    for j in range(m):
        vectors.append(1j * math.pi * gamma[j] * u_eval * phases)
    for w in kernel:
        vectors.append(w * phases)
    out = []
    for v in vectors:
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise GateError(f"singular sample: degenerate frame vector at u={u}")
        out.append(v / norm)
    frame = np.array(out)
    real = np.concatenate([frame.real, frame.imag], axis=1)
    svals = np.linalg.svd(real, compute_uv=False)
    if svals[-1] < 1e-6:
        raise GateError(f"rank-deficient tangent frame at u={u}")
    return frame


def _max_omega(frame: np.ndarray) -> float:
    worst = 0.0
    for a in range(len(frame)):
        for b in range(a + 1, len(frame)):
            worst = max(worst, abs(np.vdot(frame[a], frame[b]).imag))
    return worst


def lagrangian_residual(M: LagrangianModel, S: SampleSet) -> float:
    """max |omega(v_a, v_b)| over normalized tangent frame pairs and samples."""
    if not S.points:
        raise GateError("empty sample set")
    return max(_max_omega(_frame(M, u, phi)) for u, phi in S.points)


def perturbed_residual(
    M: LagrangianModel,
    S: SampleSet,
    quadric_index: int = 0,
    scale: float = 1.1,
    coords=None,
) -> float:
    """Negative control: amplitudes scaled off the locus, kernel left alone.

    By default every coordinate in the support of one quadric is scaled.
    When the quadric supports are disjoint that scaling lands on another
    (rescaled) Lagrangian and the residual stays at rounding level; passing
    coords (e.g. a single support coordinate) breaks the frame for any
    system.  The residual grows linearly in (scale - 1).
    """
    if not S.points:
        raise GateError("empty sample set")
    row = M.quadrics.gamma[quadric_index]
    if coords is None:
        coords = [i for i, c in enumerate(row) if c != 0]
    factor = np.ones(M.quadrics.ambient_n)
    factor[list(coords)] = scale
    return max(
        _max_omega(_frame(M, u, phi, u_eval=u * factor)) for u, phi in S.points
    )


def negative_control(M: LagrangianModel, S: SampleSet, scale: float = 1.1):
    """A negative control that fires for every model.

    Tries the full-support perturbation first; if the system structure makes
    it invisible (disjoint quadric supports), falls back to scaling a single
    support coordinate.  Returns (residual, mode).
    """
    residual = perturbed_residual(M, S, scale=scale)
    if residual > 1e-6:
        return residual, "full-support"
    row = M.quadrics.gamma[0]
    first = next(i for i, c in enumerate(row) if c != 0)
    return perturbed_residual(M, S, scale=scale, coords=[first]), "single-coordinate"


def exact_cycle_area_coeff(M: LagrangianModel, i: int) -> Fraction:
    """<eps_i, delta>; the cycle area is pi times this rational."""
    eps_i = M.torus.eps[i]
    return sum(e * d for e, d in zip(eps_i, M.quadrics.delta))


def cycle_area_numeric(
    M: LagrangianModel, i: int, steps: int = 10_000, u=None, seed: int = 0
) -> float:
    """Integral of (1/2) sum (x dy - y dx) along the generator cycle e_i.

    The path is s -> psi(u, 2 s eps_i) for s in [0, 1]; the quadrature is a
    midpoint chord rule of second order, so the result matches
    pi * <eps_i, delta> to relative error O(1/steps^2).
    """
    if i >= M.torus.deck_rank:
        raise ValueError("generator index out of range")
    if u is None:
        u = sample_lagrangian(M, 1, seed).points[0][0]
    u = np.asarray(u, dtype=float)
    cols = np.array([list(c) for c in M.quadrics.columns], dtype=float)
    eps_i = np.array([float(x) for x in M.torus.eps[i]])
    # along the cycle each coordinate turns at constant rate 2 pi <gamma_l, eps_i>
    rates = 2.0 * math.pi * (cols @ eps_i)
    s = np.linspace(0.0, 1.0, steps + 1)
    angles = np.outer(s, rates)
    x = u[None, :] * np.cos(angles)
    y = u[None, :] * np.sin(angles)
    xm = 0.5 * (x[1:] + x[:-1])
    ym = 0.5 * (y[1:] + y[:-1])
    total = 0.5 * np.sum(xm * np.diff(y, axis=0) - ym * np.diff(x, axis=0))
    return float(total)


def _winding_numbers(D: DiscSpec, samples: int) -> list[float | None]:
    """Boundary winding of each coordinate by principal-branch increments."""
    theta = 2.0 * math.pi * np.arange(samples + 1) / samples
    out: list[float | None] = []
    for amp, phase, exp in zip(D.amplitudes, D.phases, D.exponents):
        if float(amp) == 0.0:
            out.append(None)
            continue
        vals = float(amp) * np.exp(1j * (math.pi * float(phase) + exp * theta))
        increments = np.angle(vals[1:] / vals[:-1])
        out.append(float(np.sum(increments)) / (2.0 * math.pi))
    return out


def disc_index_winding(
    M: LagrangianModel,
    D: DiscSpec,
    boundary_samples: int = 1024,
    tol: float = 1e-9,
    snap_tol: float = 0.01,
) -> int:
    """Maslov index of a monomial disc from boundary winding numbers.

    Per-coordinate windings are converted to a torus winding vector through
    one representative coordinate per torus direction, then weighted by the
    Maslov vector t: the index is 2 <t, winding>.  The raw value is snapped
    to the nearest integer with a guard.
    """
    if not membership(M.quadrics, D.amplitudes, tol):
        raise GateError("disc boundary is off the quadric locus")
    windings = _winding_numbers(D, boundary_samples)
    cols = M.quadrics.columns
    deck = M.torus.deck_rank
    reps: list[int | None] = [None] * deck
    for j in range(deck):
        unit = tuple(1 if a == j else 0 for a in range(deck))
        candidates = [i for i, c in enumerate(cols) if c == unit]
        live = [i for i in candidates if windings[i] is not None]
        if candidates and not live:
            raise GateError(
                f"tracked coordinate for torus direction {j} is identically zero; "
                "choose another representative coordinate"
            )
        if live:
            reps[j] = live[0]
    if any(r is None for r in reps):
        # general fallback: greedy independent set of live columns
        live = [i for i in range(len(cols)) if windings[i] is not None]
        chosen: list[int] = []
        for i in live:
            trial = chosen + [i]
            if exactlin.rank([list(cols[i2]) for i2 in trial]) == len(trial):
                chosen = trial
            if len(chosen) == deck:
                break
        if len(chosen) < deck:
            raise GateError(
                "tracked coordinates do not span the torus directions; "
                "choose another representative coordinate"
            )
        reps = chosen
    mat = np.array([[float(c) for c in cols[r]] for r in reps])
    w = np.array([windings[r] for r in reps])
    nu = np.linalg.solve(mat, w)
    raw = 2.0 * float(np.dot([float(t) for t in M.t], nu))
    snapped = round(raw)
    if abs(raw - snapped) >= snap_tol:
        raise GateError(f"winding index {raw} did not snap to an integer")
    return int(snapped)
