"""Command-line surface: parse polytope files, run analyses, emit reports.

Polytope file format (# starts a comment):

    dim <k>
    facets <n>
    a_1 ... a_k | b          (n such lines; a integer, b rational like 3/2)

Exit codes: 0 success, 1 mathematical gate failure (e.g. a verification that
needs an embedded model on a non-Delzant input), 2 input or parse errors.
All exact values are serialized as rational strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import families, lagrangian, verify
from .polytope import (
    GateError,
    HalfspacePresentation,
    enumerate_vertices,
    fano_constant,
    is_delzant,
    presentation,
    presentation_report,
)
from .quadrics import quadrics_of, topology_hint

SCHEMA_VERSION = 1


class PolytopeParseError(ValueError):
    pass


def parse_polytope_text(text: str) -> HalfspacePresentation:
    dim = None
    facets = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if dim is None:
            if len(parts) != 2 or parts[0] != "dim":
                raise PolytopeParseError(f"line {lineno}: expected 'dim <k>'")
            dim = _parse_int(parts[1], lineno)
            continue
        if facets is None:
            if len(parts) != 2 or parts[0] != "facets":
                raise PolytopeParseError(f"line {lineno}: expected 'facets <n>'")
            facets = _parse_int(parts[1], lineno)
            continue
        if "|" not in line:
            raise PolytopeParseError(f"line {lineno}: expected 'a_1 ... a_k | b'")
        left, _, right = line.partition("|")
        a_parts = left.split()
        if len(a_parts) != dim:
            raise PolytopeParseError(
                f"line {lineno}: expected {dim} normal entries, got {len(a_parts)}"
            )
        normal = tuple(_parse_int(x, lineno) for x in a_parts)
        b_parts = right.split()
        if len(b_parts) != 1:
            raise PolytopeParseError(f"line {lineno}: expected a single offset after '|'")
        rows.append((normal, _parse_fraction(b_parts[0], lineno), lineno))
    if dim is None or facets is None:
        raise PolytopeParseError("line 1: missing 'dim' or 'facets' header")
    if len(rows) != facets:
        raise PolytopeParseError(
            f"line {len(text.splitlines())}: expected {facets} facet lines, got {len(rows)}"
        )
    try:
        return presentation(dim, [r[0] for r in rows], [r[1] for r in rows])
    except ValueError as exc:
        raise PolytopeParseError(f"line {rows[0][2] if rows else 1}: {exc}") from exc


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise PolytopeParseError(f"line {lineno}: not an integer: {token!r}") from None


def _parse_fraction(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise PolytopeParseError(f"line {lineno}: not a rational: {token!r}") from None


def load_polytope(path: str) -> HalfspacePresentation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PolytopeParseError(f"cannot read {path}: {exc}") from exc
    return parse_polytope_text(text)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float):
        return value
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


def _exact(value):
    return None if value is None else str(Fraction(value))


def lagrangian_section(model: lagrangian.LagrangianModel) -> dict:
    section = {
        "t": list(model.t),
        "monotone": model.monotone,
        "fano_C": _exact(model.fano_C),
        "embedded": model.embedded,
        "immersed_only": model.immersed_only,
        "r_simply_connected": model.r_simply_connected,
        "deck_rank": model.torus.deck_rank,
        "lattice_basis": [list(r) for r in model.torus.lattice_basis],
        "dual_basis": [[_exact(x) for x in r] for r in model.torus.eps],
    }
    if model.embedded:
        pairings = lagrangian.generator_pairing(model)
        section["generators"] = [
            {
                "generator": p.generator,
                "maslov": p.maslov,
                "area_over_pi": _exact(p.area_coeff),
            }
            for p in pairings
        ]
        try:
            section["minimal_maslov"] = lagrangian.minimal_maslov(model)
        except GateError as exc:
            section["minimal_maslov"] = None
            section["minimal_maslov_error"] = str(exc)
    return section


def analyze_report(P: HalfspacePresentation) -> dict:
    rep = presentation_report(P)
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "analyze",
        "presentation": {
            "dim": P.dim,
            "facets": P.facet_count,
            "bounded": rep.bounded,
            "simple": rep.simple,
            "generic": rep.generic,
            "redundant_facets": list(rep.redundant_facets),
            "vertex_count": rep.vertex_count,
        },
    }
    if not (rep.bounded and rep.simple):
        out["error"] = "not a simple bounded presentation; lattice analysis skipped"
        return out
    verdict = is_delzant(P)
    out["presentation"]["delzant"] = verdict.is_delzant
    if verdict.witness is not None:
        point, index = verdict.witness
        out["presentation"]["delzant_witness"] = {
            "vertex": [_exact(x) for x in point],
            "lattice_index": index,
        }
    # Fano is decided for the given normals only; lattice-preserving
    # re-presentations are out of scope.
    out["presentation"]["fano_C"] = _exact(fano_constant(P))
    Q = quadrics_of(P)
    out["quadrics"] = {
        "gamma": [list(r) for r in Q.gamma],
        "delta": [_exact(d) for d in Q.delta],
    }
    if rep.redundant_facets:
        out["error"] = "redundant presentation; the Lagrangian model needs a connected real locus"
        return out
    hint = topology_hint(P)
    out["topology_hint"] = {"description": hint.description, "provenance": hint.provenance}
    model = lagrangian.build_model(P)
    out["lagrangian"] = lagrangian_section(model)
    return out


def family_from_args(args) -> families.FamilyModel:
    if args.kind == "simplex-product":
        if args.n is None or args.p is None or args.k is None:
            raise PolytopeParseError("simplex-product needs --n, --p and --k")
        return families.simplex_product_family(args.n, args.p, args.k)
    if args.p is None or args.k is None:
        raise PolytopeParseError("stretched needs --p and --k")
    return families.stretched_family(args.p, args.k)


def family_report(F: families.FamilyModel, bound=None) -> dict:
    inv = families.invariant_m(F, bound)
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "family",
        "family": F.family,
        "params": {"n": F.n, "p": F.p, "k": F.k},
        "parity_ok": F.parity_ok,
        "diffeo_type": F.diffeo_type,
        "index_threshold": F.index_threshold,
        "branch_index_coefficients": {"A": list(F.branch_a), "B": list(F.branch_b)},
        "invariant_m": {
            "m": inv.m,
            "witness_class": list(inv.witness_class),
            "witness_lambdas": list(inv.witness_lambdas),
            "threshold": inv.threshold,
            "closed_form": inv.closed_form,
            "bound_used": inv.bound_used,
        },
        "lagrangian": lagrangian_section(F.model),
    }
    try:
        out["smooth_isotopy_class_count"] = families.smooth_isotopy_class_count(F)
    except GateError:
        out["smooth_isotopy_class_count"] = None
    return out


def compare_report(models, bound=None) -> dict:
    report = families.distinguish(models, bound)
    report["schema_version"] = SCHEMA_VERSION
    report["kind"] = "compare"
    return report


def verify_report(model, F=None, samples=100, seed=0, steps=10_000, tol=None) -> dict:
    if not model.embedded:
        raise GateError("verification needs an embedded model (Delzant input)")
    residual_tol = verify.QUADRIC_TOL
    lagr_tol = tol if tol is not None else verify.LAGRANGIAN_TOL
    S = verify.sample_lagrangian(model, samples, seed, residual_tol)
    quad_res = 0.0
    for u, _ in S.points:
        for row, d in zip(model.quadrics.gamma, model.quadrics.delta):
            quad_res = max(
                quad_res, abs(sum(c * x * x for c, x in zip(row, u)) - float(d))
            )
    lag_res = verify.lagrangian_residual(model, S) if S.points else 0.0
    control, control_mode = (
        verify.negative_control(model, S) if S.points else (None, None)
    )
    areas = []
    for i in range(model.torus.deck_rank):
        numeric = verify.cycle_area_numeric(model, i, steps, seed=seed)
        coeff = verify.exact_cycle_area_coeff(model, i)
        exact = math.pi * float(coeff)
        rel = abs(numeric - exact) / max(1e-300, abs(exact)) if exact else abs(numeric)
        areas.append(
            {
                "generator": i,
                "numeric": numeric,
                "exact_over_pi": _exact(coeff),
                "rel_error": rel,
            }
        )
    discs = []
    if F is not None:
        if F.family == "simplex_product":
            disc_spec = families.simplex_disc(F, 1, 1)
            expected = F.branch_a[0] + F.branch_a[1]
            name = "simplex_disc(1,1)"
        else:
            disc_spec = families.stretched_disc(F)
            expected = F.closed_form_m
            name = "stretched_disc"
        got = verify.disc_index_winding(model, disc_spec)
        discs.append({"disc": name, "index": got, "expected": expected})
    area_ok = all(a["rel_error"] < verify.AREA_REL_TOL for a in areas)
    passed = (
        quad_res < 1e-10
        and lag_res < lagr_tol
        and (control is None or control > 1e-3)
        and area_ok
        and all(d["index"] == d["expected"] for d in discs)
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify",
        "samples": samples,
        "seed": seed,
        "steps": steps,
        "max_quadric_residual": quad_res,
        "lagrangian_residual": lag_res,
        "negative_control_residual": control,
        "negative_control_mode": control_mode,
        "areas": areas,
        "discs": discs,
        "passed": passed,
    }


def _render(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def emit(report: dict, json_path=None) -> None:
    report = _jsonable(report)
    if json_path:
        Path(json_path).write_text(json.dumps(report, indent=2) + "\n")
    print("\n".join(_render(report)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polylag",
        description="Exact toric-Lagrangian invariants of halfspace presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full report for a polytope file")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--json", dest="json_path")

    p_vertices = sub.add_parser("vertices", help="exact vertex list of a polytope file")
    p_vertices.add_argument("file")
    p_vertices.add_argument("--json", dest="json_path")

    p_family = sub.add_parser("family", help="invariants of a parametric family member")
    p_family.add_argument("kind", choices=["simplex-product", "stretched"])
    p_family.add_argument("--n", type=int)
    p_family.add_argument("--p", type=int)
    p_family.add_argument("--k", type=int)
    p_family.add_argument("--bound", type=int)
    p_family.add_argument("--json", dest="json_path")

    p_compare = sub.add_parser("compare", help="partition family members by invariants")
    p_compare.add_argument("kind", choices=["simplex-product", "stretched"])
    p_compare.add_argument("--n", type=int)
    p_compare.add_argument("--p", type=int)
    p_compare.add_argument("--k", required=True, help="comma-separated k values")
    p_compare.add_argument("--bound", type=int)
    p_compare.add_argument("--json", dest="json_path")

    p_verify = sub.add_parser("verify", help="numerical harness on a file or family")
    p_verify.add_argument(
        "target", help="polytope file, or 'simplex-product'/'stretched' with flags"
    )
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--steps", type=int, default=10_000)
    p_verify.add_argument("--tol", type=float)
    p_verify.add_argument("--json", dest="json_path")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            report = analyze_report(load_polytope(args.file))
            emit(report, args.json_path)
            return 1 if "error" in report else 0
        if args.command == "vertices":
            P = load_polytope(args.file)
            verts = enumerate_vertices(P)
            report = {
                "schema_version": SCHEMA_VERSION,
                "kind": "vertices",
                "vertex_count": len(verts),
                "vertices": [
                    {
                        "point": [_exact(x) for x in v.point],
                        "active_set": list(v.active_set),
                    }
                    for v in verts
                ],
            }
            emit(report, args.json_path)
            return 0
        if args.command == "family":
            F = family_from_args(args)
            emit(family_report(F, args.bound), args.json_path)
            return 0
        if args.command == "compare":
            try:
                ks = [int(x) for x in args.k.split(",") if x != ""]
            except ValueError:
                raise PolytopeParseError(f"--k must be comma-separated integers: {args.k!r}")
            if args.kind == "simplex-product":
                if args.n is None or args.p is None:
                    raise PolytopeParseError("compare simplex-product needs --n and --p")
                models = [families.simplex_product_family(args.n, args.p, k) for k in ks]
            else:
                if args.p is None:
                    raise PolytopeParseError("compare stretched needs --p")
                models = [families.stretched_family(args.p, k) for k in ks]
            emit(compare_report(models, args.bound), args.json_path)
            return 0
        if args.command == "verify":
            F = None
            if args.target in ("simplex-product", "stretched"):
                args.kind = args.target
                F = family_from_args(args)
                model = F.model
            else:
                model = lagrangian.build_model(load_polytope(args.target))
            report = verify_report(
                model, F, samples=args.samples, seed=args.seed,
                steps=args.steps, tol=args.tol,
            )
            emit(report, args.json_path)
            return 0 if report["passed"] else 1
    except PolytopeParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GateError as exc:
        print(f"gate failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
