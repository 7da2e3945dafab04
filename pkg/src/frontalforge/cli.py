"""Command-line interface.

Subcommands: catalog, transform, verify, ns, cahn-hoffman, front-check.
Exit codes: 0 success, 1 verification failure, 2 usage/config error,
3 numerical degeneracy (pole on silhouette, degenerate Gauss map, ...).

Identical invocations produce byte-identical output files.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import verify
from .analysis import cahn_hoffman, front_equivalence
from .catalog import catalog, catalog_names
from .errors import (CatalogParameterError, DegenerateNu2Error,
                     FrontalForgeError, GaussDegenerateError,
                     PoleAtImageError, PoleOnSilhouetteError,
                     SingularGaussMapError, UnknownCatalogError)
from .frontal import sample
from .io import curve_to_svg, sampled_map_to_csv
from .silhouette import ns_raster, raster_to_csv, raster_to_pgm
from .transforms import TransformKind, sample_poles, transform

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

_DEGENERATE = (GaussDegenerateError, PoleOnSilhouetteError,
               SingularGaussMapError, DegenerateNu2Error, PoleAtImageError)


class UsageError(Exception):
    pass


def _parse_params(args) -> dict:
    params = {}
    if args.params:
        try:
            params.update(json.loads(args.params))
        except json.JSONDecodeError as exc:
            raise UsageError(f"--params is not valid JSON: {exc}")
    for kv in args.param or []:
        if "=" not in kv:
            raise UsageError(f"--param expects key=value, got {kv!r}")
        k, v = kv.split("=", 1)
        try:
            params[k] = json.loads(v)
        except json.JSONDecodeError:
            params[k] = v
    return params


def _load_frontal(args):
    if not getattr(args, "catalog", None):
        raise UsageError("--catalog is required")
    try:
        return catalog(args.catalog, _parse_params(args))
    except (UnknownCatalogError, CatalogParameterError) as exc:
        raise UsageError(str(exc))


def _parse_pole(text: str, m: int) -> np.ndarray:
    try:
        P = np.array([float(v) for v in text.split(",")])
    except ValueError:
        raise UsageError(f"bad pole {text!r}; expected comma-separated reals")
    if P.shape[0] != m:
        raise UsageError(f"pole has dimension {P.shape[0]}, expected {m}")
    return P


def _resolve_poles(args, F, samples: int) -> np.ndarray:
    spec = getattr(args, "poles", None)
    if spec:
        if spec.startswith("auto:"):
            try:
                k = int(spec.split(":", 1)[1])
            except ValueError:
                raise UsageError(f"bad --poles {spec!r}")
            grid = verify.grid_for(F, samples, interior_margin=1e-3)
            return sample_poles(F, grid, k)
        return np.array([_parse_pole(p, F.ambient_dim)
                         for p in spec.split(";")])
    if getattr(args, "pole", None):
        return _parse_pole(args.pole, F.ambient_dim)[None, :]
    raise UsageError("a pole is required (--pole or --poles)")


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_catalog(args) -> int:
    for name in catalog_names():
        F = catalog(name)
        print(f"{name}: n={F.param_dim}, ambient dim {F.ambient_dim}, "
              f"params {json.dumps(F.params, sort_keys=True)}")
    return EXIT_OK


def cmd_transform(args) -> int:
    F = _load_frontal(args)
    P = _parse_pole(args.pole, F.ambient_dim)
    kind = TransformKind(args.kind)
    kw = {}
    if args.tol_degeneracy is not None:
        kw["degeneracy_tol"] = args.tol_degeneracy
    res = transform(kind, F, P, **kw).result
    grid = verify.grid_for(F, args.samples)
    sm = sample(res, grid, with_gauss=not args.no_gauss)
    if args.out:
        _write(args.out, sampled_map_to_csv(sm))
    if args.svg:
        if F.ambient_dim != 2:
            raise UsageError("--svg requires ambient dimension 2")
        _write(args.svg, curve_to_svg(sm.values))
    if args.source_out:
        _write(args.source_out, sampled_map_to_csv(sample(F, grid)))
    if not (args.out or args.svg or args.source_out):
        sys.stdout.write(sampled_map_to_csv(sm))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; "
                         f"known: {', '.join(verify.SUITES)}")
    pole = None
    F = None
    if args.suite == "square-reconstruction":
        if args.pole:
            pole = _parse_pole(args.pole, 2)
        report = verify.run_suite(args.suite, pole=pole,
                                  samples=args.samples)
    else:
        F = _load_frontal(args)
        if args.pole:
            pole = _parse_pole(args.pole, F.ambient_dim)
        n_poles = 5
        if args.poles and args.poles.startswith("auto:"):
            n_poles = int(args.poles.split(":", 1)[1])
        report = verify.run_suite(args.suite, F=F, pole=pole,
                                  n_poles=n_poles, samples=args.samples)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.json:
        _write(args.json, text + "\n")
    else:
        print(text)
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAIL


def cmd_ns(args) -> int:
    F = _load_frontal(args)
    if F.ambient_dim != 2:
        raise UsageError("ns raster requires ambient dimension 2")
    try:
        xmin, xmax, ymin, ymax = (float(v) for v in args.bbox.split(","))
    except ValueError:
        raise UsageError(f"bad --bbox {args.bbox!r}; expected "
                         "xmin,xmax,ymin,ymax")
    if not (xmax > xmin and ymax > ymin):
        raise UsageError("degenerate bounding box")
    res = tuple(int(v) for v in args.resolution.split(","))
    if len(res) == 1:
        res = (res[0], res[0])
    grid = verify.grid_for(F, args.samples)
    kw = {}
    if args.tol_ns is not None:
        kw["tol_frac"] = args.tol_ns
    raster = ns_raster(F, (xmin, xmax, ymin, ymax), res, grid, **kw)
    if args.out_pgm:
        _write(args.out_pgm, raster_to_pgm(raster))
    if args.out_csv:
        _write(args.out_csv, raster_to_csv(raster))
    if not (args.out_pgm or args.out_csv):
        sys.stdout.write(raster_to_pgm(raster))
    return EXIT_OK


def _report_lines(reports, path):
    text = "\n".join(json.dumps(r, sort_keys=True) for r in reports) + "\n"
    if path:
        _write(path, text)
    else:
        sys.stdout.write(text)


def cmd_cahn_hoffman(args) -> int:
    F = _load_frontal(args)
    P = _parse_pole(args.pole, F.ambient_dim)
    grid = verify.grid_for(F, args.samples, interior_margin=1e-3)
    reports = []
    kw = {}
    if args.tol_jnu is not None:
        kw["jnu_tol"] = args.tol_jnu
    for x in grid:
        try:
            rep = cahn_hoffman(F, P, x[None, :], **kw)
        except SingularGaussMapError:
            reports.append({"x": x.tolist(), "singular": True})
            continue
        reports.append({
            "x": x.tolist(),
            "direct": rep.direct.tolist(),
            "formula": rep.formula.tolist(),
            "residual": rep.residual,
            "det_jnu": rep.det_jnu,
            "gamma": rep.gamma,
        })
    _report_lines(reports, args.json)
    return EXIT_OK


def cmd_front_check(args) -> int:
    F = _load_frontal(args)
    P = _parse_pole(args.pole, F.ambient_dim)
    grid = verify.grid_for(F, args.samples, interior_margin=1e-3)
    reports = []
    kw = {}
    if args.tol_rank is not None:
        kw["tol"] = args.tol_rank
    for x in grid:
        rep = front_equivalence(F, P, x[None, :], **kw)
        reports.append({
            "x": x.tolist(),
            "rank_f_nu": rep.rank_f_nu,
            "rank_ftilde_nutilde": rep.rank_ftilde_nutilde,
            "rank_f_ftilde": rep.rank_f_ftilde,
            "is_front": rep.is_front,
            "consistent": rep.consistent,
            "ambiguous": rep.ambiguous,
        })
    _report_lines(reports, args.json)
    return EXIT_OK


def _add_frontal_args(p):
    p.add_argument("--catalog", help="catalog frontal name")
    p.add_argument("--param", action="append",
                   help="catalog parameter key=value (repeatable)")
    p.add_argument("--params", help="catalog parameters as a JSON object")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frontalforge")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list catalog frontals")

    p = sub.add_parser("transform", help="sample a transform to CSV/SVG")
    _add_frontal_args(p)
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in TransformKind])
    p.add_argument("--pole", required=True)
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--svg", help="SVG output path (planar curves)")
    p.add_argument("--source-out", help="CSV path for the source samples")
    p.add_argument("--no-gauss", action="store_true",
                   help="omit the induced Gauss map columns")
    p.add_argument("--tol-degeneracy", type=float,
                   help="override the pole degeneracy tolerance")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    _add_frontal_args(p)
    p.add_argument("--pole")
    p.add_argument("--poles", help="'auto:k' for k sampled poles")
    p.add_argument("--samples", type=int)
    p.add_argument("--json", help="write the report to this path")

    p = sub.add_parser("ns", help="no-silhouette raster (PGM/CSV)")
    _add_frontal_args(p)
    p.add_argument("--bbox", required=True, help="xmin,xmax,ymin,ymax")
    p.add_argument("--resolution", default="128", help="nx[,ny]")
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--out-pgm")
    p.add_argument("--out-csv")
    p.add_argument("--tol-ns", type=float,
                   help="override the membership margin fraction")

    p = sub.add_parser("cahn-hoffman",
                       help="vector-formula report per grid point (JSONL)")
    _add_frontal_args(p)
    p.add_argument("--pole", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--json", help="output path (default stdout)")
    p.add_argument("--tol-jnu", type=float,
                   help="override the Gauss-Jacobian determinant cutoff")

    p = sub.add_parser("front-check",
                       help="front-criterion report per grid point (JSONL)")
    _add_frontal_args(p)
    p.add_argument("--pole", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--json", help="output path (default stdout)")
    p.add_argument("--tol-rank", type=float,
                   help="override the rank-decision tolerance")

    return ap


_COMMANDS = {
    "catalog": cmd_catalog,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "ns": cmd_ns,
    "cahn-hoffman": cmd_cahn_hoffman,
    "front-check": cmd_front_check,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DEGENERATE as exc:
        print(f"error: numerical degeneracy "
              f"[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except FrontalForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
