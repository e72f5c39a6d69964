"""Command line surface.

Subcommands mirror the pipeline: ball, dual, central, evolute, involute,
iterate, verify.  Input is a polygon document (JSON); results go to stdout
as JSON, with optional SVG and CSV side outputs.  Exit codes: 0 success,
2 invalid input, 3 failed mathematical identity.
"""
from __future__ import annotations

import argparse
import sys

from .backend import get_backend, parse_scalar
from .ball import build_plane
from .core import GeometryError, IdentityError, InputError
from .cw import central_equidistant, cusps_of_central, equidistant, min_convex_c
from .docio import (
    dump_json,
    load_paired,
    load_polygon,
    points_json,
    scalar_json,
)
from .evolute import evolute, evolute_cusps, involute, signed_area, signed_area_gap
from .iterate import check_trace, iterate_involutes, width_family
from .svgout import Layer, render_svg
from .verify import run_verify


def _add_common(p: argparse.ArgumentParser, with_a: bool = True):
    p.add_argument("input", help="polygon document (JSON)")
    p.add_argument("--backend", choices=["rational", "float"], default="rational")
    p.add_argument("--paired", action="store_true",
                   help="treat the input vertex list as an already-paired 2n list")
    if with_a:
        p.add_argument("--a", default="1/2", help="half-width parameter (rational like 1/2)")
    p.add_argument("--svg", help="write an SVG rendering to this path")
    p.add_argument("--out", help="write the JSON result to this path instead of stdout")


def _plane(args, strict: bool = True):
    backend = get_backend(args.backend)
    if args.paired:
        poly = load_paired(args.input, backend)
    else:
        poly = load_polygon(args.input, backend)
        for note in poly.notes:
            print(f"note: {note}", file=sys.stderr)
    a = parse_scalar(args.a, backend)
    return build_plane(poly, a, strict=strict), backend


def _emit(args, payload: dict, layers=None) -> None:
    text = dump_json(payload, args.out)
    if not args.out:
        print(text)
    if args.svg and layers:
        with open(args.svg, "w", encoding="utf-8") as f:
            f.write(render_svg(layers))


def cmd_ball(args) -> int:
    plane, backend = _plane(args)
    payload = {
        "n": plane.n,
        "a": scalar_json(plane.a, backend),
        "paired": points_json(plane.P.vertices, backend),
        "unit_ball": points_json(plane.U.vertices, backend),
    }
    layers = [
        Layer("polygon-p", [plane.P.vertices]),
        Layer("ball-u", [plane.U.vertices]),
    ]
    _emit(args, payload, layers)
    return 0


def cmd_dual(args) -> int:
    plane, backend = _plane(args)
    payload = {
        "n": plane.n,
        "unit_ball": points_json(plane.U.vertices, backend),
        "dual_ball": points_json(plane.V.vertices, backend),
    }
    layers = [
        Layer("ball-u", [plane.U.vertices]),
        Layer("dual-v", [plane.V.vertices]),
    ]
    _emit(args, payload, layers)
    return 0


def cmd_central(args) -> int:
    plane, backend = _plane(args)
    ce = central_equidistant(plane)
    cusps = cusps_of_central(ce)
    payload = {
        "n": plane.n,
        "central": points_json(ce.M, backend),
        "alphas": [scalar_json(x, backend) for x in ce.alphas],
        "betas": [scalar_json(x, backend) for x in ce.betas],
        "degenerate": ce.degenerate,
        "cusps": cusps,
        "min_convex_c": scalar_json(min_convex_c(ce), backend),
    }
    layers = [Layer("polygon-p", [plane.P.vertices])]
    for j, ctext in enumerate(args.c or []):
        c = parse_scalar(ctext, backend)
        layers.append(Layer(f"equidistant-c{j}", [equidistant(ce, plane.U, c).vertices]))
    layers.append(Layer("central-m", [ce.M]))
    _emit(args, payload, layers)
    return 0


def cmd_evolute(args) -> int:
    plane, backend = _plane(args)
    ce = central_equidistant(plane)
    ev = evolute(plane.P.vertices, plane.U, plane.V, backend)
    payload = {
        "n": plane.n,
        "evolute": points_json(ev.E, backend),
        "mus": [scalar_json(x, backend) for x in ev.mus],
        "degenerate": ev.degenerate,
        "cusps": evolute_cusps(ev),
    }
    layers = [
        Layer("polygon-p", [plane.P.vertices]),
        Layer("central-m", [ce.M]),
        Layer("evolute-e", [ev.E]),
    ]
    _emit(args, payload, layers)
    return 0


def cmd_involute(args) -> int:
    plane, backend = _plane(args)
    ce = central_equidistant(plane)
    inv = involute(ce, plane.V)
    sa_m, sa_n = signed_area(ce.M), signed_area(inv.N)
    payload = {
        "n": plane.n,
        "involute": points_json(inv.N, backend),
        "betas": [scalar_json(x, backend) for x in inv.betas],
        "degenerate": inv.degenerate,
        "signed_area_central": scalar_json(sa_m, backend),
        "signed_area_involute": scalar_json(sa_n, backend),
        "signed_area_gap": scalar_json(signed_area_gap(ce.betas, plane.V), backend),
    }
    layers = [
        Layer("polygon-p", [plane.P.vertices]),
        Layer("central-m", [ce.M]),
        Layer("involute-n", [inv.N]),
    ]
    _emit(args, payload, layers)
    return 0


def cmd_iterate(args) -> int:
    plane, backend = _plane(args)
    trace = iterate_involutes(plane, max_steps=args.steps, tol=args.tol)
    checks = check_trace(trace, plane)
    c = parse_scalar(args.c, backend)
    d = parse_scalar(args.d, backend)
    p_last, q_last = width_family(plane=plane, trace=trace,
                                  k=len(trace.steps) - 1, c=c, d=d)
    payload = {
        "n": plane.n,
        "converged": trace.converged,
        "O": [scalar_json(trace.O.x, backend), scalar_json(trace.O.y, backend)],
        "radius": trace.radius,
        "sumsquares": scalar_json(trace.sumsquares, backend),
        "sa0": scalar_json(trace.sa0, backend),
        "width_family": {
            "c": scalar_json(c, backend),
            "d": scalar_json(d, backend),
            "P": points_json(p_last.vertices, backend),
            "Q": points_json(q_last.vertices, backend),
        },
        "steps": [
            {
                "k": s.k,
                "sa_m": scalar_json(s.sa_m, backend),
                "sa_n": scalar_json(s.sa_n, backend),
                "gap_mn": scalar_json(s.gap_mn, backend),
                "gap_nm": scalar_json(s.gap_nm, backend),
                "diameter": s.diam_m,
            }
            for s in trace.steps
        ],
        "checks": [{"check_id": c.check_id, "pass": c.ok, "detail": c.detail}
                   for c in checks],
    }
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as f:
            f.write("k,SA_M,SA_N,diameter\n")
            for s in trace.steps:
                f.write(f"{s.k},{float(s.sa_m)!r},{float(s.sa_n)!r},{s.diam_m!r}\n")
    ce = central_equidistant(plane)
    layers = [
        Layer("polygon-p", [plane.P.vertices]),
        Layer("central-m", [ce.M]),
    ]
    for s in trace.steps[1:9]:
        layers.append(Layer(f"iterate-k{s.k}", [s.N, s.M]))
    _emit(args, payload, layers)
    if not all(c.ok for c in checks):
        print("iterate: ledger verification failed", file=sys.stderr)
        return 3
    return 0


def cmd_verify(args) -> int:
    plane, backend = _plane(args, strict=False)
    report = run_verify(plane, seed=args.seed, samples=args.samples)
    _emit(args, report.to_json())
    if not report.all_ok:
        print(f"verify: {report.failed} of {len(report.checks)} checks failed",
              file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cw",
        description="Constant-width polygon geometry in polygonal Minkowski planes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="paired form and the induced unit ball")
    _add_common(p)
    p.set_defaults(fn=cmd_ball)

    p = sub.add_parser("dual", help="unit ball and its dual ball")
    _add_common(p)
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("central", help="central equidistant with coefficient ladders")
    _add_common(p)
    p.add_argument("--c", action="append",
                   help="extra equidistant layer(s) for the SVG (repeatable)")
    p.set_defaults(fn=cmd_central)

    p = sub.add_parser("evolute", help="curvature radii and the evolute")
    _add_common(p)
    p.set_defaults(fn=cmd_evolute)

    p = sub.add_parser("involute", help="involute of the central equidistant")
    _add_common(p)
    p.set_defaults(fn=cmd_involute)

    p = sub.add_parser("iterate", help="iterate involutes toward the central point")
    _add_common(p)
    p.add_argument("--steps", type=int, default=None, help="maximum iteration steps")
    p.add_argument("--tol", type=float, default=None, help="diameter stopping threshold")
    p.add_argument("--c", default="1/2", help="width parameter of the reported P(k,c)")
    p.add_argument("--d", default="1/2", help="dual width parameter of the reported Q(k,d)")
    p.add_argument("--csv", help="write the k,SA_M,SA_N,diameter trace to this path")
    p.set_defaults(fn=cmd_iterate)

    p = sub.add_parser("verify", help="run the full identity suite on one polygon")
    _add_common(p)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--samples", type=int, default=16,
                   help="containment samples per involute segment")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IdentityError as e:
        print(f"identity failure: {e}", file=sys.stderr)
        return 3
    except GeometryError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
