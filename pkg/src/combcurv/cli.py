"""Command-line front end.

One subcommand per pipeline: ``validate`` (manifold + edge degrees),
``check`` (flagness / largeness / location), ``sd`` (descent property),
``metric`` (intervals, thinness, four-point constant), ``cover`` (ball
construction), ``links``, ``lemmas``, ``theorem-b`` and ``gen``.

Exit codes: 0 all checks passed, 1 some check failed (witness in the
report), 2 usage or input error.  ``--json`` emits the machine-readable
report on standard output; progress goes to standard error.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys

from . import cover as cover_mod
from . import manifold as manifold_mod
from .complexes import SimplicialComplex, is_flag
from .curvature import is_locally_k_large, is_m_located
from .errors import CombCurvError, NotASphere, NotPure, PreconditionNotMet
from .formats import dump_path, load_path, serialize_text
from .generators import generate, parse_generator_args
from .metric import check_sd_prime, delta_four_point, interval, interval_thinness
from .parallel import default_jobs, parallel_map
from .verdicts import Verdict, failed


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="combcurv",
                                description="curvature checkers for simplicial complexes")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    p.add_argument("--jobs", type=int, default=default_jobs(),
                   help="parallel workers for per-item checks")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="closed-3-manifold and edge-degree checks")
    sp.add_argument("path")

    sp = sub.add_parser("check", help="flagness / largeness / location")
    sp.add_argument("path")
    sp.add_argument("--m", type=int, help="verify m-location")
    sp.add_argument("--k", type=int, help="verify local k-largeness")
    sp.add_argument("--flag", action="store_true", help="verify flagness")
    sp.add_argument("--sphere-56", action="store_true", dest="sphere_56",
                    help="verify the degree-5/6 sphere condition")

    sp = sub.add_parser("sd", help="descent property around a base vertex")
    sp.add_argument("path")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("metric", help="intervals, thinness, four-point constant")
    sp.add_argument("path")
    sp.add_argument("--base", type=int)
    sp.add_argument("--other", type=int)
    sp.add_argument("--delta", action="store_true", help="four-point constant")
    sp.add_argument("--delta-cap", type=int, default=200)

    sp = sub.add_parser("cover", help="build a universal-cover ball")
    sp.add_argument("path")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--out", help="write the final ball (complex JSON + sheet map)")
    sp.add_argument("--stage-limit", type=int, default=cover_mod.DEFAULT_STAGE_LIMIT)
    sp.add_argument("--vertex-limit", type=int, default=cover_mod.DEFAULT_VERTEX_LIMIT)

    sp = sub.add_parser("links", help="extract vertex links and run sphere checks")
    sp.add_argument("path")

    sp = sub.add_parser("lemmas", help="wheel and cycle filling suite")
    sp.add_argument("path")

    sp = sub.add_parser("theorem-b", help="full validation pipeline")
    sp.add_argument("path")

    sp = sub.add_parser("gen", help="emit a generated complex")
    sp.add_argument("spec", nargs="+", help="generator name and parameters")
    sp.add_argument("-o", "--out", help="output path (.json for JSON format)")
    return p


def _load(path) -> SimplicialComplex:
    return load_path(path).complex


def _emit(args, command, verdicts, extra=None):
    code = 0 if all(v.passed for v in verdicts) else 1
    if args.json:
        doc = {"command": command,
               "verdicts": [v.to_json(args.timings) for v in verdicts]}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2))
    else:
        for v in verdicts:
            line = f"[{v.status}] {v.check}"
            if v.detail:
                line += f": {v.detail}"
            print(line)
    return code


def cmd_validate(args):
    X = _load(args.path)
    try:
        report = manifold_mod.validate_closed_3manifold(X)
    except NotPure as exc:
        return _emit(args, "validate", [failed("validate", {"kind": "not_pure"}, detail=str(exc))])
    verdicts = [report.is_pseudomanifold, report.edge_link_cycles,
                report.vertex_links_spheres, report.five_six_star]
    return _emit(args, "validate", verdicts,
                 extra={"report": report.to_json(args.timings)})


def cmd_check(args):
    X = _load(args.path)
    verdicts = []
    if args.flag or not (args.m or args.k or args.sphere_56):
        verdicts.append(is_flag(X))
    if args.k:
        verdicts.append(is_locally_k_large(X, args.k))
    if args.m:
        verdicts.append(is_m_located(X, args.m))
    if args.sphere_56:
        try:
            verdicts.append(manifold_mod.is_5_6_star_sphere(X))
        except NotASphere as exc:
            verdicts.append(failed("is_5_6_star_sphere", {"kind": "not_a_sphere"},
                                   detail=str(exc)))
    return _emit(args, "check", verdicts)


def cmd_sd(args):
    X = _load(args.path)
    report = check_sd_prime(X, args.base, args.n)
    code = 0 if report.passed else 1
    if args.json:
        print(json.dumps({"command": "sd", "report": report.to_json(args.timings)}, indent=2))
    else:
        print(f"[{'pass' if report.passed else 'fail'}] sd_prime base={args.base} n={args.n}")
        if not report.passed:
            print(f"  first failure: {report.first_failure().detail}")
    return code


def cmd_metric(args):
    X = _load(args.path)
    out = {}
    if args.delta:
        out["delta"] = delta_four_point(X, cap=args.delta_cap)
    if args.base is not None and args.other is not None:
        itv = interval(X, args.base, args.other)
        thin, pair = interval_thinness(X, args.base, args.other)
        out["distance"] = itv.n
        out["layers"] = [sorted(layer) for layer in itv.layers]
        out["thinness"] = thin
        out["thinness_pair"] = list(pair) if pair else None
    if not out:
        print("metric: nothing requested (use --delta and/or --base/--other)",
              file=sys.stderr)
        return 2
    if args.json:
        doc = dict(out)
        if "delta" in doc:
            doc["delta"] = str(doc["delta"])
        print(json.dumps({"command": "metric", **doc}, indent=2))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0


def cmd_cover(args):
    X = _load(args.path)
    print(f"building cover ball of radius {args.radius} ...", file=sys.stderr)
    report = cover_mod.build_cover(X, args.base, args.radius,
                                   stage_limit=args.stage_limit,
                                   vertex_limit=args.vertex_limit)
    for (stage, nv, ne, fresh) in report.stage_stats:
        print(f"  stage {stage}: {nv} vertices, {ne} edges (+{fresh} classes)",
              file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.state.to_json(), fh, indent=2)
    code = 0 if report.passed else 1
    if args.json:
        print(json.dumps({"command": "cover", "report": report.to_json(args.timings)},
                         indent=2))
    else:
        print(f"[{'pass' if report.passed else 'fail'}] cover "
              f"radius={args.radius} vertices={report.state.ball.vertex_count} "
              f"thinness={report.max_interior_thinness}")
        for w in report.state.warnings:
            print(f"  warning: {w}")
    return code


def _link_check(X, v):
    try:
        sphere, _ = manifold_mod.vertex_link_sphere(X, v)
    except CombCurvError as exc:
        return failed("link_sphere", {"kind": "vertex_link", "vertex": v}, detail=str(exc))
    return manifold_mod.is_5_6_star_sphere(sphere)


def cmd_links(args):
    X = _load(args.path)
    worker = functools.partial(_link_check, X)
    verdicts = parallel_map(worker, X.vertices, jobs=args.jobs)
    named = [Verdict(check=f"link_{v}", passed=r.passed, detail=r.detail,
                     witness=r.witness, stats=r.stats)
             for v, r in zip(X.vertices, verdicts)]
    return _emit(args, "links", named)


def cmd_lemmas(args):
    X = _load(args.path)
    verdicts = []
    try:
        if X.dimension() == 3:
            verdicts.append(manifold_mod.check_wheel_in_link(X))
            for v in X.vertices:
                sphere, _ = manifold_mod.vertex_link_sphere(X, v)
                verdicts.append(manifold_mod.check_sphere_cycle_lemma(sphere))
                verdicts.append(manifold_mod.check_7cycle_fillings(sphere))
        else:
            verdicts.append(manifold_mod.check_sphere_cycle_lemma(X))
            verdicts.append(manifold_mod.check_7cycle_fillings(X))
    except (PreconditionNotMet, NotASphere, CombCurvError) as exc:
        verdicts.append(failed("lemmas", {"kind": "precondition"}, detail=str(exc)))
    return _emit(args, "lemmas", verdicts)


def cmd_theorem_b(args):
    X = _load(args.path)
    return _emit(args, "theorem-b", [manifold_mod.verify_theorem_b(X)])


def cmd_gen(args):
    spec = parse_generator_args(args.spec[0], args.spec[1:])
    X = generate(spec)
    if args.out:
        dump_path(X, args.out)
    else:
        sys.stdout.write(serialize_text(X))
    return 0


HANDLERS = {
    "validate": cmd_validate,
    "check": cmd_check,
    "sd": cmd_sd,
    "metric": cmd_metric,
    "cover": cmd_cover,
    "links": cmd_links,
    "lemmas": cmd_lemmas,
    "theorem-b": cmd_theorem_b,
    "gen": cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (CombCurvError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
