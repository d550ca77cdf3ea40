"""Command-line front end.

Exit status: 0 when the requested computation succeeded (a negative verdict
or an obstruction is a valid answer), 1 when ``reproduce`` found a mismatch
against the stored expectations, 2 for usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_module
from .analysis import (
    CheckReport,
    hessian_conditions,
    hwc_certificate,
    is_harmonic,
    is_harmonic_morphism,
    is_holomorphic,
    is_orthogonal_multiplication,
)
from .exact import DimensionMismatch, render_scalar
from .expr import EvalDomainError, NotPolynomial, SmoothMap, render_expr
from .kaehler import search_points, span_report
from .lift import (
    LiftSplit,
    MixedPartialObstruction,
    NotPartialLinear,
    anti_lift,
    complete_lift_complex,
    complete_lift_real,
)
from .mapfile import MapSyntaxError, parse_map, parse_points
from .maps import ComplexPolyMap, RealPolyMap, ShapeError, real_identification
from .numeric import (
    InternalConsistencyError,
    SamplingError,
    numeric_check,
    numeric_complete_lift,
    sample_points,
)
from .calculus import jacobian
from .poly import ConsistencyError, render

SCHEMA_VERSION = 1


class CliError(Exception):
    """An input problem the user can fix; reported on stderr, exit 2."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphlift",
        description="exact complete lifts and harmonic-morphism certificates")
    parser.add_argument("--json", action="store_true",
                        help="emit a machine-readable report")
    commands = parser.add_subparsers(dest="command", required=True)

    lift = commands.add_parser("lift", help="compute a complete lift")
    group = lift.add_mutually_exclusive_group(required=True)
    group.add_argument("--real", action="store_true")
    group.add_argument("--complex", dest="complex_", action="store_true")
    lift.add_argument("file")

    check = commands.add_parser("check", help="run certificate checks")
    check.add_argument("file")
    check.add_argument("--harmonic", action="store_true")
    check.add_argument("--hwc", action="store_true")
    check.add_argument("--morphism", action="store_true")
    check.add_argument("--holomorphic", action="store_true")
    check.add_argument("--hessian-conditions", dest="hessian", action="store_true")
    check.add_argument("--orthogonal-multiplication", dest="orthmult",
                       action="store_true")
    check.add_argument("--blocks", default=None,
                       help="P,Q block sizes for --orthogonal-multiplication "
                            "(default: halves)")

    antilift = commands.add_parser("antilift",
                                   help="decide whether a map is a complete lift")
    antilift.add_argument("file")
    antilift.add_argument("--split", type=int, required=True,
                          help="base dimension m (map must have 2m variables)")

    kaehler = commands.add_parser("kaehler",
                                  help="isotropic-span criterion for maps to C")
    kaehler.add_argument("file")
    source = kaehler.add_mutually_exclusive_group(required=True)
    source.add_argument("--points", metavar="PTSFILE",
                        help="file with one complex point per line")
    source.add_argument("--search", action="store_true",
                        help="greedy deterministic point search")
    kaehler.add_argument("--budget", type=int, default=500)
    kaehler.add_argument("--seed", type=int, default=0)

    numeric = commands.add_parser("numeric-check",
                                  help="sampled float verification for smooth maps")
    numeric.add_argument("file")
    numeric.add_argument("--points", type=int, required=True)
    numeric.add_argument("--seed", type=int, required=True)
    numeric.add_argument("--tol", type=float, required=True)

    reproduce = commands.add_parser("reproduce",
                                    help="re-run stored example expectations")
    reproduce.add_argument("entry", nargs="?")
    reproduce.add_argument("--all", dest="all_", action="store_true")

    cat = commands.add_parser("catalog", help="list or dump example definitions")
    cat.add_argument("action", choices=["list", "dump"])
    cat.add_argument("entry", nargs="?")

    return parser


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _load_map(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            source = handle.read()
    except OSError as error:
        raise CliError(f"cannot read {path}: {error}") from error
    return parse_map(source)


def _require_real(parsed, notes: list):
    if isinstance(parsed, RealPolyMap):
        return parsed
    if isinstance(parsed, ComplexPolyMap):
        notes.append("complex map: checks run on its real identification")
        return real_identification(parsed)
    raise CliError("this command needs a polynomial map; "
                   "use numeric-check for smooth maps")


def _check_payload(report: CheckReport, names) -> dict:
    payload = {"name": report.check, "verdict": report.verdict}
    if report.dilation is not None:
        payload["dilation"] = render(report.dilation, names)
    if report.violation is not None:
        violation = report.violation
        payload["violation"] = {
            "kind": violation.kind,
            "components": [violation.component_k, violation.component_l],
            "residual": render(violation.residual, names),
        }
        if violation.entry is not None:
            payload["violation"]["entry"] = list(violation.entry)
    if report.notes:
        payload["notes"] = list(report.notes)
    return payload


def _print_check(payload: dict, out):
    verdict = "true" if payload["verdict"] else "false"
    print(f"{payload['name']}: {verdict}", file=out)
    if "dilation" in payload:
        print(f"  dilation^2 = {payload['dilation']}", file=out)
    if "violation" in payload:
        violation = payload["violation"]
        k, l = violation["components"]
        print(f"  violation [{violation['kind']}] at components ({k},{l}): "
              f"residual = {violation['residual']}", file=out)
    for note in payload.get("notes", ()):
        print(f"  note: {note}", file=out)


def _emit(args, payload: dict, out) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_lift(args, out) -> int:
    parsed = _load_map(args.file)
    notes: list[str] = []
    payload: dict = {"schema": SCHEMA_VERSION, "command": "lift"}

    if args.complex_:
        if not isinstance(parsed, ComplexPolyMap):
            raise CliError("--complex needs a polynomial map between complex spaces")
        lifted = complete_lift_complex(parsed)
        names = lifted.names()
        components = [render(c, names) for c in lifted.components]
        payload.update({
            "kind": "complex",
            "domain_dim": lifted.domain_dim,
            "codomain_dim": lifted.codomain_dim,
            "variables": list(names),
            "components": components,
        })
        if not args.json:
            print(f"complex complete lift: C^{parsed.domain_dim} -> "
                  f"C^{parsed.codomain_dim} lifts to C^{lifted.domain_dim} -> "
                  f"C^{lifted.codomain_dim}", file=out)
            for index, text in enumerate(components, start=1):
                print(f"  F{index} = {text}", file=out)
        _emit(args, payload, out)
        return 0

    if isinstance(parsed, SmoothMap):
        lifted = numeric_complete_lift(parsed)
        names = lifted.names()
        components = [render_expr(c, names) for c in lifted.components]
        payload.update({
            "kind": "smooth",
            "domain_dim": lifted.domain_dim,
            "components": components,
            "guards": [render_expr(g, names) for g in lifted.guards],
        })
        if not args.json:
            print(f"complete lift (symbolic): R^{parsed.domain_dim} -> "
                  f"R^{parsed.codomain_dim} lifts to R^{lifted.domain_dim} -> "
                  f"R^{lifted.codomain_dim}", file=out)
            for index, text in enumerate(components, start=1):
                print(f"  F{index} = {text}", file=out)
        _emit(args, payload, out)
        return 0

    base = _require_real(parsed, notes)
    lifted = complete_lift_real(base)
    names = lifted.names()
    components = [render(c, names) for c in lifted.components]
    matrix = jacobian(base)
    base_names = base.names()
    rows = [[render(matrix[i, j], base_names) for j in range(matrix.cols)]
            for i in range(matrix.rows)]
    payload.update({
        "kind": "real",
        "domain_dim": lifted.domain_dim,
        "codomain_dim": lifted.codomain_dim,
        "variables": list(names),
        "components": components,
        "coefficient_matrix": rows,
        "notes": notes,
    })
    if not args.json:
        for note in notes:
            print(f"note: {note}", file=out)
        print(f"real complete lift: R^{base.domain_dim} -> "
              f"R^{base.codomain_dim} lifts to R^{lifted.domain_dim} -> "
              f"R^{lifted.codomain_dim}", file=out)
        for index, text in enumerate(components, start=1):
            print(f"  F{index} = {text}", file=out)
        print("coefficient matrix M(x) with lift = M(x) * y:", file=out)
        for row in rows:
            print("  [" + ", ".join(row) + "]", file=out)
    _emit(args, payload, out)
    return 0


def _cmd_check(args, out) -> int:
    parsed = _load_map(args.file)
    if isinstance(parsed, SmoothMap):
        raise CliError("check works on exact polynomial maps; "
                       "use numeric-check for smooth maps")
    notes: list[str] = []
    requested = {
        "harmonic": args.harmonic,
        "hwc": args.hwc,
        "morphism": args.morphism,
        "holomorphic": args.holomorphic,
        "hessian": args.hessian,
        "orthmult": args.orthmult,
    }
    if not any(requested.values()):
        requested["harmonic"] = requested["hwc"] = requested["morphism"] = True
        if isinstance(parsed, ComplexPolyMap):
            requested["holomorphic"] = True

    reports = []
    if requested["holomorphic"]:
        if not isinstance(parsed, ComplexPolyMap):
            raise CliError("--holomorphic needs a map between complex spaces")
        reports.append(is_holomorphic(parsed))
    if any(requested[key] for key in ("harmonic", "hwc", "morphism",
                                      "hessian", "orthmult")):
        real_map = _require_real(parsed, notes)
        if requested["harmonic"]:
            reports.append(is_harmonic(real_map))
        if requested["hwc"]:
            reports.append(hwc_certificate(real_map))
        if requested["morphism"]:
            reports.append(is_harmonic_morphism(real_map))
        if requested["hessian"]:
            reports.append(hessian_conditions(real_map))
        if requested["orthmult"]:
            if args.blocks:
                try:
                    first, second = (int(x) for x in args.blocks.split(","))
                except ValueError as error:
                    raise CliError("--blocks expects two integers like 4,4") from error
            else:
                if real_map.domain_dim % 2:
                    raise CliError("--orthogonal-multiplication needs --blocks "
                                   "for odd-dimensional domains")
                first = second = real_map.domain_dim // 2
            reports.append(is_orthogonal_multiplication(real_map, first, second))
        names = real_map.names()
    else:
        names = parsed.names()

    payloads = [_check_payload(r, names if r.check != "holomorphic"
                               else parsed.names()) for r in reports]
    payload = {"schema": SCHEMA_VERSION, "command": "check",
               "checks": payloads, "notes": notes}
    if not args.json:
        for note in notes:
            print(f"note: {note}", file=out)
        for item in payloads:
            _print_check(item, out)
    _emit(args, payload, out)
    return 0


def _cmd_antilift(args, out) -> int:
    parsed = _load_map(args.file)
    notes: list[str] = []
    real_map = _require_real(parsed, notes)
    if real_map.domain_dim != 2 * args.split:
        raise CliError(f"--split {args.split} needs a map with "
                       f"{2 * args.split} variables; this one has "
                       f"{real_map.domain_dim}")
    outcome = anti_lift(real_map, LiftSplit(real_map.domain_dim, args.split))
    payload: dict = {"schema": SCHEMA_VERSION, "command": "antilift",
                     "split": args.split, "notes": notes}
    if isinstance(outcome, RealPolyMap):
        components = [render(c) for c in outcome.components]
        payload.update({"result": "complete-lift", "base_components": components})
        if not args.json:
            print("the map is a complete lift; base map (zero constants):",
                  file=out)
            for index, text in enumerate(components, start=1):
                print(f"  f{index} = {text}", file=out)
    elif isinstance(outcome, MixedPartialObstruction):
        payload.update({
            "result": "mixed-partial-obstruction",
            "component": outcome.component,
            "variables": [outcome.var_j, outcome.var_k],
            "values": [render(outcome.value_jk), render(outcome.value_kj)],
        })
        if not args.json:
            print("not a complete lift: mixed-partial obstruction", file=out)
            print(f"  {outcome.describe()}", file=out)
            print(f"  {render(outcome.value_jk)} != {render(outcome.value_kj)}",
                  file=out)
    else:
        assert isinstance(outcome, NotPartialLinear)
        payload.update({
            "result": "not-partial-linear",
            "component": outcome.component,
            "monomial": list(outcome.monomial),
            "fiber_degree": outcome.fiber_degree,
        })
        if not args.json:
            print("not a complete lift: not linear in the fiber block", file=out)
            print(f"  {outcome.describe()}", file=out)
    _emit(args, payload, out)
    return 0


def _kaehler_input(parsed, notes: list) -> RealPolyMap:
    if isinstance(parsed, ComplexPolyMap):
        if parsed.codomain_dim != 1:
            raise CliError("kaehler needs a map to C (one complex component)")
        notes.append("complex map: using its real identification")
        return real_identification(parsed)
    if isinstance(parsed, RealPolyMap):
        if parsed.codomain_dim != 2 or parsed.domain_dim % 2:
            raise CliError("kaehler needs a map R^{2m} -> R^2 read as C-valued")
        return parsed
    raise CliError("kaehler needs a polynomial map")


def _cmd_kaehler(args, out) -> int:
    parsed = _load_map(args.file)
    notes: list[str] = []
    real_map = _kaehler_input(parsed, notes)
    m = real_map.domain_dim // 2
    if args.points:
        try:
            with open(args.points, "r", encoding="utf-8") as handle:
                points = parse_points(handle.read(), m)
        except OSError as error:
            raise CliError(f"cannot read {args.points}: {error}") from error
        report = span_report(real_map, points)
    else:
        report = search_points(real_map, args.budget, args.seed)
    gradients = [[render_scalar(x) for x in g] for g in report.gradients]
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "kaehler",
        "m": m,
        "points": [[render_scalar(x) for x in p] for p in report.sample_points],
        "gradients": gradients,
        "rank": report.rank,
        "isotropy_ok": report.isotropy_ok,
        "pairwise_orthogonal": report.pairwise_orthogonal,
        "jacobian_ranks": list(report.jacobian_ranks),
        "verdict": report.verdict,
        "notes": notes + list(report.notes),
    }
    if not args.json:
        for note in notes:
            print(f"note: {note}", file=out)
        print(f"gradient span criterion with m = {m}:", file=out)
        for point, gradient in zip(payload["points"], gradients):
            print(f"  point ({', '.join(point)})", file=out)
            print(f"    gradient ({', '.join(gradient)})", file=out)
        print(f"rank = {report.rank}; every gradient isotropic: "
              f"{report.isotropy_ok}; pairwise orthogonal: "
              f"{report.pairwise_orthogonal}", file=out)
        print(f"real Jacobian ranks at the points: "
              f"{list(report.jacobian_ranks)}", file=out)
        print(f"verdict: {report.verdict}", file=out)
        for note in report.notes:
            print(f"  note: {note}", file=out)
    _emit(args, payload, out)
    return 0


def _cmd_numeric(args, out) -> int:
    parsed = _load_map(args.file)
    if isinstance(parsed, (RealPolyMap, ComplexPolyMap)):
        raise CliError("numeric-check is for smooth maps; "
                       "use check for exact polynomial maps")
    points = sample_points(parsed, args.points, args.seed, (-2.0, 2.0))
    report = numeric_check(parsed, points, args.tol)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "numeric-check",
        "points": args.points,
        "seed": args.seed,
        "tolerance": args.tol,
        "laplacian_residuals": list(report.laplacian_residuals),
        "conformality_residual": report.conformality_residual,
        "verdict": "pass" if report.verdict else "fail",
        "witness_point": list(report.witness_point) if report.witness_point else None,
        "notes": list(report.notes),
    }
    if not args.json:
        print(f"numeric check at {len(points)} sampled points "
              f"(seed {args.seed}, tolerance {args.tol:g}):", file=out)
        residuals = ", ".join(f"{r:.3e}" for r in report.laplacian_residuals)
        print(f"  max |laplacian| per component: {residuals}", file=out)
        print(f"  max conformality residual: "
              f"{report.conformality_residual:.3e}", file=out)
        print(f"  verdict: {payload['verdict']}", file=out)
        if report.witness_point is not None:
            witness = ", ".join(f"{x:.6g}" for x in report.witness_point)
            print(f"  witness point: ({witness})", file=out)
        for note in report.notes:
            print(f"  note: {note}", file=out)
    _emit(args, payload, out)
    return 0


def _cmd_reproduce(args, out) -> int:
    if args.all_ == (args.entry is not None):
        raise CliError("reproduce needs an entry id or --all")
    ids = catalog_module.entry_ids() if args.all_ else [args.entry]
    entries_payload = []
    all_ok = True
    for entry_id in ids:
        report = catalog_module.run_entry(entry_id)
        all_ok = all_ok and report.ok
        checks = []
        for result in report.results:
            checks.append({
                "check": result.check,
                "expected": _jsonable(result.expected),
                "actual": _jsonable(result.actual),
                "ok": result.ok,
                "detail": result.detail,
            })
        entries_payload.append({
            "id": entry_id,
            "ok": report.ok,
            "checks": checks,
            "notes": list(report.notes),
        })
        if not args.json:
            status = "ok" if report.ok else "MISMATCH"
            print(f"[{status}] {entry_id}", file=out)
            for result in report.results:
                marker = "ok" if result.ok else "MISMATCH"
                line = (f"    {result.check}: expected {result.expected!r}, "
                        f"got {result.actual!r} [{marker}]")
                if result.check == "kaehler-gradients":
                    line = (f"    {result.check}: "
                            f"{'match' if result.ok else 'MISMATCH'} "
                            f"({len(result.actual)} gradients)")
                    print(line, file=out)
                    for gradient in result.actual:
                        print(f"      ({', '.join(gradient)})", file=out)
                    continue
                print(line, file=out)
                if result.detail:
                    print(f"        {result.detail}", file=out)
            for note in report.notes:
                print(f"    note: {note}", file=out)
    payload = {"schema": SCHEMA_VERSION, "command": "reproduce",
               "entries": entries_payload, "ok": all_ok}
    if not args.json:
        print("all expectations matched" if all_ok
              else "some expectations did not match", file=out)
    _emit(args, payload, out)
    return 0 if all_ok else 1


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _cmd_catalog(args, out) -> int:
    if args.action == "list":
        entries = [{"id": e.entry_id, "title": e.title, "kind": e.kind,
                    "provenance": e.provenance}
                   for e in (catalog_module.lookup(i)
                             for i in catalog_module.entry_ids())]
        if not args.json:
            for entry in entries:
                print(f"{entry['id']:36} {entry['kind']:12} {entry['title']}",
                      file=out)
        _emit(args, {"schema": SCHEMA_VERSION, "command": "catalog",
                     "entries": entries}, out)
        return 0
    if not args.entry:
        raise CliError("catalog dump needs an entry id")
    entry = catalog_module.lookup(args.entry)
    if not args.json:
        print(entry.definition, file=out)
    _emit(args, {"schema": SCHEMA_VERSION, "command": "catalog",
                 "id": entry.entry_id, "definition": entry.definition}, out)
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

_HANDLERS = {
    "lift": _cmd_lift,
    "check": _cmd_check,
    "antilift": _cmd_antilift,
    "kaehler": _cmd_kaehler,
    "numeric-check": _cmd_numeric,
    "reproduce": _cmd_reproduce,
    "catalog": _cmd_catalog,
}


def cli_main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return 2 if error.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args, out)
    except (CliError, MapSyntaxError, catalog_module.UnknownEntry,
            DimensionMismatch, ShapeError, ConsistencyError, SamplingError,
            InternalConsistencyError, EvalDomainError, NotPolynomial) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
