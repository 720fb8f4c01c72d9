"""Command-line front end.

Subcommands: ``atlas``, ``build``, ``check``, ``solve``, ``certify``,
``sample``, ``export``.  Results go to stdout (JSON unless asked
otherwise); progress and diagnostics go to stderr.  JSON output is
byte-identical across identical invocations: volatile quantities (wall
time) never appear in it, only deterministic ones (node counts).

Exit codes: 0 success; 2 parse/input error; 3 precondition violation;
4 budget exhausted; 5 a claimed fact was refuted by a search witness.

Budgets default to 1e8 nodes / 600 s and can be overridden per invocation
(``--budget-nodes``, ``--budget-seconds``) or via the environment
variables ``LAMBDAPACK_BUDGET_NODES`` / ``LAMBDAPACK_BUDGET_SECONDS``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certify as cert_mod
from . import dsl, io as gio
from .constructions import ATLAS_NAMES, ConstructionError, atlas
from .graph import (
    Graph,
    GraphError,
    components,
    connectivity_at_least,
    degree_profile,
    is_bipartite,
    is_cubic,
)
from .packing import (
    Budget,
    Mode,
    PackingError,
    PackingProblem,
    solve,
)
from .pipeline import find_seams
from .planarity import is_planar
from .sampling import sample_cubic

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_REFUTED = 5


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _budget(args: argparse.Namespace) -> Budget:
    nodes = args.budget_nodes or int(
        os.environ.get("LAMBDAPACK_BUDGET_NODES", 100_000_000)
    )
    seconds = args.budget_seconds or float(
        os.environ.get("LAMBDAPACK_BUDGET_SECONDS", 600.0)
    )
    return Budget(max_nodes=nodes, max_seconds=seconds)


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [s for s in ("input", "expr", "script") if getattr(args, s, None)]
    if len(sources) != 1:
        raise _CliError(
            "give exactly one of --input, --expr, --script", EXIT_PARSE
        )
    try:
        if args.input:
            text = Path(args.input).read_text()
            if args.input.endswith(".dot"):
                return gio.from_dot(text)
            return gio.from_json(text)
        if args.expr:
            return dsl.build(args.expr)
        records = dsl.run_script(Path(args.script).read_text())
        if not records:
            raise _CliError("script is empty", EXIT_PARSE)
        if getattr(args, "name", None):
            for rec in records:
                if rec.name == args.name:
                    return rec.graph
            raise _CliError(f"script binds no name {args.name!r}", EXIT_PARSE)
        return records[-1].graph
    except OSError as exc:
        raise _CliError(str(exc), EXIT_PARSE) from exc
    except (dsl.ParseError, GraphError) as exc:
        raise _CliError(str(exc), EXIT_PARSE) from exc


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_text(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return gio.to_json(g)
    if fmt == "dot":
        return gio.to_dot(g)
    raise _CliError(f"unknown format {fmt!r}", EXIT_PARSE)


def _parse_edge(g: Graph, spec: str) -> tuple[int, int]:
    """An edge given as 'u,v' (ids) or 'label-label'."""
    try:
        if "," in spec:
            u, v = (int(part) for part in spec.split(",", 1))
            return u, v
        lu, lv = spec.split("-", 1)
        return g.vertex_by_label(lu), g.vertex_by_label(lv)
    except (ValueError, GraphError) as exc:
        raise _CliError(f"bad edge {spec!r}: {exc}", EXIT_PARSE) from exc


def _parse_vertex(g: Graph, spec: str) -> int:
    try:
        return int(spec)
    except ValueError:
        pass
    try:
        return g.vertex_by_label(spec)
    except GraphError as exc:
        raise _CliError(f"bad vertex {spec!r}: {exc}", EXIT_PARSE) from exc


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------


def _cmd_atlas(args: argparse.Namespace) -> int:
    rows = []
    for name in ATLAS_NAMES:
        g = atlas(name)
        rows.append({"name": name, "vertices": g.n, "edges": g.m})
    if args.format == "json":
        _emit(args, json.dumps(rows, sort_keys=True, indent=2) + "\n")
    else:
        for row in rows:
            _emit(
                args,
                f"{row['name']:4s} vertices={row['vertices']:3d} edges={row['edges']:3d}\n",
            )
    return EXIT_OK


def _cmd_build(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _emit(args, _graph_text(g, args.format))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    report = _property_report(g)
    if args.format == "json":
        _emit(args, json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        lines = [
            f"vertices: {report['vertices']}  edges: {report['edges']}",
            f"components: {report['components']}",
            f"degrees: min={report['minDegree']} max={report['maxDegree']}",
            f"cubic: {report['cubic']}",
            f"bipartite: {report['bipartite']}",
            f"planar: {report['planar']}",
        ]
        for k in (1, 2, 3):
            key = f"connectivityAtLeast{k}"
            if key in report:
                lines.append(f"{k}-connected: {report[key]}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _property_report(g: Graph) -> dict:
    prof = degree_profile(g)
    bip, coloring = is_bipartite(g)
    planar = is_planar(g)
    report = {
        "vertices": g.n,
        "edges": g.m,
        "components": len(components(g)),
        "minDegree": prof.min_degree,
        "maxDegree": prof.max_degree,
        "cubic": is_cubic(g),
        "bipartite": bip,
        "planar": planar.planar,
    }
    if coloring is not None:
        report["coloring"] = list(coloring)
    if planar.rotation is not None:
        report["rotation"] = [list(ring) for ring in planar.rotation]
    if planar.obstruction is not None:
        report["obstruction"] = sorted(list(e) for e in planar.obstruction)
    for k in (1, 2, 3):
        if k == 3 and g.n < 4:
            continue
        ok, sep = connectivity_at_least(g, k)
        report[f"connectivityAtLeast{k}"] = ok
        if sep is not None:
            report[f"separator{k}"] = sorted(sep)
    return report


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.problem:
        if any(getattr(args, s, None) for s in ("input", "expr", "script")):
            raise _CliError("--problem replaces --input/--expr/--script", EXIT_PARSE)
        try:
            base = gio.problem_from_json(Path(args.problem).read_text())
        except OSError as exc:
            raise _CliError(str(exc), EXIT_PARSE) from exc
        except PackingError as exc:
            raise _CliError(str(exc), EXIT_PRECONDITION) from exc
        except GraphError as exc:
            raise _CliError(str(exc), EXIT_PARSE) from exc
        g = base.graph
    else:
        base = None
        g = _load_graph(args)
    if args.factor or args.max:
        mode = Mode.FACTOR if args.factor else Mode.MAX
    else:
        mode = base.mode if base else Mode.MAX
    try:
        problem = PackingProblem(
            g,
            mode,
            deleted_vertices=(base.deleted_vertices if base else frozenset())
            | frozenset(_parse_vertex(g, s) for s in args.delete_vertex),
            deleted_edges=(base.deleted_edges if base else frozenset())
            | frozenset(_norm(_parse_edge(g, s)) for s in args.delete_edge),
            forced_edges=(base.forced_edges if base else frozenset())
            | frozenset(_norm(_parse_edge(g, s)) for s in args.force_edge),
            forbidden_edges=(base.forbidden_edges if base else frozenset())
            | frozenset(_norm(_parse_edge(g, s)) for s in args.avoid_edge),
        )
        seams = find_seams(g) if args.seams == "auto" else ()
        result = solve(problem, _budget(args), seams=seams, target=args.target)
    except (PackingError, GraphError) as exc:
        raise _CliError(str(exc), EXIT_PRECONDITION) from exc
    payload = {
        "verdict": result.verdict,
        "value": result.value,
        "paths": [list(p.vertices) for p in result.paths] if result.paths else None,
        "nodes": result.stats.nodes,
        "prunes": dict(sorted(result.stats.prunes.items())),
    }
    print(f"explored {result.stats.nodes} nodes", file=sys.stderr)
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_BUDGET if result.verdict == "INDETERMINATE" else EXIT_OK


def _norm(e: tuple[int, int]) -> tuple[int, int]:
    return e if e[0] < e[1] else (e[1], e[0])


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.pipeline == "default":
        script = None
    else:
        try:
            script = Path(args.pipeline).read_text()
        except OSError as exc:
            raise _CliError(str(exc), EXIT_PARSE) from exc
    try:
        if script is None:
            certificate = cert_mod.replay_pipeline(
                base_budget=_budget(args), deep=args.deep
            )
        else:
            certificate = cert_mod.replay_pipeline(
                script, base_budget=_budget(args), deep=args.deep
            )
    except cert_mod.ReplayError as exc:
        cause = exc.__cause__
        code = EXIT_REFUTED if isinstance(cause, cert_mod.FactRefuted) else EXIT_BUDGET
        print(f"replay aborted: {exc}", file=sys.stderr)
        return code
    except dsl.ParseError as exc:
        raise _CliError(str(exc), EXIT_PARSE) from exc
    problems = cert_mod.check_certificate_detailed(certificate)
    if problems:
        for p in problems:
            print(f"self-check failed: {p}", file=sys.stderr)
        return EXIT_REFUTED
    for fact in certificate.final_facts:
        name = certificate.graph_names.get(fact.graph_hash, fact.graph_hash[:12])
        print(f"verified: {fact.kind} on {name} (n={fact.n})", file=sys.stderr)
    _emit(args, cert_mod.certificate_to_json(certificate))
    return EXIT_OK


def _cmd_checkcert(args: argparse.Namespace) -> int:
    try:
        text = Path(args.certificate).read_text()
    except OSError as exc:
        raise _CliError(str(exc), EXIT_PARSE) from exc
    try:
        problems = cert_mod.check_certificate_detailed(text, strict=args.strict)
    except (cert_mod.CertificateError, json.JSONDecodeError, GraphError) as exc:
        raise _CliError(f"malformed certificate: {exc}", EXIT_PARSE) from exc
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_REFUTED
    print("certificate valid", file=sys.stderr)
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.n % 2 != 0 or args.n < 4:
        raise _CliError("cubic sampling needs even n >= 4", EXIT_PRECONDITION)
    results = []
    violations = 0
    for i in range(args.count):
        g = sample_cubic(args.n, args.seed + i)
        row: dict = {"seed": args.seed + i, "vertices": g.n, "edges": g.m}
        if args.test_bound:
            need = -(-g.n // 4)  # ceil(n/4)
            res = solve(
                PackingProblem(g, Mode.MAX), _budget(args), target=need
            )
            row["bound"] = need
            row["satisfied"] = res.verdict == "SAT"
            if res.verdict != "SAT":
                violations += 1
        results.append(row)
    payload = {
        "n": args.n,
        "count": args.count,
        "baseSeed": args.seed,
        "violations": violations,
        "samples": results,
    }
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_REFUTED if violations else EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _emit(args, _graph_text(g, args.to))
    return EXIT_OK


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------


def _add_graph_source(p: argparse.ArgumentParser, with_name: bool = True) -> None:
    p.add_argument("--input", help="graph file (.json or .dot)")
    p.add_argument("--expr", help="inline construction expression")
    p.add_argument("--script", help="construction script file")
    if with_name:
        p.add_argument("--name", help="binding to select from a script")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambdapack",
        description="Exact 3-vertex-path packing, graph construction, certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atlas", help="list the named base graphs")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_atlas)

    p = sub.add_parser("build", help="evaluate a construction and export it")
    _add_graph_source(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("check", help="structural property report")
    _add_graph_source(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="run the exact packing solver")
    _add_graph_source(p)
    p.add_argument("--problem", help="packing-problem JSON file (graph embedded)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--factor", action="store_true", help="decide factor existence")
    mode.add_argument("--max", action="store_true", help="maximize (default)")
    p.add_argument("--target", type=int, default=None,
                   help="look only for a packing of at least this size")
    p.add_argument("--force-edge", action="append", default=[], metavar="E",
                   help="edge that must lie on a path ('u,v' ids or 'x-y' labels)")
    p.add_argument("--avoid-edge", action="append", default=[], metavar="E")
    p.add_argument("--delete-edge", action="append", default=[], metavar="E")
    p.add_argument("--delete-vertex", action="append", default=[], metavar="V")
    p.add_argument("--seams", choices=("auto", "off"), default="auto",
                   help="derive matching-cut annotations from labels (default auto)")
    _add_budget(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("certify", help="replay a pipeline into a certificate")
    p.add_argument("--pipeline", default="default",
                   help="'default' or a construction script file")
    p.add_argument("--deep", action="store_true",
                   help="base-verify every fact regardless of size")
    _add_budget(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("check-cert", help="validate a certificate file")
    p.add_argument("certificate")
    p.add_argument("--strict", action="store_true", help="re-run base searches")
    p.set_defaults(func=_cmd_checkcert)

    p = sub.add_parser("sample", help="random cubic graphs, optional bound test")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--test-bound", action="store_true",
                   help="check each sample packs at least ceil(n/4) paths")
    _add_budget(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("export", help="convert between graph formats")
    _add_graph_source(p)
    p.add_argument("--to", choices=("json", "dot"), required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (dsl.ParseError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConstructionError, PackingError, cert_mod.CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except cert_mod.FactRefuted as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return EXIT_REFUTED


if __name__ == "__main__":
    sys.exit(main())
