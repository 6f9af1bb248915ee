"""Command-line front end.

Exit codes: 0 success, 1 failed claims (``reproduce``), 2 invalid input,
3 automorphism search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arith
from .graphcore.automorphism import DEFAULT_BUDGET
from .graphcore import (
    SearchBudgetExceeded,
    automorphism_order,
    connected_components,
    degree_histogram,
    intersection_graph,
    maximal_cliques,
    spectrum,
    srg_params,
)
from .pauli import DEFAULT_VERTEX_CAP, DimensionSpec, build_pauli_graph, pauli_graph_of, read_observables
from .polar import build_polar_space, find_spreads, generators, polar_pauli_crosscheck, puncture_point

SCHEMA = 1

EXIT_OK, EXIT_CLAIMS, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return a, b


def _graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cliques", action="store_true", help="enumerate maximal cliques")
    p.add_argument("--spectrum", action="store_true", help="adjacency spectrum of the Pauli graph")
    p.add_argument("--aut", action="store_true", help="automorphism group order")
    p.add_argument("--intersect", type=int, action="append", metavar="K",
                   help="k-intersection graph of the cliques (repeatable; 0 is the dual graph)")
    p.add_argument("--puncture", metavar="LABEL|INDEX",
                   help="drop an observable and every clique through it before --intersect")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--dot", type=Path, metavar="FILE", help="write the Pauli graph as DOT")
    p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="automorphism search node budget")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pauli-geometry", description="Pauli graphs, their cliques and polar spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("arith", help="sigma/psi/phi/J2 table")
    p.add_argument("--range", dest="span", type=_range, required=True, metavar="A..B")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("robin", help="Robin delta signs for 3 <= q <= Q")
    p.add_argument("--max", dest="top", type=int, required=True, metavar="Q")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("psicrit", help="psi-primorial delta signs for 2 <= k <= K")
    p.add_argument("--max", dest="top", type=int, required=True, metavar="K")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("single", help="a single q-dit")
    p.add_argument("q", type=int)
    _graph_flags(p)

    p = sub.add_parser("multi", help="n p-dits")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    _graph_flags(p)

    p = sub.add_parser("mixture", help="a mixture such as 2x2x3 (factor order kept)")
    p.add_argument("dims")
    _graph_flags(p)

    p = sub.add_parser("observables", help="Pauli graph of observables read from a file")
    p.add_argument("file", type=Path)
    p.add_argument("--dims", help="dimensions, needed for exponent-form lines")
    _graph_flags(p)

    p = sub.add_parser("polar", help="the symplectic polar space W(2n-1, p)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--spreads", type=int, metavar="N", help="search for up to N spreads")
    p.add_argument("--crosscheck", action="store_true", help="compare with the n p-dit Pauli graph")
    _graph_flags(p)

    p = sub.add_parser("reproduce", help="check every recorded claim")
    p.add_argument("--only", action="append", metavar="ID", help="restrict to these claim ids (repeatable)")
    p.add_argument("--json", action="store_true")
    return parser


def _spec_json(g) -> list[dict]:
    return spectrum(g).to_json()


def _hist(g) -> dict[str, int]:
    return {str(k): v for k, v in degree_histogram(g).items()}


def _aut(g, budget) -> dict:
    res = automorphism_order(g, budget=budget)
    return {"order": res.order, "generators": res.generator_count, "orbits": len(res.orbits)}


def _resolve_vertex(g, token: str) -> int:
    if token.isdigit():
        v = int(token)
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
        return v
    try:
        return g.index(token)
    except (KeyError, ValueError):
        raise ValueError(f"no observable labelled {token!r}") from None


def analyse(g, args, report: dict) -> None:
    """Fill ``report`` with the graph analyses requested by the flags."""
    report["observables"] = g.n
    report["edges"] = g.edge_count()
    report["degree_histogram"] = _hist(g)
    if args.spectrum:
        report["spectrum"] = _spec_json(g)
        srg = srg_params(g)
        report["srg"] = list(srg) if srg else None
    if args.aut:
        report["automorphisms"] = _aut(g, args.budget)
    if args.dot:
        args.dot.write_text(g.to_dot(), encoding="utf-8")
        report["dot"] = str(args.dot)
    need_cliques = args.cliques or args.intersect or args.puncture is not None
    if not need_cliques:
        return
    family = maximal_cliques(g)
    report["cliques"] = {
        "count": len(family),
        "sizes": {str(k): v for k, v in family.sizes().items()},
        "members": [list(c) for c in family.labels()],
    }
    if args.puncture is not None:
        u = _resolve_vertex(g, args.puncture)
        _, family = puncture_point(g, family, u)
        report["puncture"] = {"removed": g.labels[u], "cliques_left": len(family)}
    for k in args.intersect or []:
        h = intersection_graph(family, k)
        comps = connected_components(h)
        entry = {
            "k": k,
            "vertices": h.n,
            "edges": h.edge_count(),
            "degree_histogram": _hist(h),
            "spectrum": _spec_json(h),
            "components": [len(c) for c in comps],
        }
        if args.aut:
            entry["automorphisms"] = _aut(h, args.budget)
        report.setdefault("intersections", []).append(entry)


def _fmt_spec(entries: list[dict]) -> str:
    return "{" + ", ".join(f"{e['value']}^{e['multiplicity']}" for e in entries) + "}"


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in ("schema", "command"):
            continue
        if key == "spectrum":
            value = _fmt_spec(value)
        elif key == "cliques":
            value = f"{value['count']} (sizes {value['sizes']})"
        elif key == "intersections":
            for e in value:
                lines.append(
                    f"k={e['k']}: {e['vertices']} vertices, {e['edges']} edges, "
                    f"degrees {e['degree_histogram']}, spectrum {_fmt_spec(e['spectrum'])}, "
                    f"components {e['components']}"
                    + (f", |Aut| {e['automorphisms']['order']}" if "automorphisms" in e else "")
                )
            continue
        elif key == "automorphisms":
            value = value["order"]
        elif key == "claims":
            for c in value:
                status = "PASS" if c["passed"] else "FAIL"
                lines.append(f"{status} [{c['criterion']:>2}] {c['id']}: computed={_compact(c['computed'])} "
                             f"expected={_compact(c['expected'])}")
            continue
        elif key == "table":
            lines.append("n\tsigma\tpsi\tphi\tJ2")
            lines.extend("\t".join(str(row[k]) for k in ("n", "sigma", "psi", "phi", "J2")) for row in value)
            continue
        lines.append(f"{key}: {value if not isinstance(value, (dict, list)) else _compact(value)}")
    return "\n".join(lines)


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


def _cmd_arith(args) -> dict:
    a, b = args.span
    rows = []
    for n in range(a, b + 1):
        f, j = arith.phi_and_jordan2(n)
        rows.append({"n": n, "sigma": arith.sigma(n), "psi": arith.psi(n), "phi": f, "J2": j})
    return {"range": [a, b], "table": rows}


def _cmd_robin(args) -> dict:
    if args.top < 3:
        raise ValueError("Q must be at least 3")
    positive = [q for q in range(3, args.top + 1) if arith.robin_delta(q).sign == "positive"]
    return {
        "max": args.top,
        "checked": args.top - 2,
        "positive": positive,
        "largest_positive": max(positive) if positive else None,
        "negative_from": (max(positive) + 1) if positive else 3,
    }


def _cmd_psicrit(args) -> dict:
    if args.top < 2:
        raise ValueError("K must be at least 2")
    signs = {k: arith.psi_primorial_delta(k).sign for k in range(2, args.top + 1)}
    nonpositive = [k for k, s in signs.items() if s != "positive"]
    return {
        "max": args.top,
        "checked": len(signs),
        "not_positive": nonpositive,
        "positive_from": (max(nonpositive) + 1) if nonpositive else 2,
    }


def _cmd_system(args) -> dict:
    if args.command == "single":
        dims = DimensionSpec((args.q,))
    elif args.command == "multi":
        if args.n < 1:
            raise ValueError("n must be at least 1")
        dims = DimensionSpec((args.p,) * args.n)
    elif args.command == "mixture":
        dims = DimensionSpec.parse(args.dims)
    else:
        obs = read_observables(args.file, args.dims)
        report = {"dims": str(obs.dims), "file": str(args.file)}
        analyse(pauli_graph_of(obs), args, report)
        return report
    report = {"dims": str(dims)}
    analyse(build_pauli_graph(dims, vertex_cap=args.vertex_cap), args, report)
    return report


def _cmd_polar(args) -> dict:
    space = build_polar_space(args.p, args.n)
    gs = generators(space)
    report: dict = {
        "p": args.p,
        "n": args.n,
        "points": len(space.points),
        "generators": len(gs),
        "generator_points": len(gs.generators[0]),
        "generator_vectors": gs.vector_count(),
    }
    if args.spreads:
        found = find_spreads(gs, limit=args.spreads)
        report["spreads"] = {"found": len(found), "limit": args.spreads,
                             "sizes": sorted({len(s) for s in found}),
                             "first": list(found[0].members) if found else None}
    if args.crosscheck:
        report["crosscheck"] = polar_pauli_crosscheck(args.p, args.n)
    g = space.collinearity_graph()
    analyse(g, args, report)
    report["points"] = report.pop("observables")
    return report


def _cmd_reproduce(args) -> dict:
    from .claims import reproduce_paper

    return reproduce_paper(ids=args.only)


COMMANDS = {
    "arith": _cmd_arith,
    "robin": _cmd_robin,
    "psicrit": _cmd_psicrit,
    "single": _cmd_system,
    "multi": _cmd_system,
    "mixture": _cmd_system,
    "observables": _cmd_system,
    "polar": _cmd_polar,
    "reproduce": _cmd_reproduce,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        body = COMMANDS[args.command](args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = {"schema": SCHEMA, "command": [args.command, *(argv if argv is not None else sys.argv[1:])[1:]]}
    report.update({k: v for k, v in body.items() if k != "schema" and k != "command"})
    if args.json:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(render_text(report) + "\n")
    if args.command == "reproduce" and report["failed"]:
        return EXIT_CLAIMS
    return EXIT_OK


def main() -> None:
    sys.exit(run())
