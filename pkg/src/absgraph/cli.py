"""Command-line front end.

Exit status: 0 success, 1 input error, 2 a theorem check failed,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .graph import (
    Graph, GraphFamily, GraphInputError, generate, parse_edge_list, parse_graph6,
    write_graph6,
)
from .qspr import PROPERTIES, QsprDataError, format_report_table, load_dataset, regression_report
from .spectral import (
    IndexKind, NumericError, WeightKind, build_weighted_matrix, distinct_eigenvalues,
    dump_matrix, eigenvalues_symmetric, graph_energy, spectral_radius, topological_index,
)
from .theorems import (
    SKIPPED, THEOREM_IDS, PreconditionError, applicable, check, run_exhaustive_suite,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_NUMERIC = 0, 1, 2, 3

FAMILY_ALIASES = {"complete": "complete", "path": "path", "cycle": "cycle",
                  "bipartite": "complete_bipartite", "star": "star", "empty": "empty"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def parse_family_spec(text: str) -> GraphFamily:
    """``kind[:p[,p]]``, e.g. ``complete:5``, ``bipartite:2,3``, ``star:6``."""
    kind, _, rest = text.strip().partition(":")
    if kind not in FAMILY_ALIASES:
        raise GraphInputError(f"unknown family {kind!r}; expected one of "
                              f"{'|'.join(FAMILY_ALIASES)}")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise GraphInputError(f"family parameters must be integers: {rest!r}") from None
    return GraphFamily(FAMILY_ALIASES[kind], params)


# ------------------------------------------------------------ formatting

def fmt_float(x: float):
    """Round to 12 significant digits; the JSON encoder then emits the
    shortest repr of that value."""
    if x is None or not math.isfinite(x):
        return None
    y = float(f"{x:.12g}")
    return 0.0 if y == 0 else y


def _clean(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def to_json(obj) -> str:
    return json.dumps(_clean(obj), indent=2, ensure_ascii=False) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# --------------------------------------------------------------- inputs

def _load_graph(args) -> Graph:
    if args.g6:
        return parse_graph6(args.g6)
    if args.edges:
        try:
            with open(args.edges, encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except OSError as exc:
            raise GraphInputError(f"cannot read edge list: {exc}") from None
    if args.family:
        return generate(parse_family_spec(args.family))
    raise GraphInputError("one of --g6, --edges or --family is required")


def _add_graph_source(p):
    p.add_argument("--g6", metavar="STR", help="graph6 string (takes precedence)")
    p.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then m lines 'u v'")
    p.add_argument("--family", metavar="SPEC", help="e.g. path:4, complete:5, bipartite:2,3")


def _add_format(p, default="json"):
    p.add_argument("--format", choices=("json", "csv", "text"), default=default)


MATRIX_CHOICES = {k.value: k for k in WeightKind}


def _spectrum_payload(g: Graph, kind: WeightKind) -> dict:
    s = eigenvalues_symmetric(build_weighted_matrix(g, kind))
    snap = 1e-12 * max(1.0, spectral_radius(s))
    values = [0.0 if abs(v) <= snap else v for v in s.values]
    return {"eigenvalues": values, "energy": graph_energy(s),
            "spectral_radius": spectral_radius(s), "distinct": distinct_eigenvalues(s)[0]}


# ---------------------------------------------------------------- verbs

def cmd_spectrum(args, out, err) -> int:
    g = _load_graph(args)
    kind = MATRIX_CHOICES[args.matrix]
    if args.dump_matrix:
        err.write(dump_matrix(build_weighted_matrix(g, kind)))
    payload = _spectrum_payload(g, kind)
    if args.format == "json":
        out.write(to_json(payload))
    elif args.format == "csv":
        out.write(_csv(enumerate(payload["eigenvalues"], 1), ("index", "eigenvalue")))
    else:
        out.write(f"matrix {args.matrix}, n={g.n}, m={g.m}\n")
        for i, v in enumerate(payload["eigenvalues"], 1):
            out.write(f"eta_{i} = {fmt_float(v)!r}\n")
        out.write(f"energy = {fmt_float(payload['energy'])!r}\n"
                  f"spectral radius = {fmt_float(payload['spectral_radius'])!r}\n"
                  f"distinct = {payload['distinct']}\n")
    return EXIT_OK


def cmd_energy(args, out, err) -> int:
    g = _load_graph(args)
    energy = _spectrum_payload(g, MATRIX_CHOICES[args.matrix])["energy"]
    if args.format == "json":
        out.write(to_json({"matrix": args.matrix, "energy": energy}))
    elif args.format == "csv":
        out.write(_csv([(args.matrix, energy)], ("matrix", "energy")))
    else:
        out.write(f"{args.matrix} energy = {fmt_float(energy)!r}\n")
    return EXIT_OK


def cmd_indices(args, out, err) -> int:
    g = _load_graph(args)
    values = {k.value: topological_index(g, k) for k in IndexKind}
    if args.format == "json":
        out.write(to_json(values))
    elif args.format == "csv":
        out.write(_csv(values.items(), ("index", "value")))
    else:
        for k, v in values.items():
            out.write(f"{k:<9} {fmt_float(v)!r}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    g = _load_graph(args)
    if args.theorem == "all":
        ids = [t for t in THEOREM_IDS if applicable(t, g)]
    else:
        if args.theorem not in THEOREM_IDS:
            raise GraphInputError(f"unknown theorem id {args.theorem!r}")
        ids = [args.theorem]
    reports = [check(t, g) for t in ids]
    failed = [r for r in reports if r.status != SKIPPED and not r.holds]
    g6 = write_graph6(g)
    doc = {"graph6": g6, "reports": [r.to_dict() for r in reports],
           "violations": [{"graph6": g6, "theorem": r.theorem_id, "lhs": r.lhs, "rhs": r.rhs}
                          for r in failed]}
    if args.format == "json":
        out.write(to_json(doc))
    elif args.format == "csv":
        out.write(_csv([(r.theorem_id, r.status, r.holds, r.lhs, r.rhs, r.equality_detected,
                         r.extremal_class_matched) for r in reports],
                       ("theorem", "status", "holds", "lhs", "rhs", "equality", "extremal")))
    else:
        for r in reports:
            flag = "skip" if r.status == SKIPPED else ("ok" if r.holds else "FAIL")
            eq = " equality" if r.equality_detected else ""
            out.write(f"{r.theorem_id:<20}{flag:<6}lhs={fmt_float(r.lhs)!r} "
                      f"rhs={fmt_float(r.rhs)!r}{eq}  {r.notes}\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_enumerate(args, out, err) -> int:
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise GraphInputError(f"unknown theorem id {args.theorem!r}")
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    if args.n_max == 7:
        err.write("warning: n-max 7 covers 2,097,152 edge masks (1,866,256 connected "
                  "graphs on 7 vertices); expect a run in the tens of minutes per job\n")
    try:
        result = run_exhaustive_suite(args.n_max, ids, jobs=args.jobs,
                                      allow_seven=args.n_max == 7)
    except ValueError as exc:
        raise GraphInputError(str(exc)) from None
    err.write(f"checked {result.graphs_checked} graphs\n")
    doc = result.to_dict()
    if args.format == "json":
        out.write(to_json(doc))
    elif args.format == "csv":
        out.write(_csv([(v["graph6"], v["theorem"], v["lhs"], v["rhs"], v["reason"])
                        for v in doc["violations"]],
                       ("graph6", "theorem", "lhs", "rhs", "reason")))
    else:
        out.write(f"graphs checked: {result.graphs_checked}\n"
                  f"violations: {len(result.violations)}\n"
                  f"equality witnesses: {len(result.equality_witnesses)}\n")
        for tid, count in doc["checks_run"].items():
            out.write(f"  {tid:<20}{count:>8} checked {doc['skipped'].get(tid, 0):>6} skipped\n")
    return EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_qspr(args, out, err) -> int:
    report = regression_report(load_dataset(args.dataset), args.property)
    if args.format == "json":
        out.write(to_json(report))
    elif args.format == "csv":
        out.write(_csv([(r["compound"], r["x"], r["y"], r["predicted"], r["residual"])
                        for r in report["rows"]],
                       ("compound", "x", "y", "predicted", "residual")))
    else:
        out.write(format_report_table(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="absgraph", description="ABS spectra, bounds and QSPR")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for name, func, help_ in (("spectrum", cmd_spectrum, "eigenvalues of a weighted matrix"),
                              ("energy", cmd_energy, "energy of a weighted matrix")):
        p = sub.add_parser(name, help=help_)
        _add_graph_source(p)
        p.add_argument("--matrix", choices=list(MATRIX_CHOICES), default="abs")
        _add_format(p)
        if name == "spectrum":
            p.add_argument("--dump-matrix", action="store_true",
                           help="write the matrix to stderr, row-major")
        p.set_defaults(func=func)

    p = sub.add_parser("indices", help="degree-based topological indices")
    _add_graph_source(p)
    _add_format(p)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("verify", help="check theorem statements on one graph")
    _add_graph_source(p)
    p.add_argument("--theorem", default="all", metavar="ID|all")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustive check over small connected graphs")
    p.add_argument("--n-max", type=int, default=6, metavar="N")
    p.add_argument("--theorem", default="all", metavar="ID|all")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("qspr", help="benzenoid regression on ABS energy")
    p.add_argument("--property", choices=PROPERTIES, default="bp")
    p.add_argument("--dataset", metavar="FILE", help="CSV with header compound,e_abs,bp,e_pi")
    _add_format(p)
    p.set_defaults(func=cmd_qspr)
    return parser


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise GraphInputError("--jobs must be at least 1")
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except (NumericError, ArithmeticError) as exc:
        err.write(f"numeric error: {exc}\n")
        return EXIT_NUMERIC
    except (GraphInputError, QsprDataError, PreconditionError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))
