"""Command-line workbench: energies, differences, tables, search, certificates.

Graph selector syntax:
    C:<n>                cycle
    P:<n>                path
    L:<n>:<l>            lollipop (cycle of length l, pendant path, n total)
    CP:<n>:<l>:<a0,...>  cycle with pendant vertices per cycle position
    g6:<string>          graph6-encoded graph
    g6:-                 read graph6 strings from stdin, one per line

Exit codes: 0 success, 2 selector/argument parse error, 3 convergence
failure, 4 golden-table mismatch, 5 refuted certificate.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import certificate_to_json, run_claim_suite
from .charpoly import charpoly
from .closedforms import STANDARD_GRID, check_modulus_forms
from .coulson import energy_coulson, energy_diff_coulson
from .eigensolver import energy_eigensolver
from .enumeration import count_unicyclic, unicyclic_graphs
from .graphs import (
    Graph,
    GraphError,
    format_graph6,
    make_cycle,
    make_cycle_with_pendants,
    make_lollipop,
    make_path,
    parse_graph6,
)
from .roots import ConvergenceError, energy_of_poly
from .search import max_energy_search
from .tables import TOLERANCE, compute_table

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONVERGENCE = 3
EXIT_GOLDEN = 4
EXIT_REFUTED = 5


class SpecError(ValueError):
    pass


def parse_graph_spec(spec: str) -> Graph:
    """Turn a textual selector into a Graph; raises SpecError on bad input."""
    try:
        kind, _, rest = spec.partition(":")
        if kind == "C":
            return make_cycle(int(rest))
        if kind == "P":
            return make_path(int(rest))
        if kind == "L":
            n_str, _, l_str = rest.partition(":")
            return make_lollipop(int(n_str), int(l_str))
        if kind == "CP":
            n_str, l_str, counts = rest.split(":", 2)
            attachment = [int(c) for c in counts.split(",")] if counts else []
            return make_cycle_with_pendants(int(n_str), int(l_str), attachment)
        if kind == "g6":
            return parse_graph6(rest)
    except (ValueError, GraphError) as exc:
        raise SpecError("bad graph selector %r: %s" % (spec, exc)) from exc
    raise SpecError("unknown selector kind in %r" % spec)


def _expand_specs(spec: str) -> list[tuple[str, Graph]]:
    if spec == "g6:-":
        out = []
        for line in sys.stdin:
            line = line.strip()
            if line:
                out.append(("g6:" + line, parse_graph_spec("g6:" + line)))
        return out
    return [(spec, parse_graph_spec(spec))]


# ---------------------------------------------------------------------------
# Output formatting.
# ---------------------------------------------------------------------------


def _emit(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(_cell(row.get(c), full=True) for c in columns))
        return
    widths = {
        c: max(len(c), *(len(_cell(r.get(c))) for r in rows)) if rows else len(c)
        for c in columns
    }
    print("  ".join(c.ljust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(_cell(row.get(c)).ljust(widths[c]) for c in columns))


def _cell(value, full: bool = False) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value) if full else "%.5f" % value
    return str(value)


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def _cmd_energy(args) -> int:
    rows = []
    for label, g in _expand_specs(args.spec):
        row = {"graph": label, "n": g.n, "m": g.edge_count}
        if args.method in ("exact", "all"):
            e = energy_of_poly(charpoly(g), args.tol)
            row["exact"] = e.value
            row["exact_radius"] = e.radius
        if args.method in ("eig", "all"):
            e = energy_eigensolver(g, max(args.tol, 1e-8))
            row["eig"] = e.value
        if args.method in ("coulson", "all"):
            e = energy_coulson(g, args.tol)
            row["coulson"] = e.value
        if args.method == "all":
            row["max_cross_dev"] = max(
                abs(row["exact"] - row["eig"]), abs(row["exact"] - row["coulson"])
            )
        rows.append(row)
    columns = [c for c in (
        "graph", "n", "m", "exact", "exact_radius", "eig", "coulson", "max_cross_dev"
    ) if any(c in r for r in rows)]
    _emit(rows, columns, args.format)
    return EXIT_OK


def _cmd_diff(args) -> int:
    g1 = parse_graph_spec(args.spec1)
    g2 = parse_graph_spec(args.spec2)
    row = {"graph1": args.spec1, "graph2": args.spec2}
    if args.method in ("exact", "all"):
        e1 = energy_of_poly(charpoly(g1), args.tol / 2)
        e2 = energy_of_poly(charpoly(g2), args.tol / 2)
        row["exact"] = e1.value - e2.value
    if args.method in ("coulson", "all"):
        row["coulson"] = energy_diff_coulson(g1, g2, args.tol)
    _emit([row], list(row.keys()), args.format)
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = compute_table(args.table_id, args.tol)
    failures = 0
    out = []
    for r in rows:
        ok = r.deviation <= TOLERANCE
        failures += 0 if ok else 1
        rec = {"n": r.n, "t": r.t}
        if len(r.golden) == 1:
            rec.update(golden=r.golden[0], computed=r.computed[0])
        else:
            rec.update(
                golden_lollipop=r.golden[0],
                computed_lollipop=r.computed[0],
                golden_cycle=r.golden[1],
                computed_cycle=r.computed[1],
            )
        rec.update(deviation=r.deviation, ok=ok)
        out.append(rec)
    _emit(out, list(out[0].keys()), args.format)
    if failures:
        print("%d cell(s) deviate beyond %g" % (failures, TOLERANCE), file=sys.stderr)
        return EXIT_GOLDEN
    return EXIT_OK


def _cmd_search(args) -> int:
    ranked = max_energy_search(args.n, args.top, args.tol, args.jobs)
    print("winner: %s" % ranked[0].code)
    rows = [
        {
            "rank": r.rank,
            "code": str(r.code),
            "energy": r.energy.value,
            "radius": r.energy.radius,
            "tied": r.tied,
        }
        for r in ranked
    ]
    _emit(rows, ["rank", "code", "energy", "radius", "tied"], args.format)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.count_only:
        _emit(
            [{"n": args.n, "count": count_unicyclic(args.n)}],
            ["n", "count"],
            args.format,
        )
        return EXIT_OK
    if args.emit == "g6":
        for _, g in unicyclic_graphs(args.n):
            print(format_graph6(g))
        return EXIT_OK
    rows = [
        {"code": str(code), "cycle_len": code.cycle_len, "g6": format_graph6(g)}
        for code, g in unicyclic_graphs(args.n)
    ]
    _emit(rows, ["code", "cycle_len", "g6"], args.format)
    return EXIT_OK


def _cmd_certify(args) -> int:
    report = run_claim_suite()
    wanted = [
        r for r in report.results if args.claim in ("all", r.claim_id.split("/")[0])
    ]
    if not wanted:
        print("no claim matches %r" % args.claim, file=sys.stderr)
        return EXIT_PARSE
    rows = [
        {
            "claim": r.claim_id,
            "ok": r.ok,
            "evidence": r.evidence,
            "root_counts": ";".join("%s=%d" % rc for rc in r.root_counts),
            "grid_points": r.grid_points,
            "detail": r.detail,
        }
        for r in wanted
    ]
    _emit(rows, ["claim", "ok", "evidence", "root_counts", "grid_points", "detail"], args.format)
    if args.dump_certificates:
        for r in wanted:
            for cert in r.certificates:
                print(certificate_to_json(cert))
    if not all(r.ok for r in wanted):
        return EXIT_REFUTED
    return EXIT_OK


def _cmd_closed_form_check(args) -> int:
    grid = tuple(args.grid) if args.grid else STANDARD_GRID
    ts = [args.t] if args.t else None
    report = check_modulus_forms(args.n, grid)
    entries = report.entries
    if ts:
        entries = [e for e in entries if e.t in ts or e.t is None]
    rows = [
        {
            "family": e.family,
            "t": e.t if e.t is not None else 6,
            "x": e.x,
            "rel_dev": e.rel_dev,
        }
        for e in entries
    ]
    _emit(rows, ["family", "t", "x", "rel_dev"], args.format)
    worst = max(e.rel_dev for e in entries)
    print("max relative deviation: %.3e" % worst)
    return EXIT_OK if worst <= 1e-9 else EXIT_GOLDEN


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--tol", type=float, default=1e-7)

    parser = argparse.ArgumentParser(
        prog="ucenergy",
        description="Graph-energy workbench for unicyclic graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "energy", parents=[common], help="energy of one graph (or stdin batch)"
    )
    p.add_argument("spec")
    p.add_argument("--method", choices=("exact", "eig", "coulson", "all"), default="exact")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("diff", parents=[common], help="energy difference of two graphs")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.add_argument("--method", choices=("exact", "coulson", "all"), default="exact")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("table", parents=[common], help="recompute a golden reference table")
    p.add_argument("table_id", type=int, choices=(1, 2, 3))
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("search", parents=[common], help="exhaustive maximal-energy search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "enumerate", parents=[common], help="list unicyclic graphs up to isomorphism"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit", choices=("g6",))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "certify", parents=[common], help="run the inequality certificate suite"
    )
    p.add_argument("claim", nargs="?", default="all")
    p.add_argument("--dump-certificates", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser(
        "closed-form-check", parents=[common], help="modulus closed forms vs charpoly"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, action="append")
    p.add_argument("--grid", type=float, nargs="*")
    p.set_defaults(func=_cmd_closed_form_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except ConvergenceError as exc:
        print("convergence failure: %s" % exc, file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
