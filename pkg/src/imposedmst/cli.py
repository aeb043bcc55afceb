"""Command-line front end.

    imposedmst mst    --input g.txt
    imposedmst impose --input g.txt --impose 0-3,#4
    imposedmst bound  --input g.txt --impose 0-3,0-2 --format json
    imposedmst verify [--input g.txt] [--random N M K] [--seed S]

Exit codes: 0 success, 1 infeasible, 2 usage/parse/budget error, 3 property failure.
Errors go to stderr as ``error:<kind>: message``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Optional

from .bound import lower_bound
from .errors import BudgetError, InfeasibleError, ParseError
from .generate import random_connected_graph
from .graph import Graph, parse_graph
from .imposition import impose_all
from .mst import minimum_spanning_tree
from .oracle import EnumerationBudget
from .tree import INF
from .verify import check_graph

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_PROPERTY = 0, 1, 2, 3
COMMANDS = ("mst", "impose", "bound", "verify")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input_path: Optional[str] = None
    imposed_spec: list[str] = field(default_factory=list)
    format: str = "text"
    seed: int = 0
    random: Optional[tuple[int, int, int]] = None


def resolve_selectors(g: Graph, selectors: list[str]) -> list[int]:
    """Turn ``#id`` / ``u-v`` selectors into edge ids, keeping their order."""
    ids = []
    for sel in selectors:
        try:
            if sel.startswith("#"):
                eid = int(sel[1:])
                if not 0 <= eid < g.edge_count:
                    raise UsageError(f"no edge with id {eid}")
                ids.append(eid)
                continue
            u, v = (int(x) for x in sel.split("-"))
        except ValueError:
            raise UsageError(f"bad edge selector {sel!r}; use '#id' or 'u-v'") from None
        hits = [e.id for e in g.edges if {e.u, e.v} == {u, v}]
        if not hits:
            raise UsageError(f"no edge between {u} and {v}")
        if len(hits) > 1:
            raise UsageError(
                f"selector {sel!r} matches parallel edges {hits}; select by '#id'"
            )
        ids.append(hits[0])
    return ids


def _edge_json(g, eid):
    e = g.edges[eid]
    return {"edge": eid, "u": e.u, "v": e.v, "cost": e.cost}


def _num(x):
    return "inf" if x is INF else x


def _render_mst(g, fmt):
    t = minimum_spanning_tree(g)
    ids = sorted(t.tree_edges)
    if fmt == "json":
        return {"total_cost": t.total_cost, "tree_edges": [_edge_json(g, i) for i in ids]}
    lines = [f"total_cost {t.total_cost}", f"tree_edges {len(ids)}"]
    lines += [f"  #{i} {g.edges[i].u}-{g.edges[i].v} cost {g.edges[i].cost}" for i in ids]
    return lines


def _render_impose(g, ids, fmt):
    # replay step by step so each history entry carries its running cost
    state = impose_all(g, ids)
    running = minimum_spanning_tree(g).total_cost
    steps = []
    for added, removed in state.history:
        if removed is not None:
            running += g.edges[added].cost - g.edges[removed].cost
        steps.append((added, removed, running))
    if fmt == "json":
        return {
            "base_cost": minimum_spanning_tree(g).total_cost,
            "history": [
                {"edge": a, "removed": r, "total_cost": c} for a, r, c in steps
            ],
            "total_cost": state.total_cost,
            "tree_edges": sorted(state.tree.tree_edges),
        }
    lines = [f"base_cost {minimum_spanning_tree(g).total_cost}"]
    for a, r, c in steps:
        e = g.edges[a]
        removed = "nothing (already a tree edge)" if r is None else f"#{r}"
        lines.append(f"impose #{a} {e.u}-{e.v}: removed {removed}, cost {c}")
    lines.append(f"total_cost {state.total_cost}")
    lines.append("tree_edges " + " ".join(f"#{i}" for i in sorted(state.tree.tree_edges)))
    return lines


def _render_bound(g, ids, fmt):
    report = lower_bound(g, frozenset(ids), compute_exact=True)
    if fmt == "json":
        return {
            "base_cost": report.base_cost,
            "contributions": [
                {
                    "edge": c.edge,
                    "u": g.edges[c.edge].u,
                    "v": g.edges[c.edge].v,
                    "r_edge": c.r_edge if isinstance(c.r_edge, int) else None,
                    "r_cost": _num(c.r_cost),
                }
                for c in report.contributions
            ],
            "lower_bound": _num(report.lower_bound),
            "exact_cost": report.exact_cost,
            "gap": report.gap,
        }
    lines = [f"base_cost {report.base_cost}"]
    for c in report.contributions:
        e = g.edges[c.edge]
        if c.r_edge is None:
            via = "tree edge"
        elif c.r_edge is INF:
            via = "no replacement"
        else:
            via = f"replaces #{c.r_edge}"
        lines.append(f"  #{c.edge} {e.u}-{e.v}: r_cost {_num(c.r_cost)} ({via})")
    lines.append(f"lower_bound {_num(report.lower_bound)}")
    lines.append(f"exact_cost {report.exact_cost}")
    lines.append(f"gap {report.gap}")
    return lines


def _render_verify(graph, config, budget):
    instances = []
    if graph is not None:
        instances.append(("input", graph))
    if config.random is not None:
        n, m, k = config.random
        rng = random.Random(config.seed)
        try:
            instances += [
                (f"random[{i}]", random_connected_graph(rng, n, m)) for i in range(k)
            ]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not instances:
        raise UsageError("verify needs --input and/or --random N M K")

    records = []
    for label, g in instances:
        head = {"instance": label, "n": g.node_count, "m": g.edge_count}
        if g.node_count > budget.max_nodes:
            records.append({**head, "property": "*", "status": "skipped",
                            "note": f"n > {budget.max_nodes}", "violations": []})
            continue
        for prop, bad, note in check_graph(g, budget):
            records.append({**head, "property": prop, "status": "fail" if bad else "pass",
                            "note": note, "violations": bad[:5]})
    failed = any(r["status"] == "fail" for r in records)
    if config.format == "json":
        body = {"seed": config.seed, "results": records, "ok": not failed}
    else:
        body = []
        for r in records:
            note = f" ({r['note']})" if r["note"] else ""
            body.append(f"{r['instance']} n={r['n']} m={r['m']} "
                        f"{r['property']} {r['status'].upper()}{note}")
            body += [f"    {v}" for v in r["violations"]]
        body.append("ALL PASS" if not failed else "FAILURES")
    return body, failed


def _emit(body, fmt):
    if fmt == "json":
        return json.dumps(body, indent=2, sort_keys=False) + "\n"
    return "\n".join(body) + "\n"


def run(config: CliConfig) -> tuple[int, str, str]:
    """Execute one command; returns (exit code, stdout text, stderr text)."""
    try:
        budget = EnumerationBudget.from_env()
        graph = None
        if config.input_path is not None:
            try:
                with open(config.input_path) as fh:
                    graph = parse_graph(fh.read())
            except OSError as exc:
                raise UsageError(f"cannot read {config.input_path}: {exc.strerror}") from None
        elif config.command != "verify":
            raise UsageError(f"{config.command} needs --input")

        if config.command == "verify":
            body, failed = _render_verify(graph, config, budget)
            return (EXIT_PROPERTY if failed else EXIT_OK), _emit(body, config.format), ""
        ids = resolve_selectors(graph, config.imposed_spec)
        if config.command == "mst":
            body = _render_mst(graph, config.format)
        elif config.command == "impose":
            body = _render_impose(graph, ids, config.format)
        else:
            body = _render_bound(graph, ids, config.format)
        return EXIT_OK, _emit(body, config.format), ""
    except ParseError as exc:
        return EXIT_USAGE, "", f"error:parse: {exc}\n"
    except (UsageError, ValueError) as exc:
        return EXIT_USAGE, "", f"error:usage: {exc}\n"
    except BudgetError as exc:
        return EXIT_USAGE, "", f"error:budget: {exc}\n"
    except InfeasibleError as exc:
        return EXIT_INFEASIBLE, "", f"error:infeasible: {exc}\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error:usage: {message}\n")
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imposedmst", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", dest="input_path", help="graph file in edge-list format")
    parser.add_argument("--impose", default="",
                        help="comma-separated edge selectors: '#id' or 'u-v'")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "K"),
                        help="verify on K random connected graphs with N nodes, M edges")
    return parser


def parse_args(argv=None) -> CliConfig:
    args = build_parser().parse_args(argv)
    return CliConfig(
        command=args.command,
        input_path=args.input_path,
        imposed_spec=[s.strip() for s in args.impose.split(",") if s.strip()],
        format=args.format,
        seed=args.seed,
        random=tuple(args.random) if args.random else None,
    )


def main(argv=None) -> int:
    code, out, err = run(parse_args(argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
