"""Command line: ``totalgroup check ...`` for single checks, ``totalgroup suite`` for all claims.

Exit status: 0 holds, 1 fails, 2 budget exceeded or error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .address import AddressError, derive, parse_graph, parse_plane
from .catalog import OUTERPLANAR, PLANE
from .discharge import DischargeError, audit_no4cycle, audit_no45cycle
from .engine import (BUDGET, FAILS, HOLDS, Budget, BudgetExceeded, DimensionError,
                     c3t_hard_labeling, check_d_group_choosable, check_group_choosable,
                     check_group_colorable)
from .engine.checks import recheck_witness
from .graph import GraphError, Orientation
from .groups import GroupSpecError, cyclic_product, make_group
from .ordering import coloring_number
from .structure import (SizeExceeded, find_2_alternating_cycle, find_knet, find_light_edge,
                        girth, has_cycle_len, has_minor, outerplanar_configuration)
from .suite import ConfigError, SuiteConfig, run_suite, write_report

EXIT = {HOLDS: 0, FAILS: 1, BUDGET: 2}


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _budget(args) -> Budget:
    env = Budget.from_env()
    return Budget(nodes=args.budget_nodes if args.budget_nodes is not None else env.nodes,
                  seconds=args.budget_seconds if args.budget_seconds is not None else env.seconds,
                  instances=env.instances)


def _recheck(args, g, group) -> int:
    """Re-confirm a witness file: exit 1 when it really admits no colouring."""
    with open(args.witness) as fh:
        w = json.load(fh)
    o = Orientation(tuple(tuple(a) for a in w["orientation"]))
    o.check(g)
    lists = w.get("lists") or [list(range(group.order))] * g.n
    confirmed = recheck_witness(g, o, group, w["labels"], lists)
    _emit({"check": "witness", "graph": g.name, "group": group.name, "confirmed": confirmed,
           "status": FAILS if confirmed else HOLDS})
    return 1 if confirmed else 0


def _cmd_colorability(args) -> int:
    base = parse_graph(args.graph)
    mode = "total" if args.kind == "total" else args.derived
    g, _ = derive(base, mode)
    if args.kind == "dchoosable" and args.group is None:
        group = cyclic_product([max(g.max_degree, 2)])
    else:
        group = make_group(args.group or "Z3")
    if args.witness:
        return _recheck(args, g, group)
    if args.kind == "total" and args.hard_labeling:
        if base.n % 3 or base.m != base.n or not base.is_regular() or base.max_degree != 2:
            raise AddressError("--hard-labeling needs cycle:n with n divisible by 3")
        if group.name != "Z3":
            raise AddressError("--hard-labeling is defined over Z3")
        inst = c3t_hard_labeling(base.n // 3)
        lists = [list(range(3))] * inst.graph.n
        confirmed = recheck_witness(inst.graph, inst.orientation, inst.group, inst.labels, lists)
        status = FAILS if confirmed else HOLDS
        _emit({"check": "hard-labeling", "graph": inst.graph.name, "group": "Z3",
               "status": status,
               "witness": {"orientation": inst.orientation.to_json(), "labels": inst.labels}})
        return EXIT[status]
    budget = _budget(args)
    if args.kind == "total":
        v = check_group_colorable(g, group, budget)
    elif args.kind == "choosable":
        if args.k is None:
            raise AddressError("choosable needs --k")
        v = check_group_choosable(g, group, args.k, budget)
    else:
        v = check_d_group_choosable(g, group, budget)
    _emit(v.to_json())
    return EXIT[v.status]


def _cmd_col(args) -> int:
    g, _ = derive(parse_graph(args.graph), args.derived)
    cert = coloring_number(g)
    _emit({"check": "col", "graph": g.name, "col": cert.col, "ordering": list(cert.ordering)})
    if args.expect is not None:
        return 0 if cert.col == args.expect else 1
    return 0


def _cmd_structure(args) -> int:
    g, _ = derive(parse_graph(args.graph), args.derived)
    out = {"check": "structure", "graph": g.name, "n": g.n, "m": g.m,
           "min_degree": g.min_degree, "max_degree": g.max_degree, "girth": girth(g),
           "cycles": {str(k): has_cycle_len(g, k) for k in range(3, 7)},
           "five_net": find_knet(g, 5),
           "two_alternating_cycle": find_2_alternating_cycle(g),
           "light_edges": {r: find_light_edge(g, r) for r in ("sum13", "sum9", "deg3_le5")}}
    try:
        out["minors"] = {h: has_minor(g, h) for h in ("K4", "K23", "K2bar_plus")}
    except SizeExceeded as exc:
        out["minors"] = str(exc)
    if out["minors"] == {"K4": False, "K23": False, "K2bar_plus": False}:
        out["outerplanar_configuration"] = outerplanar_configuration(g)._asdict()
    _emit(out)
    return 0


def _cmd_discharge(args) -> int:
    pg = parse_plane(args.graph)
    audit = audit_no4cycle if args.scheme == "no4" else audit_no45cycle
    k = args.k if args.k is not None else max(6 if args.scheme == "no4" else 5, pg.graph.max_degree)
    rep = audit(pg, k)
    data = rep.to_json()
    if not args.ledger:
        data.pop("ledger")
    _emit(data)
    return 1 if rep.verdict.startswith("gap") else 0


def _cmd_suite(args) -> int:
    data = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
    for key in ("seed", "trials", "budget_nodes", "budget_seconds"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.groups:
        data["groups"] = args.groups.split(",")
    if args.graphs:
        data["graphs"] = args.graphs.split(";")
    if args.claims is not None:
        data["claims"] = [] if args.claims == "none" else args.claims.split(",")
    cfg = SuiteConfig.from_json(data)
    report = run_suite(cfg, progress=lambda r: print(f"{r.claim}: {r.status}", file=sys.stderr))
    written = write_report(report, args.out, cfg.formats)
    for path in written:
        print(path, file=sys.stderr)
    print(json.dumps(report.summary()))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totalgroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run one check")
    kinds = check.add_subparsers(dest="kind", required=True)
    graph_help = ("family:params (e.g. cycle:4, bipartite:2,3, tree:8,1), file:path, "
                  f"or a catalog name ({', '.join(sorted({**PLANE, **OUTERPLANAR})[:4])}, ...)")
    for kind in ("total", "choosable", "dchoosable", "structure", "discharge", "col"):
        p = kinds.add_parser(kind)
        p.add_argument("--graph", required=True, help=graph_help)
        if kind in ("choosable", "dchoosable", "structure", "col"):
            p.add_argument("--derived", choices=["none", "total", "line"], default="none")
        if kind in ("total", "choosable", "dchoosable"):
            p.add_argument("--group", help="Z3, Z2xZ4, S3, or a table JSON path")
            p.add_argument("--budget-nodes", type=int)
            p.add_argument("--budget-seconds", type=float)
            p.add_argument("--witness", help="re-check a witness JSON instead of searching")
        if kind == "choosable":
            p.add_argument("--k", type=int)
        if kind == "total":
            p.add_argument("--hard-labeling", action="store_true",
                           help="use the uncolourable Z3 labelling of T(C_3t)")
        if kind == "discharge":
            p.add_argument("--scheme", choices=["no4", "no45"], default="no4")
            p.add_argument("--k", type=int)
            p.add_argument("--ledger", action="store_true", help="include every transfer")
        if kind == "col":
            p.add_argument("--expect", type=int)
    for kind in ("total", "choosable", "dchoosable"):
        kinds.choices[kind].set_defaults(func=_cmd_colorability)
    kinds.choices["col"].set_defaults(func=_cmd_col)
    kinds.choices["structure"].set_defaults(func=_cmd_structure)
    kinds.choices["discharge"].set_defaults(func=_cmd_discharge)

    suite = sub.add_parser("suite", help="run the verification suite")
    suite.add_argument("--config", help="SuiteConfig JSON")
    suite.add_argument("--out", default="suite-report")
    suite.add_argument("--seed", type=int)
    suite.add_argument("--trials", type=int)
    suite.add_argument("--budget-nodes", type=int)
    suite.add_argument("--budget-seconds", type=float)
    suite.add_argument("--groups", help="comma separated group specs for custom checks")
    suite.add_argument("--graphs", help="semicolon separated graph addresses for custom checks")
    suite.add_argument("--claims", help="comma separated claim ids, or 'none'")
    suite.set_defaults(func=_cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc}", file=sys.stderr)
    except (AddressError, GraphError, GroupSpecError, DimensionError, ConfigError,
            DischargeError, SizeExceeded, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
