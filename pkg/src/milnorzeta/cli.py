"""Command-line interface: ``milnorzeta {zeta,isolation,graph,compare,divisor}``.

Exit codes: 0 success, 2 invalid input, 3 degenerate face under --verify,
4 plumbing-graph invariant violated, 5 divisor is not a suspension.
Data goes to stdout; summaries and messages go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .divring import (ZetaForm, divisor_degree, join_suspension, lambda_mul, milnor_from_zeta,
                      unjoin, zeta_multiplicity)
from .errors import (DegenerateFaceError, GraphInvariantError, InputError, NotASuspensionError,
                     UnsupportedDimensionError)
from .io import dumps, read_config, read_poly
from .isofam import IsolationInput, isolation_invariants
from .plumb import (build_graph, check_graph, compare_pair, graph_invariants, intersection_matrix,
                    validate_config)
from .varch import advisory, varchenko_zeta

EXIT_INPUT, EXIT_DEGENERATE, EXIT_GRAPH, EXIT_UNJOIN = 2, 3, 4, 5


def _err(msg: str) -> None:
    print(f"milnorzeta: {msg}", file=sys.stderr)


def cmd_zeta(args) -> int:
    f, _ = read_poly(args.input)
    Z = varchenko_zeta(f, verify=args.verify)
    out_form = Z.to_reduced() if args.reduced else Z
    out = out_form.to_json()
    out["rendered"] = out_form.render()
    out["degree"] = divisor_degree(out_form.divisor)
    out["zeta_multiplicity"] = list(zeta_multiplicity(Z)) if Z.divisor else None
    if args.mu is not None:
        out["mu"] = milnor_from_zeta(Z, args.mu)
    note = advisory(f)
    if note:
        out["advisory"] = note
    print(dumps(out))
    return 0


def cmd_isolation(args) -> int:
    summary = None
    if args.config:
        cfg, m_file = read_config(args.config)
        summary = validate_config(cfg)
        m = args.m if args.m is not None else m_file
        if m is None:
            raise InputError("isolation exponent m missing (use --m or put it in the config)")
        inp = IsolationInput(summary.d, summary.k, m)
    else:
        if None in (args.degree, args.nodes, args.m):
            raise InputError("need --degree, --nodes and --m (or --config)")
        # a reduced nodal curve of degree d has at most d(d-1)/2 nodes (d general lines)
        if args.degree >= 1 and args.nodes > args.degree * (args.degree - 1) // 2:
            raise InputError(f"{args.nodes} nodes impossible on a reduced curve of degree {args.degree}")
        inp = IsolationInput(args.degree, args.nodes, args.m)
    out = isolation_invariants(inp).to_json()
    if summary is not None:
        out["config"] = {"d": summary.d, "k": summary.k, "genera": list(summary.genera)}
    print(dumps(out))
    return 0


def _config_and_m(path, m_flag):
    cfg, m_file = read_config(path)
    m = m_flag if m_flag is not None else m_file
    if m is None:
        raise InputError(f"isolation exponent m missing for {path}")
    return cfg, m


def cmd_graph(args) -> int:
    cfg, m = _config_and_m(args.config, args.m)
    G = build_graph(cfg, m)
    try:
        check_graph(G)
    except GraphInvariantError as exc:
        _err(f"internal error: {exc}")
        return EXIT_GRAPH
    inv = graph_invariants(G)
    negdef = intersection_matrix(G)[1]
    if args.format == "dot":
        sys.stdout.write(G.to_dot())
    else:
        print(dumps(G.to_json()))
    print(f"r={inv.r} g={inv.g_tot} b1={inv.b1} negdef={'true' if negdef else 'false'}", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    cfg_a, m_a = read_config(args.config_a)
    cfg_b, m_b = read_config(args.config_b)
    m = args.m if args.m is not None else (m_a or m_b)
    if m is None:
        raise InputError("isolation exponent m missing")
    report = compare_pair(cfg_a, cfg_b, m)
    print(dumps(report.to_json()))
    print(report.verdict, file=sys.stderr)
    return 0


def _operand(text: str) -> ZetaForm:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad divisor JSON {text!r}: {exc}") from None
    return ZetaForm.from_json(data)


def cmd_divisor(args) -> int:
    ops = [_operand(t) for t in args.operands]
    if args.op == "mul":
        if len(ops) != 2:
            raise InputError("mul takes two operands")
        result = lambda_mul(ops[0].divisor, ops[1].divisor)
    elif args.op in ("join", "unjoin"):
        if len(ops) != 1 or args.m is None:
            raise InputError(f"{args.op} takes one operand and --m")
        Z = ZetaForm(ops[0].divisor, True)
        result = (join_suspension(Z, args.m) if args.op == "join" else unjoin(Z, args.m)).divisor
    else:
        if len(ops) != 1:
            raise InputError("canon takes one operand")
        result = ops[0].divisor
    print(json.dumps(result.to_json(), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="milnorzeta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="monodromy zeta of a Newton non-degenerate polynomial")
    z.add_argument("input", help="polynomial JSON file")
    z.add_argument("--verify", action="store_true", help="check Newton non-degeneracy (n <= 3)")
    z.add_argument("--reduced", action="store_true", help="print the reduced form zeta(t)(1-t)")
    z.add_argument("--mu", type=int, metavar="N", help="also report the Milnor number in C^N")
    z.set_defaults(func=cmd_zeta)

    i = sub.add_parser("isolation", help="invariants of q_d + z^(d+m) for a nodal curve")
    i.add_argument("--degree", type=int)
    i.add_argument("--nodes", type=int)
    i.add_argument("--m", type=int)
    i.add_argument("--config", help="curve configuration JSON file")
    i.set_defaults(func=cmd_isolation)

    g = sub.add_parser("graph", help="dual resolution graph")
    g.add_argument("config")
    g.add_argument("--m", type=int)
    g.add_argument("--format", choices=("dot", "json"), default="dot")
    g.set_defaults(func=cmd_graph)

    c = sub.add_parser("compare", help="compare the links of two configurations")
    c.add_argument("--config-a", required=True)
    c.add_argument("--config-b", required=True)
    c.add_argument("--m", type=int)
    c.set_defaults(func=cmd_compare)

    d = sub.add_parser("divisor", help="Lambda-divisor arithmetic")
    d.add_argument("op", choices=("mul", "join", "unjoin", "canon"))
    d.add_argument("operands", nargs="+")
    d.add_argument("--m", type=int)
    d.set_defaults(func=cmd_divisor)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateFaceError as exc:
        _err(str(exc))
        return EXIT_DEGENERATE
    except NotASuspensionError as exc:
        _err(str(exc))
        return EXIT_UNJOIN
    except (InputError, UnsupportedDimensionError) as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
