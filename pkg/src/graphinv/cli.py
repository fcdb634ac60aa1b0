"""Command line entry point.

Every subcommand emits either a human-readable text rendering (default) or
a JSON run report with the shape

    {"command": ..., "inputs": ..., "outputs": ..., "checks": [...],
     "seed": ..., "timing_ms": ...}

where inputs echo the fully parsed data, so a report can be re-run without
the original files.  Identical argv and seed give identical reports except
for timing_ms.  Exit status: 0 on success (including negative query
answers), 1 when a verification check fails, 2 on usage errors or invalid
input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .acceptance import CHECKS, run_acceptance
from .chart import chart_point_to_json, verify_chart
from .degree import degree_trace, is_boundary, moduli_degree
from .errors import BadExponent, GraphInvError
from .evaluation import Configuration, configuration_from_json, configuration_to_json, evaluate
from .graphs import Graph, enumerate_noncrossing, graph_from_json, graph_to_json, noncrossing_matchings
from .kempe import kempe_decompose, matching_product_to_json
from .relations import (
    certificate_to_json,
    ideal_membership,
    odd_power_relation,
    plucker_linear_relations,
    polynomial_from_json,
    polynomial_to_json,
    segre_cubic,
    simple_binomial_relations,
)
from .straightening import combination_to_json, straighten_graph


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")
    if not w or any(x < 1 for x in w):
        raise argparse.ArgumentTypeError("weights must be positive integers")
    return w


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_configuration(args) -> Configuration:
    if getattr(args, "points", None):
        return Configuration.from_affine(args.points.replace(" ", "").split(","))
    if getattr(args, "config", None):
        return configuration_from_json(_read_json(args.config))
    raise argparse.ArgumentTypeError("provide --config FILE or --points LIST")


def _fmt_graph(g: Graph) -> str:
    return "".join(f"({t}-{h})" for t, h in g.edges)


def _fmt_coeff(c) -> str:
    return f"+{c}" if c > 0 else str(c)


def _fmt_combination(comb) -> list[str]:
    if comb.is_zero:
        return ["0"]
    return [f"{_fmt_coeff(c)} {_fmt_graph(g)}" for g, c in comb.terms.items()]


def _fmt_polynomial(p) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for mono, c in p.terms.items():
        parts.append(f"{_fmt_coeff(c)} " + " * ".join(_fmt_graph(f) for f in mono))
    return "  ".join(parts)


def _cmd_eval(args):
    g = graph_from_json(_read_json(args.graph))
    c = _load_configuration(args)
    val = evaluate(g, c)
    inputs = {"graph": graph_to_json(g), "config": configuration_to_json(c)}
    return inputs, {"value": str(val)}, [], [str(val)], 0


def _cmd_straighten(args):
    g = graph_from_json(_read_json(args.graph))
    comb = straighten_graph(g)
    inputs = {"graph": graph_to_json(g)}
    outputs = {"combination": combination_to_json(comb)}
    return inputs, outputs, [], _fmt_combination(comb), 0


def _cmd_basis(args):
    w = args.weights if args.weights else (1,) * args.n
    if len(w) != args.n:
        raise argparse.ArgumentTypeError(f"{len(w)} weights for --n {args.n}")
    basis = enumerate_noncrossing(args.n, w)
    inputs = {"n": args.n, "weights": list(w)}
    outputs = {"count": len(basis), "graphs": [graph_to_json(g) for g in basis]}
    return inputs, outputs, [], [_fmt_graph(g) for g in basis], 0


def _cmd_kempe(args):
    g = graph_from_json(_read_json(args.graph))
    prods = kempe_decompose(g)
    inputs = {"graph": graph_to_json(g)}
    outputs = {"products": [matching_product_to_json(p) for p in prods]}
    text = [
        f"{_fmt_coeff(p.coeff)} " + (" * ".join(_fmt_graph(f) for f in p.factors) or "1")
        for p in prods
    ]
    return inputs, outputs, [], text, 0


def _cmd_relations(args):
    n = args.n
    inputs = {"n": n, "type": args.type}
    if args.type == "plucker":
        rels = plucker_linear_relations(n)
        payload = [combination_to_json(r) for r in rels]
        text = ["  ".join(_fmt_combination(r)) for r in rels]
    elif args.type == "simple-binomial":
        rels = simple_binomial_relations(n)
        payload = [polynomial_to_json(r) for r in rels]
        text = [_fmt_polynomial(r) for r in rels]
    elif args.type == "segre":
        rels = [segre_cubic(n)]
        payload = [polynomial_to_json(r) for r in rels]
        text = [_fmt_polynomial(r) for r in rels]
    else:
        if args.exponent % 2 == 0:
            raise BadExponent(f"--exponent must be odd, got {args.exponent}")
        base = noncrossing_matchings(n)[0]
        inputs["exponent"] = args.exponent
        inputs["matching"] = graph_to_json(base)
        rels = [odd_power_relation(n, base, args.exponent)]
        payload = [polynomial_to_json(r) for r in rels]
        text = [_fmt_polynomial(r) for r in rels]
    outputs = {"count": len(rels), "relations": payload}
    return inputs, outputs, [], text, 0


def _cmd_check_ideal(args):
    if args.candidate == "segre":
        cand = segre_cubic(args.n)
    else:
        cand = polynomial_from_json(_read_json(args.candidate))
        if cand.n != args.n:
            raise argparse.ArgumentTypeError(f"candidate is on {cand.n} vertices, --n is {args.n}")
    if args.n > 8 and not args.heavy:
        raise argparse.ArgumentTypeError(
            f"membership for n={args.n} may take far longer than the committed budgets; pass --heavy to attempt it"
        )
    k = args.degree if args.degree is not None else cand.degree
    gens = simple_binomial_relations(args.n)
    member, cert = ideal_membership(cand, gens, k)
    inputs = {
        "candidate": polynomial_to_json(cand),
        "n": args.n,
        "degree": k,
        "generators": "simple-binomial",
        "generator_count": len(gens),
    }
    outputs = {
        "member": member,
        "certificate": certificate_to_json(cert) if cert is not None else None,
    }
    if member:
        text = [f"member (certificate with {len(cert)} terms)"]
    else:
        text = ["not a member"]
    return inputs, outputs, [], text, 0


def _render_trace(node: dict, indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    w = tuple(node["weights"])
    action = node["action"]
    if action == "multigraph":
        edges = "".join(f"({t}-{h})" for t, h in node["graph_edges"])
        lines.append(f"{pad}{w} via multigraph {edges} = {node['degree']}")
        for br in node["branches"]:
            j, k = br["pair"]
            note = f" [{br['note']}]" if "note" in br else ""
            lines.append(
                f"{pad}  pair {{{j},{k}}} x{br['multiplicity']} (weight sum {br['weight_sum']})"
                f" -> {br['contribution']}{note}"
            )
            if "child" in br:
                _render_trace(br["child"], indent + 2, lines)
    elif action == "pair-reduction":
        a, b = node["pair"]
        lines.append(f"{pad}{w} drop 1 from the pair ({a},{b}) = {node['degree']}")
        _render_trace(node["child"], indent + 1, lines)
    elif action == "point":
        lines.append(f"{pad}{w} is a single point = 1")
    elif action == "balanced-quadruple":
        lines.append(f"{pad}{w} balanced quadruple = {node['degree']}")
    else:
        lines.append(f"{pad}{w} = {node['degree']} (memoized)")


def _cmd_degree(args):
    w = args.weights
    inputs = {"weights": list(w), "trace": bool(args.trace)}
    boundary = is_boundary(w)
    if args.trace:
        value, tree = degree_trace(w)
        outputs = {"degree": value, "boundary": boundary, "trace": tree}
        text: list[str] = []
        _render_trace(tree, 0, text)
        text.append(str(value))
    else:
        value = moduli_degree(w)
        outputs = {"degree": value, "boundary": boundary}
        text = [str(value)]
    if boundary:
        text.append("note: boundary weights; every semistable configuration is strictly semistable")
    return inputs, outputs, [], text, 0


def _cmd_chart(args):
    c = _load_configuration(args)
    rep = verify_chart(c)
    inputs = {"config": configuration_to_json(c)}
    entries = {f"{i},{j}": status for (i, j), status in sorted(rep.entry_status.items())}
    outputs = {
        "chart": chart_point_to_json(rep.point),
        "verified": bool(rep),
        "minor_failures": [list(q) for q in rep.minor_failures],
        "entries": entries,
    }
    checks = [
        {"name": "rank-at-most-1", "passed": not rep.minor_failures,
         "details": f"{len(rep.minor_failures)} nonvanishing 2x2 minors"},
        {"name": "z-identity", "passed": "failed" not in rep.entry_status.values(),
         "details": f"{sum(1 for v in rep.entry_status.values() if v == 'ok')} entries ok, "
                    f"{len(rep.skipped_entries)} skipped"},
    ]
    text = []
    for name, mat in (("W", rep.point.W), ("Z", rep.point.Z)):
        text.append(f"{name}:")
        for row in mat:
            text.append("  [ " + "  ".join(str(x) for x in row) + " ]")
    text.append(f"verified: {bool(rep)}")
    return inputs, outputs, checks, text, 0 if rep else 1


def _cmd_verify_all(args):
    names = set(args.only) if args.only else None
    results = run_acceptance(quick=args.quick, base_seed=args.seed, names=names)
    checks = [{"name": r.name, "passed": r.passed, "details": r.details} for r in results]
    inputs = {"tier": "quick" if args.quick else "full"}
    if args.only:
        inputs["only"] = sorted(names)
    passed = sum(1 for r in results if r.passed)
    outputs = {"passed": passed, "total": len(results)}
    text = [
        f"[{'PASS' if r.passed else 'FAIL'}] {r.name} ({r.seconds:.2f}s) {r.details}"
        for r in results
    ]
    text.append(f"passed {passed}/{len(results)}")
    return inputs, outputs, checks, text, 0 if passed == len(results) else 1


_HANDLERS = {
    "eval": _cmd_eval,
    "straighten": _cmd_straighten,
    "basis": _cmd_basis,
    "kempe": _cmd_kempe,
    "relations": _cmd_relations,
    "check-ideal": _cmd_check_ideal,
    "degree": _cmd_degree,
    "chart": _cmd_chart,
    "verify-all": _cmd_verify_all,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base seed for randomized checks")
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--out", default=None, help="write the report to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="graphinv",
        description="Exact graphical algebra of invariants of weighted points on the line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a graph invariant at a configuration")
    p.add_argument("--graph", required=True, help="graph JSON file, or - for stdin")
    p.add_argument("--config", help="configuration JSON file, or - for stdin")
    p.add_argument("--points", help="affine shorthand, e.g. 0,1,2,inf")

    p = sub.add_parser("straighten", parents=[common], help="rewrite on the non-crossing basis")
    p.add_argument("--graph", required=True, help="graph JSON file, or - for stdin")

    p = sub.add_parser("basis", parents=[common], help="enumerate the non-crossing basis graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=_parse_weights, default=None, help="multidegree, default all ones")

    p = sub.add_parser("kempe", parents=[common], help="decompose a regular graph into matching products")
    p.add_argument("--graph", required=True, help="graph JSON file, or - for stdin")

    p = sub.add_parser("relations", parents=[common], help="generate relation families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True, choices=["plucker", "simple-binomial", "segre", "odd-power"])
    p.add_argument("--exponent", type=int, default=3, help="odd exponent for --type odd-power")

    p = sub.add_parser("check-ideal", parents=[common], help="certified ideal membership")
    p.add_argument("--candidate", required=True, help="'segre' or a polynomial JSON file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, default=None, help="degree of the slice, default the candidate's")
    p.add_argument("--heavy", action="store_true", help="allow n > 8 attempts with no time guarantee")

    p = sub.add_parser("degree", parents=[common], help="degree of the weighted moduli space")
    p.add_argument("--weights", type=_parse_weights, required=True)
    p.add_argument("--trace", action="store_true", help="print the recursion tree")

    p = sub.add_parser("chart", parents=[common], help="chart coordinates at a configuration")
    p.add_argument("--config", help="configuration JSON file, or - for stdin")
    p.add_argument("--points", help="affine shorthand, e.g. 0,0,1,inf")

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance checks")
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--quick", action="store_true", help="fast subset")
    tier.add_argument("--full", action="store_true", help="every check (default)")
    p.add_argument("--only", nargs="*", choices=[name for name, _, _ in CHECKS], help="run a named subset")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        inputs, outputs, checks, text, code = _HANDLERS[args.command](args)
    except GraphInvError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        report = {
            "command": args.command,
            "inputs": inputs,
            "outputs": outputs,
            "checks": checks,
            "seed": args.seed,
            "timing_ms": int((time.perf_counter() - t0) * 1000),
        }
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        payload = "\n".join(text) + "\n" if text else ""
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
