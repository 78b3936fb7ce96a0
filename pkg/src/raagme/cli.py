"""Command-line front end.

Commands::

    raagme analyze FILE [--ball-bound N]
    raagme reduce FILE
    raagme out FILE
    raagme oe G_FILE H_FILE
    raagme me G_FILE H_FILE [--max-steps N] [--max-vertices N]
    raagme extball FILE -L N [--ue]
    raagme subgroups FILE [--max-vertices N] [--max-steps N]

Every command accepts ``--format {text,json}``.  With ``--exit-status`` the
decision commands (oe, me) map their verdict to the exit code: 0 equivalent,
1 not_equivalent, 3 unknown; exit code 2 is reserved for usage, validation
and hypothesis errors.  Without the flag, a successful report exits 0.
Reports are byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import RaagmeError
from .classify import decide_me, decide_oe, invariant_report, rigidity_hypotheses
from .combinatorics import out_inventory
from .extension import ball_json, build_ext_ball, ue_restriction
from .formats import load_presentation, presentation_to_json_dict
from .presentation import clique_reduce, expand_to_raag
from .subgroups import enumerate_findex_graphs

VERDICT_EXIT = {"equivalent": 0, "not_equivalent": 1, "unknown": 3}


def _json_dump(doc):
    return json.dumps(doc, indent=2) + "\n"


def _load(path):
    return load_presentation(path)


def _defining_graph(p):
    """Defining graph of the group presented by p (expand non-unit ranks)."""
    return p.graph if p.is_unit_rank() else expand_to_raag(p)


def _cmd_analyze(args):
    p = _load(args.file)
    report = invariant_report(p, ball_bound=args.ball_bound)
    rig = rigidity_hypotheses(p)
    if args.format == "json":
        doc = report.to_json()
        doc["rigidity_hypotheses"] = rig.to_json()
        return 0, _json_dump(doc)
    rg = report.clique_reduced_form
    lines = [
        f"input: {p.graph.n_vertices} vertices, {p.graph.n_edges} edges",
        f"clique-reduced form: {rg.graph.n_vertices} vertices, "
        f"{rg.graph.n_edges} edges, ranks "
        + " ".join(f"{v}:{rg.rank(v)}" for v in rg.graph.sorted_vertices()),
        f"Out finite (reduced graph): {_yn(report.out_finite)}",
        f"untransvectable vertices: {', '.join(report.untransvectable) or '(none)'}",
        f"untransvectable non-abelian class: {_yn(report.nonabelian_untransvectable_class)}",
        f"all untransvectable vertices strongly untransvectable: "
        f"{_yn(report.all_untransvectable_strongly)}",
        "rigidity hypotheses hold: " + _yn(rig.both_hold),
    ]
    for L, digest in report.ue_ball_fingerprints:
        lines.append(f"untransvectable ball fingerprint L={L}: {digest[:16]}")
    return 0, "\n".join(lines) + "\n"


def _cmd_reduce(args):
    p = _load(args.file)
    reduced = clique_reduce(p)
    if args.format == "json":
        return 0, _json_dump(presentation_to_json_dict(reduced))
    g = reduced.graph
    lines = [f"clique-reduced form: {g.n_vertices} vertices, {g.n_edges} edges"]
    lines += [f"  {v}  rank {reduced.rank(v)}" for v in g.sorted_vertices()]
    lines += [f"  {u} -- {w}" for u, w in g.edges()]
    return 0, "\n".join(lines) + "\n"


def _yn(b):
    return "yes" if b else "no"


def _cmd_out(args):
    p = _load(args.file)
    g = _defining_graph(p)
    inv = out_inventory(g)
    if args.format == "json":
        return 0, _json_dump({
            "vertices": g.n_vertices,
            "edges": g.n_edges,
            "transvections": [[v, w] for v, w in inv.transvections],
            "partial_conjugation_sites": [
                {"vertex": v, "component": sorted(c)}
                for v, c in inv.partial_conjugation_sites],
            "inversions": list(inv.inversions),
            "graph_automorphisms": inv.graph_automorphism_count,
            "out_finite": inv.out_finite,
        })
    lines = [f"defining graph: {g.n_vertices} vertices, {g.n_edges} edges"]
    if inv.transvections:
        pairs = ", ".join(f"({v},{w})" for v, w in inv.transvections)
        lines.append(f"transvections (lk(v) <= st(w)): {pairs}")
    else:
        lines.append("transvections (lk(v) <= st(w)): none")
    if inv.partial_conjugation_sites:
        sites = ", ".join(f"({v} | {{{','.join(sorted(c))}}})"
                          for v, c in inv.partial_conjugation_sites)
        lines.append(f"partial conjugation sites (star cuts): {sites}")
    else:
        lines.append("partial conjugation sites (star cuts): none")
    lines.append(f"inversions: {', '.join(inv.inversions)}")
    lines.append(f"graph automorphisms: {inv.graph_automorphism_count}")
    lines.append("Out(G) finite: " + _yn(inv.out_finite))
    return 0, "\n".join(lines) + "\n"


def _decision_output(args, decision, rule):
    code = VERDICT_EXIT[decision.verdict] if args.exit_status else 0
    if args.format == "json":
        return code, _json_dump(decision.to_json())
    lines = [f"verdict: {decision.verdict}", f"rule: {rule}",
             f"reason [{decision.reason_code}]: {decision.reason}"]
    if decision.witness is not None:
        lines.append("witness: " + json.dumps(decision.witness, sort_keys=True))
    if decision.budget is not None:
        lines.append("budget: " + json.dumps(decision.budget, sort_keys=True))
    return code, "\n".join(lines) + "\n"


OE_RULE = ("orbit equivalent iff H is a graph product of free abelian groups "
           "over the defining graph of G (G with finite Out)")
ME_RULE = ("measure equivalent iff H is a graph product of free abelian groups "
           "over the defining graph of a finite-index RAAG subgroup of G "
           "(G with finite Out)")


def _cmd_oe(args):
    pg = _load(args.g_file)
    h = _load(args.h_file)
    decision = decide_oe(_defining_graph(pg), h)
    return _decision_output(args, decision, OE_RULE)


def _cmd_me(args):
    pg = _load(args.g_file)
    h = _load(args.h_file)
    decision = decide_me(_defining_graph(pg), h,
                         max_vertices=args.max_vertices, max_steps=args.max_steps)
    return _decision_output(args, decision, ME_RULE)


def _cmd_extball(args):
    p = _load(args.file)
    ball = build_ext_ball(p, args.L)
    if args.ue:
        ball = ue_restriction(ball)
    if args.format == "json":
        return 0, _json_dump(ball_json(ball))
    kind = "untransvectable extension ball" if args.ue else "extension ball"
    lines = [f"{kind} at L={args.L}: {ball.n_nodes} nodes, {ball.n_edges} edges"]
    for i, node in enumerate(ball.nodes):
        conj = " ".join(f"{v}^{e}" for v, e in node.conjugator) or "-"
        flag = "u" if node.untransvectable else " "
        lines.append(f"  [{i:3d}] {flag} len {node.length}  <{node.vertex}>  conj {conj}")
    return 0, "\n".join(lines) + "\n"


def _cmd_subgroups(args):
    p = _load(args.file)
    g = _defining_graph(p)
    result = enumerate_findex_graphs(g, args.max_vertices, args.max_steps)
    if args.format == "json":
        return 0, _json_dump({
            "truncated": result.truncated,
            "witnesses": [{
                "index": w.index,
                "chain": w.chain_json(),
                "vertices": [{"id": v, "rank": 1} for v in w.graph.sorted_vertices()],
                "edges": [[u, x] for u, x in w.graph.edges()],
            } for w in result.witnesses],
        })
    lines = [f"finite-index defining graphs within {args.max_vertices} vertices, "
             f"{args.max_steps} gluing steps (classes up to isomorphism)"]
    for w in result.witnesses:
        chain = ", ".join(f"({v},{k})" for v, k in w.chain) or "-"
        lines.append(f"  index {w.index}: {w.graph.n_vertices} vertices, "
                     f"{w.graph.n_edges} edges, chain {chain}")
    lines.append(f"search truncated: {_yn(result.truncated)}")
    return 0, "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="raagme",
        description="Equivalence analysis of right-angled Artin groups and "
                    "graph products of free abelian groups over finite graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default: text)")
    common.add_argument("--exit-status", action="store_true",
                        help="map decision verdicts to exit codes "
                             "(0 equivalent, 1 not_equivalent, 3 unknown)")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", parents=[common],
                        help="equivalence invariants of a presentation")
    sp.add_argument("file")
    sp.add_argument("--ball-bound", type=int, default=1,
                    help="largest extension-ball radius to fingerprint (default 1)")
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("reduce", parents=[common],
                        help="canonical clique-reduced form")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("out", parents=[common],
                        help="outer automorphism generator inventory")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_out)

    sp = sub.add_parser("oe", parents=[common], help="decide orbit equivalence")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.set_defaults(func=_cmd_oe)

    sp = sub.add_parser("me", parents=[common], help="decide measure equivalence")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.add_argument("--max-steps", type=int, default=3,
                    help="composition depth of the subgroup search (default 3)")
    sp.add_argument("--max-vertices", type=int, default=24,
                    help="vertex budget of the subgroup search (default 24)")
    sp.set_defaults(func=_cmd_me)

    sp = sub.add_parser("extball", parents=[common],
                        help="finite ball of the extension graph")
    sp.add_argument("file")
    sp.add_argument("-L", type=int, required=True, help="conjugator length bound")
    sp.add_argument("--ue", action="store_true",
                    help="restrict to untransvectable nodes")
    sp.set_defaults(func=_cmd_extball)

    sp = sub.add_parser("subgroups", parents=[common],
                        help="finite-index defining graphs by star gluing")
    sp.add_argument("file")
    sp.add_argument("--max-vertices", type=int, default=16,
                    help="vertex budget (default 16)")
    sp.add_argument("--max-steps", type=int, default=2,
                    help="composition depth (default 2)")
    sp.set_defaults(func=_cmd_subgroups)
    return parser


def run_command(argv):
    """Run one CLI invocation; returns (exit status, report text).

    The report goes to stdout on success; error text (status 2) goes to
    stderr in main().
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; normalize its exit code to 2
        raise _UsageExit(2 if exc.code else 0) from exc
    try:
        return args.func(args)
    except RaagmeError as exc:
        return 2, f"error: {exc}\n"


class _UsageExit(Exception):
    def __init__(self, code):
        self.code = code


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        code, text = run_command(argv)
    except _UsageExit as exc:
        return exc.code
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
