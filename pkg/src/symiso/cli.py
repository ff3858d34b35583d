"""Command line: symiso {check,reduce,place,verify,enumerate,render}.

Exit status 0 means success, 1 a negative mathematical answer (not
admissible, not isostatic, no isometry of the needed kind), 2 bad input and
3 an internal contract violation.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from . import construct, fileio, render, verify
from .errors import (DegenerateBall, InvalidAction, InvalidGraph, NoSwappingIsometry, NotAdmissible,
                     SymIsoError)
from .placement import placement_problems, synthesize, taus_for
from .polynorm import is_isostatic, try_coloring
from .symcore import GroupCase, fixed_elements
from .treepack import check_admissible

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

COMMANDS = ("check", "reduce", "place", "verify", "enumerate", "render")


def _edges(edges) -> str:
    return " ".join(f"{u}-{w}" for u, w in sorted(edges))


def _emit(text: str, path: Optional[str], out: TextIO) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _load_instance(args):
    if not args.input:
        raise fileio.FormatError("--input is required")
    doc = fileio.read_json(args.input)
    sg, norm = fileio.parse_instance(doc, args.group)
    if args.norm:
        norm = fileio.parse_norm(args.norm)
    return doc, sg, norm


def cmd_check(args, out: TextIO) -> int:
    _, sg, _ = _load_instance(args)
    rep = check_admissible(sg)
    fixed_v = sorted(fixed_elements(sg, 1)[0])
    lines = [
        f"case: {sg.case.value}",
        f"vertices: {sg.graph.n}  edges: {sg.graph.m}",
        f"fixed vertices: {fixed_v}",
        f"fixed edges: {rep.fixed_edge_count}",
        f"result: {rep.summary()}",
    ]
    if rep.admissible:
        lines.append(f"tree1: {_edges(rep.tree_pair.tree1)}")
        lines.append(f"tree2: {_edges(rep.tree_pair.tree2)}")
        lines.append(f"mode: {rep.tree_pair.mode.value}")
    _emit("\n".join(lines) + "\n", args.output, out)
    return EXIT_OK if rep.admissible else EXIT_NEGATIVE


def cmd_reduce(args, out: TextIO) -> int:
    _, sg, _ = _load_instance(args)
    rep = check_admissible(sg)
    if not rep.admissible:
        out.write(f"result: {rep.summary()}\n")
        return EXIT_NEGATIVE
    if sg.case not in (GroupCase.CS_PRESERVING, GroupCase.C2):
        out.write(f"no construction chain is defined for case {sg.case.value}\n")
        return EXIT_NEGATIVE
    target = sg
    lines = []
    if rep.fixed_edge_count == 2:
        target, _, w0 = construct.hat_graph(sg, rep.tree_pair)
        lines.append(f"two fixed edges: reducing the hat graph with new fixed vertex {w0}")
    chain = construct.build_chain(target)
    hub = sorted(chain.base.graph.vertices)
    lines.append(f"base: wheel on vertices {hub}")
    for i, move in enumerate(chain.moves, 1):
        lines.append(f"step {i}: {move.describe()}")
    lines.append(f"steps: {len(chain.moves)}")
    _emit("\n".join(lines) + "\n", args.output, out)
    return EXIT_OK


def cmd_place(args, out: TextIO) -> int:
    _, sg, norm = _load_instance(args)
    try:
        sp = synthesize(sg, norm, seed=args.seed)
    except (NotAdmissible, NoSwappingIsometry) as exc:
        out.write(f"no placement: {exc}\n")
        return EXIT_NEGATIVE
    text = fileio.dumps(fileio.placement_document(sp, norm))
    if args.output:
        _emit(text, args.output, out)
        rep = is_isostatic(sg.graph, sp.placement, norm)
        out.write(f"route: {sp.route}\n{rep.summary()}\nwritten: {args.output}\n")
    else:
        out.write(text)
    return EXIT_OK


def _find_tau(sg, norm, p):
    try:
        candidates = taus_for(sg.case, norm)
    except NoSwappingIsometry:
        return None
    for tau in candidates:
        if all(tau(p[v]) == p[sg.act(v)] for v in sg.graph.vertices):
            return tau
    return None


def cmd_verify(args, out: TextIO) -> int:
    if not args.input:
        raise fileio.FormatError("--input is required")
    doc = fileio.read_json(args.input)
    sg, norm, p, tau = fileio.parse_placement(doc, args.group)
    if args.norm:
        norm = fileio.parse_norm(args.norm)
        tau = None
    if tau is None:
        tau = _find_tau(sg, norm, p)
    lines = [f"case: {sg.case.value}"]
    col, bad = try_coloring(sg.graph, p, norm)
    if col is None:
        lines.append(f"well-positioned: no (edge {bad[0]}-{bad[1]})")
        lines.append("isostatic: false")
        _emit("\n".join(lines) + "\n", args.output, out)
        return EXIT_NEGATIVE
    rep = is_isostatic(sg.graph, p, norm)
    lines.append("well-positioned: yes")
    lines.append(f"rank: {rep.rank} (needed {2 * sg.graph.n - 2})")
    lines.append(f"monochrome spanning trees: {'yes' if rep.monochrome_trees else 'no'}")
    if tau is None:
        lines.append("symmetric: no isometry of the required kind maps p(v) to p(gv)")
        symmetric = False
    else:
        problems = placement_problems(sg, p, norm, tau)
        symmetric = not any(pr.startswith("tau") for pr in problems)
        lines.append(f"symmetric: {'yes' if symmetric else 'no'} ({tau.describe()})")
    lines.append(f"isostatic: {'true' if rep.isostatic else 'false'}")
    _emit("\n".join(lines) + "\n", args.output, out)
    return EXIT_OK if rep.isostatic and symmetric else EXIT_NEGATIVE


def cmd_enumerate(args, out: TextIO) -> int:
    if not args.group:
        raise fileio.FormatError("--group is required")
    try:
        case = GroupCase.parse(args.group)
    except ValueError as exc:
        raise fileio.FormatError(str(exc)) from exc
    norm = fileio.parse_norm(args.norm)
    try:
        rep = verify.equivalence_experiment(args.max_vertices, case, norm, workers=args.workers)
    except NoSwappingIsometry as exc:
        out.write(f"no experiment: {exc}\n")
        return EXIT_NEGATIVE
    rep.seed = args.seed
    _emit(rep.summary() + "\n", args.output, out)
    return EXIT_OK if not rep.counterexamples else EXIT_INTERNAL


def cmd_render(args, out: TextIO) -> int:
    if not args.input:
        raise fileio.FormatError("--input is required")
    doc = fileio.read_json(args.input)
    sg, norm, p, tau = fileio.parse_placement(doc, args.group)
    if args.norm:
        norm = fileio.parse_norm(args.norm)
    if tau is None:
        tau = _find_tau(sg, norm, p)
    _emit(render.render_svg(sg.graph, p, norm, tau), args.output, out)
    return EXIT_OK


HANDLERS = {
    "check": cmd_check, "reduce": cmd_reduce, "place": cmd_place,
    "verify": cmd_verify, "enumerate": cmd_enumerate, "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symiso", description="Symmetric isostatic frameworks for quadrilateral norms.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="instance or placement JSON file")
    parser.add_argument("--group", help="CsPreserving, CsSwapping, C2 or C4 (overrides the file)")
    parser.add_argument("--norm", help="'linf', 'l1' or 'a,b;c,d' for phi1=(a,b), phi2=(c,d)")
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--max-vertices", type=int, default=6, help="enumeration bound (enumerate)")
    parser.add_argument("--seed", type=int, default=0, help="seed for the cone solver's perturbation")
    parser.add_argument("--workers", type=int, default=1, help="worker processes (enumerate)")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return HANDLERS[args.command](args, out)
    except (fileio.FormatError, InvalidGraph, InvalidAction, DegenerateBall) as exc:
        err.write(f"input error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except SymIsoError as exc:
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
