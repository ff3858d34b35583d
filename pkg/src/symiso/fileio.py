"""JSON documents for instances and placements.

Instance::

    {"vertices": 5, "edges": [[0, 1], ...], "group": "CsPreserving",
     "action": [0, 3, 4, 1, 2], "norm": {"phi1": ["1", "0"], "phi2": ["0", "1"]}}

``action`` lists the image of every vertex under the generator. Exact
numbers are written as "p/q" strings; plain integers are accepted on input.
A placement document is an instance plus ``coords``, ``tau`` and a
``certificate`` block, so it can be read back as an instance.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from .errors import InvalidAction, InvalidGraph, SymIsoError
from .polynorm import (LinearIsometry, Placement, QuadNorm, classify_isometry,
                       linf_norm, make_quad_norm)
from .symcore import Graph, GroupCase, SymmetricGraph, build_symmetric_graph

PathLike = Union[str, Path]


class FormatError(SymIsoError):
    """The document does not follow the schema."""


def fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not an exact fraction: {value!r}") from exc
    raise FormatError(f"exact numbers must be integers or 'p/q' strings, got {value!r}")


def parse_norm(spec: Any) -> QuadNorm:
    """Accepts a dict with phi1/phi2, or the names 'linf' and 'l1'."""
    if spec is None:
        return linf_norm()
    if isinstance(spec, str):
        name = spec.strip().lower()
        if name in ("linf", "l_inf", "inf", "max"):
            return linf_norm()
        if name in ("l1", "diamond"):
            return make_quad_norm((1, 1), (1, -1))
        try:
            a, b = name.split(";")
            return make_quad_norm(tuple(map(parse_fraction, a.split(","))),
                                  tuple(map(parse_fraction, b.split(","))))
        except ValueError as exc:
            raise FormatError(f"norm must be 'linf', 'l1' or 'a,b;c,d', got {spec!r}") from exc
    try:
        phi1 = tuple(parse_fraction(x) for x in spec["phi1"])
        phi2 = tuple(parse_fraction(x) for x in spec["phi2"])
    except (KeyError, TypeError) as exc:
        raise FormatError("norm needs 'phi1' and 'phi2' coefficient pairs") from exc
    if len(phi1) != 2 or len(phi2) != 2:
        raise FormatError("each functional has exactly two coefficients")
    return make_quad_norm(phi1, phi2)


def norm_document(norm: QuadNorm) -> Dict[str, Any]:
    return {"phi1": [fraction_text(x) for x in norm.phi1], "phi2": [fraction_text(x) for x in norm.phi2]}


def parse_instance(doc: Dict[str, Any], group: Optional[str] = None) -> Tuple[SymmetricGraph, QuadNorm]:
    """Build the symmetric graph (and norm) described by ``doc``; ``group`` overrides the file."""
    if not isinstance(doc, dict):
        raise FormatError("the document must be a JSON object")
    try:
        n = doc["vertices"]
        edges = doc["edges"]
        action = doc["action"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(n, int) or n < 1:
        raise FormatError("'vertices' must be a positive vertex count")
    name = group or doc.get("group")
    if name is None:
        raise FormatError("no group case given (field 'group' or --group)")
    try:
        case = GroupCase.parse(name)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if not isinstance(edges, list) or not all(isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
        raise FormatError("'edges' must be a list of vertex pairs")
    if not isinstance(action, list) or len(action) != n:
        raise InvalidAction(f"'action' must list the image of each of the {n} vertices")
    graph = Graph.from_edges(n, [tuple(e) for e in edges])
    sg = build_symmetric_graph(graph, case, {v: action[v] for v in range(n)})
    return sg, parse_norm(doc.get("norm"))


def instance_document(sg: SymmetricGraph, norm: Optional[QuadNorm] = None) -> Dict[str, Any]:
    g = sg.graph
    if list(g.vertices) != list(range(g.n)):
        raise InvalidGraph("documents need vertex ids 0..n-1")
    doc = {
        "vertices": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "group": sg.case.value,
        "action": [sg.generator[v] for v in g.vertices],
    }
    if norm is not None:
        doc["norm"] = norm_document(norm)
    return doc


def placement_document(sp, norm: QuadNorm) -> Dict[str, Any]:
    """Instance fields plus coordinates, tau and the colouring certificate."""
    doc = instance_document(sp.sg, norm)
    doc["coords"] = [[fraction_text(x) for x in sp.placement[v]] for v in sp.sg.graph.vertices]
    doc["tau"] = [[fraction_text(x) for x in row] for row in sp.tau.matrix]
    col, pair = sp.certificate
    doc["certificate"] = {
        "coloring": [[u, w, col.colors[(u, w)].name] for u, w in sp.sg.graph.sorted_edges()],
        "tree1": [list(e) for e in sorted(pair.tree1)],
        "tree2": [list(e) for e in sorted(pair.tree2)],
        "mode": pair.mode.value,
        "route": sp.route,
    }
    return doc


def parse_placement(doc: Dict[str, Any], group: Optional[str] = None
                    ) -> Tuple[SymmetricGraph, QuadNorm, Placement, Optional[LinearIsometry]]:
    sg, norm = parse_instance(doc, group)
    coords = doc.get("coords")
    if not isinstance(coords, list) or len(coords) != sg.graph.n:
        raise FormatError("'coords' must list one point per vertex")
    try:
        pts = {v: (parse_fraction(xy[0]), parse_fraction(xy[1])) for v, xy in enumerate(coords)}
    except (TypeError, IndexError) as exc:
        raise FormatError("each point is a pair of exact numbers") from exc
    try:
        placement = Placement(pts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    tau = None
    if "tau" in doc:
        try:
            m = tuple(tuple(parse_fraction(x) for x in row) for row in doc["tau"])
            tau = classify_isometry(norm, m)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"'tau' is not an isometry of the norm: {exc}") from exc
    return sg, norm, placement, tau


def read_json(path: PathLike) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def _flat(value: Any) -> bool:
    return not isinstance(value, (list, dict)) or (
        isinstance(value, list) and all(not isinstance(x, (list, dict)) for x in value))


def _format(value: Any, indent: int) -> str:
    # flat lists stay on one line, so point and edge lists read one item per line
    if _flat(value):
        return json.dumps(value)
    pad, inner = " " * indent, " " * (indent + 1)
    if isinstance(value, dict):
        body = [f"{inner}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(body) + "\n" + pad + "}"
    body = [inner + _format(v, indent + 1) for v in value]
    return "[\n" + ",\n".join(body) + "\n" + pad + "]"


def dumps(doc: Dict[str, Any]) -> str:
    return _format(doc, 0) + "\n"
