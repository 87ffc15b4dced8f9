"""Edge-list files, JSON result documents and DOT export."""

from __future__ import annotations

import json
from typing import Any, TextIO

from .decompose import SubsetWitness, TwoColoring
from .errors import LoopEdge, NotDecomposable, ParseError, VertexOutOfRange
from .multigraph import Multigraph
from .oracle import Mode


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines and blank
    lines are skipped.  Edge ids follow file order."""
    header = None
    n = m = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header values must be non-negative", lineno)
            header = lineno
            n, m = a, b
            continue
        if len(edges) == m:
            raise ParseError(f"more than the {m} edges announced in the header", lineno)
        for w in (a, b):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n, lineno)
        if a == b:
            raise LoopEdge(a, lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def write_edge_list(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Multigraph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def result_document(mode: Mode | str, coloring: TwoColoring | None = None, *,
                    error: NotDecomposable | None = None, exhausted: bool = False,
                    isolated: list[int] | None = None) -> dict[str, Any]:
    """Build the JSON-ready result.

    Keys: ``mode``, ``decomposable``, ``classes`` (decomposable only),
    ``certificate`` (decomposer failures) or ``exhausted`` (oracle failures),
    ``normalization`` (isolated vertices ignored by the decomposer).
    """
    mode = Mode(mode)
    doc: dict[str, Any] = {"mode": mode.value, "decomposable": coloring is not None}
    if coloring is not None:
        doc["classes"] = [sorted(coloring.red), sorted(coloring.blue)]
    elif exhausted:
        doc["exhausted"] = True
    elif error is not None:
        doc["certificate"] = certificate_to_json(mode, error.certificate)
    else:
        raise ValueError("an undecomposable result needs a certificate or exhausted=True")
    doc["normalization"] = sorted(isolated or [])
    return doc


def certificate_to_json(mode: Mode, cert) -> dict[str, Any]:
    if mode is Mode.TWO_ODD:
        return {"y_members": _sets(cert.y_members), "z_members": _sets(cert.z_members)}
    if mode is Mode.EVEN_ODD:
        return {"odd_order_component": sorted(cert)}
    return {"odd_degree_vertex": int(cert)}


def certificate_from_json(mode: Mode, data: dict[str, Any]):
    try:
        if mode is Mode.TWO_ODD:
            return SubsetWitness(
                tuple(frozenset(s) for s in data["y_members"]),
                tuple(frozenset(s) for s in data["z_members"]),
            )
        if mode is Mode.EVEN_ODD:
            return frozenset(data["odd_order_component"])
        return int(data["odd_degree_vertex"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None


def parse_result(text: str) -> dict[str, Any]:
    """Load and shape-check a result document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("result document must be a JSON object")
    try:
        doc["mode"] = Mode(doc["mode"])
    except (KeyError, ValueError):
        raise ParseError(f"missing or unknown mode {doc.get('mode')!r}") from None
    if not isinstance(doc.get("decomposable"), bool):
        raise ParseError("'decomposable' must be true or false")
    if doc["decomposable"]:
        classes = doc.get("classes")
        if (not isinstance(classes, list) or len(classes) != 2
                or not all(isinstance(c, list) and all(isinstance(e, int) for e in c) for c in classes)):
            raise ParseError("'classes' must be two arrays of edge ids")
    elif not doc.get("exhausted") and not isinstance(doc.get("certificate"), dict):
        raise ParseError("undecomposable result needs 'certificate' or 'exhausted'")
    return doc


def coloring_from_result(doc: dict[str, Any]) -> TwoColoring:
    a, b = doc["classes"]
    return TwoColoring(frozenset(a), frozenset(b))


def dump_result(doc: dict[str, Any], fh: TextIO) -> None:
    out = dict(doc)
    out["mode"] = str(out["mode"])
    json.dump(out, fh, indent=2)
    fh.write("\n")


_DOT_COLORS = {
    Mode.TWO_ODD: ("red", "blue"),
    Mode.EVEN_ODD: ("darkgreen", "purple"),
    Mode.TWO_EVEN: ("darkgreen", "teal"),
}


def to_dot(G: Multigraph, doc: dict[str, Any] | None = None) -> str:
    """Undirected DOT; with a decomposable result each edge is coloured by class."""
    style: dict[int, str] = {}
    if doc is not None and doc.get("decomposable"):
        mode = Mode(doc["mode"])
        names = mode.class_names
        for k, cls in enumerate(doc["classes"]):
            for e in cls:
                style[e] = f' color="{_DOT_COLORS[mode][k]}" class="{names[k]}"'
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        lines.append(f'  {u} -- {v} [id="e{i}"{style.get(i, "")}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
