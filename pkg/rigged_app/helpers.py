"""Rendering of rigged configurations, polynomials and crystal graphs as text."""

import re
from collections.abc import Callable, Hashable

from rigged_app.algebra import AlgebraData, Weight
from rigged_app.configurations import MultiplicityArray, RiggedConfiguration, vacancy_numbers
from rigged_app.crystal import CrystalGraph
from rigged_app.exceptions import MalformedGraphError
from rigged_app.polynomials import LaurentPolynomial
from rigged_app.schemas import GraphDocument, GraphEdge, GraphVertex


def compact_label(rc: RiggedConfiguration) -> str:
    """One-line form "(2,-1)(1,-1) | (3,-2)"; an empty rigged partition is ∅."""
    nodes = []
    for node in rc.partitions:
        nodes.append("".join(f"({i},{x})" for i, x in node) if node else "∅")
    return " | ".join(nodes)


def render_rc(
    rc: RiggedConfiguration,
    *,
    L: MultiplicityArray | None = None,
    alg: AlgebraData | None = None,
) -> str:
    """Each part drawn as a row of boxes with its label on the right.

    With ``L`` and ``alg`` the vacancy number is printed on the left of each row.
    """
    vac = vacancy_numbers(L, rc, alg) if L is not None and alg is not None else None
    width = 0
    if vac:
        width = max(len(str(p)) for p in vac.values())
    blocks = []
    for a, node in enumerate(rc.partitions, start=1):
        lines = [f"ν^({a}):"]
        if not node:
            lines.append("  ∅")
        for i, x in node:
            left = f"{vac[(a, i)]:>{width}} " if vac else ""
            lines.append(f"  {left}{'□' * i} {x}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks)


def format_polynomial(poly: LaurentPolynomial) -> str:
    """"q^e: c" per line, exponents ascending; the zero polynomial prints as 0."""
    return "\n".join(poly.lines()) if poly else "0"


def format_weight(weight: Weight | None) -> str:
    return "-" if weight is None else str(weight)


# ============================================
# Graph documents
# ============================================


def to_document(graph: CrystalGraph, label: Callable[[Hashable], str] = str) -> GraphDocument:
    """JSON-ready form of ``graph`` with vertices renamed by ``label``."""
    names = {v: label(v) for v in graph}
    if len(set(names.values())) != len(names):
        raise ValueError("vertex labels are not unique")
    vertices = []
    for v in graph:
        weight = graph.weight(v)
        vertices.append(
            GraphVertex(
                names[v],
                list(weight.coords) if weight is not None else None,
                graph.cocharge(v),
            )
        )
    edges = [GraphEdge(names[s], names[t], c) for s, c, t in graph.edges]
    edges.sort(key=lambda edge: (edge.source, edge.color, edge.target))
    return GraphDocument(list(graph.colors), vertices, edges)


def from_document(document: GraphDocument) -> CrystalGraph:
    """Rebuild a CrystalGraph on string vertices.

    Raises:
        MalformedGraphError: duplicate vertices, dangling edges, or unknown colors.
    """
    graph = CrystalGraph(document.colors)
    for vertex in document.vertices:
        if vertex.id in graph:
            raise MalformedGraphError(f"vertex {vertex.id!r} declared twice")
        weight = Weight(tuple(vertex.weight)) if vertex.weight is not None else None
        graph.add_vertex(vertex.id, weight, vertex.cocharge)
    for edge in document.edges:
        if edge.color not in graph.colors:
            raise MalformedGraphError(f"edge color {edge.color} is not declared")
        if edge.source not in graph or edge.target not in graph:
            raise MalformedGraphError(f"dangling edge {edge.source!r} -> {edge.target!r}")
        graph.add_edge(edge.source, edge.color, edge.target)
    return graph


# ============================================
# DOT
# ============================================

_VERTEX = re.compile(r'^\s*"((?:[^"\\]|\\.)*)"\s*\[(.*)\];\s*$')
_EDGE = re.compile(r'^\s*"((?:[^"\\]|\\.)*)"\s*->\s*"((?:[^"\\]|\\.)*)"\s*\[(.*)\];\s*$')
_ATTR = re.compile(r'(\w+)="((?:[^"\\]|\\.)*)"')


def _quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _unquote(text: str) -> str:
    return re.sub(r"\\(.)", r"\1", text)


def to_dot(document: GraphDocument) -> str:
    """DOT text carrying the same information as ``document``."""
    lines = ["digraph crystal {", f'  graph [colors="{",".join(str(c) for c in document.colors)}"];']
    for vertex in document.vertices:
        attrs = [f'label="{_quote(vertex.id)}"']
        if vertex.weight is not None:
            attrs.append(f'weight="{",".join(str(c) for c in vertex.weight)}"')
        if vertex.cocharge is not None:
            attrs.append(f'cocharge="{vertex.cocharge}"')
        lines.append(f'  "{_quote(vertex.id)}" [{", ".join(attrs)}];')
    for edge in document.edges:
        lines.append(f'  "{_quote(edge.source)}" -> "{_quote(edge.target)}" [label="{edge.color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> GraphDocument:
    """Read back the output of to_dot.

    Raises:
        MalformedGraphError: a line that is not part of the exported dialect.
    """
    lines = [line for line in text.strip().splitlines() if line.strip()]
    if not lines or lines[0].strip() != "digraph crystal {" or lines[-1].strip() != "}":
        raise MalformedGraphError("not a crystal DOT document")
    colors: list[int] = []
    vertices: list[GraphVertex] = []
    edges: list[GraphEdge] = []
    for line in lines[1:-1]:
        stripped = line.strip()
        if stripped.startswith("graph ["):
            attrs = dict(_ATTR.findall(stripped))
            colors = [int(c) for c in attrs.get("colors", "").split(",") if c]
        elif match := _EDGE.match(line):
            attrs = dict(_ATTR.findall(match.group(3)))
            edges.append(
                GraphEdge(_unquote(match.group(1)), _unquote(match.group(2)), int(attrs["label"]))
            )
        elif match := _VERTEX.match(line):
            attrs = dict(_ATTR.findall(match.group(2)))
            weight = attrs.get("weight")
            cocharge = attrs.get("cocharge")
            vertices.append(
                GraphVertex(
                    _unquote(match.group(1)),
                    [int(c) for c in weight.split(",")] if weight is not None else None,
                    int(cocharge) if cocharge is not None else None,
                )
            )
        else:
            raise MalformedGraphError(f"unrecognized DOT line: {stripped}")
    return GraphDocument(colors, vertices, edges)
