"""Stembridge - local axioms (P1)-(P6), (P5'), (P6') for simply-laced crystal graphs.

Every quantity is read off the i-strings of the graph itself, so any edge-colored
graph can be checked, not only closures of rigged configurations. With δ_i = -ε_i:

    Δ_i δ_j(x) = δ_j(e_i x) - δ_j(x)      Δ_i φ_j(x) = φ_j(e_i x) - φ_j(x)
    ∇_i δ_j(y) = δ_j(y) - δ_j(f_i y)      ∇_i φ_j(y) = φ_j(y) - φ_j(f_i y)
"""

import itertools
import logging
from collections import deque
from collections.abc import Callable, Hashable

import msgspec
import networkx as nx

from rigged_app.algebra import AlgebraData, simple_root
from rigged_app.crystal import CrystalGraph
from rigged_app.exceptions import MalformedGraphError

logger = logging.getLogger(__name__)

AXIOMS = ("P1", "P2", "P3", "P4", "P5", "P6", "P5'", "P6'")


class Witness(msgspec.Struct, frozen=True):
    """Vertices and colors that exhibit a violation, with the observed quantities."""

    vertices: tuple[str, ...]
    colors: tuple[int, ...]
    values: dict[str, int] = {}
    message: str = ""


class AxiomResult(msgspec.Struct, frozen=True):
    axiom: str
    passed: bool
    skipped: bool = False
    witness: Witness | None = None


class AxiomReport(msgspec.Struct, frozen=True):
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed and not r.skipped]

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise LookupError(f"no result for axiom {axiom}")

    def summary(self) -> str:
        if self.passed:
            return "axioms: all pass"
        parts = []
        for r in self.failures():
            detail = r.witness.message if r.witness else ""
            parts.append(f"{r.axiom} failed ({detail})")
        return "axioms: " + "; ".join(parts)


class _Strings:
    """Memoized ε/φ on a graph whose color classes are paths."""

    def __init__(self, graph: CrystalGraph):
        self.graph = graph
        self._eps: dict[tuple[Hashable, int], int] = {}
        self._phi: dict[tuple[Hashable, int], int] = {}

    def e(self, x: Hashable, i: int) -> Hashable | None:
        return self.graph.predecessor(x, i)

    def f(self, x: Hashable, i: int) -> Hashable | None:
        return self.graph.successor(x, i)

    def eps(self, x: Hashable, i: int) -> int:
        key = (x, i)
        if key not in self._eps:
            count, current = 0, self.e(x, i)
            while current is not None:
                count, current = count + 1, self.e(current, i)
            self._eps[key] = count
        return self._eps[key]

    def phi(self, x: Hashable, i: int) -> int:
        key = (x, i)
        if key not in self._phi:
            count, current = 0, self.f(x, i)
            while current is not None:
                count, current = count + 1, self.f(current, i)
            self._phi[key] = count
        return self._phi[key]

    def delta_delta(self, x: Hashable, i: int, j: int) -> int:
        """Δ_i δ_j(x), needs e_i x."""
        return self.eps(x, j) - self.eps(self.e(x, i), j)

    def delta_phi(self, x: Hashable, i: int, j: int) -> int:
        """Δ_i φ_j(x), needs e_i x."""
        return self.phi(self.e(x, i), j) - self.phi(x, j)

    def nabla_phi(self, y: Hashable, i: int, j: int) -> int:
        """∇_i φ_j(y), needs f_i y."""
        return self.phi(y, j) - self.phi(self.f(y, i), j)

    def walk(self, x: Hashable, word: str, colors: tuple[int, ...]) -> Hashable | None:
        """Apply ``word`` (letters e, f) with matching ``colors``, rightmost first."""
        current = x
        for op, color in zip(reversed(word), reversed(colors), strict=True):
            if current is None:
                return None
            current = self.e(current, color) if op == "e" else self.f(current, color)
        return current


def _check_structure(graph: CrystalGraph, alg: AlgebraData) -> None:
    for source, color, target in graph.edges:
        if color not in alg.nodes:
            raise MalformedGraphError(f"edge color {color} is not a node of {alg}")
        if source not in graph or target not in graph:
            raise MalformedGraphError(f"dangling edge {source!r} -> {target!r}")


def _degree_witness(graph: CrystalGraph, label: Callable[[Hashable], str]) -> Witness | None:
    nx_graph = graph.graph
    for vertex in nx_graph.nodes:
        for direction, edges in (
            ("out", nx_graph.out_edges(vertex, keys=True)),
            ("in", nx_graph.in_edges(vertex, keys=True)),
        ):
            per_color: dict[int, int] = {}
            for _, _, color in edges:
                per_color[color] = per_color.get(color, 0) + 1
            for color, count in sorted(per_color.items()):
                if count > 1:
                    return Witness(
                        (label(vertex),),
                        (color,),
                        {f"{direction}_degree": count},
                        f"{count} {direction}-edges of color {color}",
                    )
    return None


def _cycle_witness(graph: CrystalGraph, label: Callable[[Hashable], str]) -> Witness | None:
    for color in sorted({c for _, c, _ in graph.edges}):
        mono = nx.DiGraph()
        mono.add_nodes_from(graph.graph.nodes)
        mono.add_edges_from((s, t) for s, c, t in graph.edges if c == color)
        try:
            list(nx.topological_sort(mono))
        except nx.NetworkXUnfeasible:
            cycle = nx.find_cycle(mono)
            return Witness(
                tuple(label(s) for s, _ in cycle),
                (color,),
                {"cycle_length": len(cycle)},
                f"directed cycle of color {color}",
            )
    return None


def verify_regular(
    graph: CrystalGraph,
    alg: AlgebraData,
    *,
    label: Callable[[Hashable], str] = str,
) -> AxiomReport:
    """Check the local axioms on every vertex and ordered pair of distinct colors.

    (P3)-(P6') are only evaluated when (P1) and (P2) hold, since the string lengths
    they depend on are undefined otherwise. When vertices carry weights a "weight"
    entry checks wt(f_a x) = wt(x) - α_a and φ_a - ε_a = ⟨h_a, wt⟩.

    Raises:
        MalformedGraphError: an edge color outside ``alg`` or a dangling edge.
    """
    _check_structure(graph, alg)
    results: dict[str, AxiomResult] = {}
    cycle = _cycle_witness(graph, label)
    results["P1"] = AxiomResult("P1", cycle is None, witness=cycle)
    degree = _degree_witness(graph, label)
    results["P2"] = AxiomResult("P2", degree is None, witness=degree)
    if cycle is not None or degree is not None:
        for axiom in AXIOMS[2:]:
            results[axiom] = AxiomResult(axiom, False, skipped=True)
        return AxiomReport(tuple(results[a] for a in AXIOMS))

    strings = _Strings(graph)
    found: dict[str, Witness] = {}
    pairs = list(itertools.permutations(alg.nodes, 2))
    for x in graph:
        for i, j in pairs:
            _check_pair(strings, alg, x, i, j, found, label)

    for axiom in AXIOMS[2:]:
        results[axiom] = AxiomResult(axiom, axiom not in found, witness=found.get(axiom))
    ordered = [results[a] for a in AXIOMS]
    if len(graph) and all(graph.weight(v) is not None for v in graph):
        weight_witness = _weight_witness(graph, strings, alg, label)
        ordered.append(AxiomResult("weight", weight_witness is None, witness=weight_witness))
    report = AxiomReport(tuple(ordered))
    if not report.passed:
        logger.debug(f"axiom check failed: {report.summary()}")
    return report


def _check_pair(
    s: _Strings,
    alg: AlgebraData,
    x: Hashable,
    i: int,
    j: int,
    found: dict[str, Witness],
    label: Callable[[Hashable], str],
) -> None:
    a_ij = alg.pairing(i, j)
    ei, ej = s.e(x, i), s.e(x, j)
    fi, fj = s.f(x, i), s.f(x, j)

    if ei is not None:
        dd, dp = s.delta_delta(x, i, j), s.delta_phi(x, i, j)
        values = {"A_ij": a_ij, "Delta_i_delta_j": dd, "Delta_i_phi_j": dp}
        if dd + dp != a_ij and "P3" not in found:
            found["P3"] = Witness((label(x),), (i, j), values, "Δδ + Δφ != A_ij")
        if (dd > 0 or dp > 0) and "P4" not in found:
            found["P4"] = Witness((label(x),), (i, j), values, "positive Δ")

    if ei is not None and ej is not None:
        dd_ij, dd_ji = s.delta_delta(x, i, j), s.delta_delta(x, j, i)
        if dd_ij == 0 and "P5" not in found:
            left, right = s.walk(x, "ee", (i, j)), s.walk(x, "ee", (j, i))
            if left is None or left != right:
                found["P5"] = Witness((label(x),), (i, j), {"Delta_i_delta_j": 0}, "e_i e_j x != e_j e_i x")
            elif s.nabla_phi(left, j, i) != 0:
                found["P5"] = Witness(
                    (label(x), label(left)), (i, j),
                    {"Nabla_j_phi_i": s.nabla_phi(left, j, i)}, "∇_j φ_i(y) != 0",
                )
        if dd_ij == dd_ji == -1 and "P6" not in found:
            left = s.walk(x, "eeee", (i, j, j, i))
            right = s.walk(x, "eeee", (j, i, i, j))
            if left is None or left != right:
                found["P6"] = Witness(
                    (label(x),), (i, j), {"Delta_i_delta_j": -1, "Delta_j_delta_i": -1},
                    "e_i e_j² e_i x != e_j e_i² e_j x",
                )
            else:
                values = {"Nabla_i_phi_j": s.nabla_phi(left, i, j), "Nabla_j_phi_i": s.nabla_phi(left, j, i)}
                if values["Nabla_i_phi_j"] != -1 or values["Nabla_j_phi_i"] != -1:
                    found["P6"] = Witness((label(x), label(left)), (i, j), values, "∇φ != -1")

    if fi is not None and fj is not None:
        np_ij, np_ji = s.nabla_phi(x, i, j), s.nabla_phi(x, j, i)
        if np_ij == 0 and "P5'" not in found:
            left, right = s.walk(x, "ff", (i, j)), s.walk(x, "ff", (j, i))
            if left is None or left != right:
                found["P5'"] = Witness((label(x),), (i, j), {"Nabla_i_phi_j": 0}, "f_i f_j x != f_j f_i x")
            elif s.delta_delta(left, j, i) != 0:
                found["P5'"] = Witness(
                    (label(x), label(left)), (i, j),
                    {"Delta_j_delta_i": s.delta_delta(left, j, i)}, "Δ_j δ_i(y) != 0",
                )
        if np_ij == np_ji == -1 and "P6'" not in found:
            left = s.walk(x, "ffff", (i, j, j, i))
            right = s.walk(x, "ffff", (j, i, i, j))
            if left is None or left != right:
                found["P6'"] = Witness(
                    (label(x),), (i, j), {"Nabla_i_phi_j": -1, "Nabla_j_phi_i": -1},
                    "f_i f_j² f_i x != f_j f_i² f_j x",
                )
            else:
                values = {"Delta_i_delta_j": s.delta_delta(left, i, j), "Delta_j_delta_i": s.delta_delta(left, j, i)}
                if values["Delta_i_delta_j"] != -1 or values["Delta_j_delta_i"] != -1:
                    found["P6'"] = Witness((label(x), label(left)), (i, j), values, "Δδ != -1")


def _weight_witness(
    graph: CrystalGraph, s: _Strings, alg: AlgebraData, label: Callable[[Hashable], str]
) -> Witness | None:
    for source, color, target in graph.edges:
        expected = graph.weight(source) - simple_root(alg, color)
        if graph.weight(target) != expected:
            return Witness(
                (label(source), label(target)), (color,), {}, f"wt(f_{color} x) != wt(x) - α_{color}"
            )
    for x in graph:
        for a in alg.nodes:
            gap = s.phi(x, a) - s.eps(x, a)
            if gap != graph.weight(x).pairing(a):
                return Witness(
                    (label(x),), (a,), {"phi_minus_eps": gap, "pairing": graph.weight(x).pairing(a)},
                    "φ - ε != ⟨h_a, wt⟩",
                )
    return None


def _unique_source(graph: CrystalGraph) -> Hashable:
    if not graph.is_connected():
        raise ValueError("isomorphism test needs a connected graph")
    sources = graph.sources()
    if len(sources) != 1:
        raise ValueError(f"isomorphism test needs a unique source, found {len(sources)}")
    return sources[0]


def isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    """Color-synchronized traversal from the unique sources.

    Raises:
        ValueError: either graph is disconnected or lacks a unique source.
    """
    start1, start2 = _unique_source(g1), _unique_source(g2)
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    forward = {start1: start2}
    backward = {start2: start1}
    queue = deque([(start1, start2)])
    colors = sorted(set(g1.colors) | set(g2.colors))
    while queue:
        x1, x2 = queue.popleft()
        for color in colors:
            for step1, step2 in (
                (g1.successor(x1, color), g2.successor(x2, color)),
                (g1.predecessor(x1, color), g2.predecessor(x2, color)),
            ):
                if (step1 is None) != (step2 is None):
                    return False
                if step1 is None:
                    continue
                if step1 in forward or step2 in backward:
                    if forward.get(step1) != step2 or backward.get(step2) != step1:
                        return False
                    continue
                forward[step1] = step2
                backward[step2] = step1
                queue.append((step1, step2))
    return len(forward) == len(g1)
