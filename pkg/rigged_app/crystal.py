"""Crystal - Kashiwara operators on rigged configurations and crystal graphs.

f_a picks, among the strings of ν^(a) with the smallest nonpositive label s, one of
largest length k (the virtual string (0, 0) when every label is positive), makes it
(k+1, s-1), and shifts every other label so its colabel is unchanged. e_a picks, among
the strings with the smallest negative label, one of smallest length and shortens it.
"""

import itertools
import logging
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Iterator

import networkx as nx

from rigged_app.algebra import AlgebraData, Weight
from rigged_app.conf import max_vertices
from rigged_app.configurations import (
    MultiplicityArray,
    RiggedConfiguration,
    String,
    cocharge,
    colabels,
    dominant_weights,
    enumerate_configs,
    is_admissible,
    vacancy_numbers,
    weight,
)
from rigged_app.exceptions import ResourceLimitExceeded

logger = logging.getLogger(__name__)


# ============================================
# Crystal graphs
# ============================================


class CrystalGraph:
    """Edge-colored directed graph on hashable vertices, backed by a networkx MultiDiGraph.

    An edge (x, a, y) means f_a(x) = y; the color is the edge key. Vertices may carry
    a weight and a cocharge.
    """

    def __init__(self, colors: Iterable[int] = ()):
        self._graph = nx.MultiDiGraph()
        self.colors = tuple(sorted(set(colors)))

    @property
    def graph(self) -> nx.MultiDiGraph:
        return self._graph

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, vertex: Hashable) -> bool:
        return vertex in self._graph

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._graph.nodes)

    def add_vertex(
        self, vertex: Hashable, weight: Weight | None = None, cocharge: int | None = None
    ) -> None:
        self._graph.add_node(vertex, weight=weight, cocharge=cocharge)

    def add_edge(self, source: Hashable, color: int, target: Hashable) -> None:
        self._graph.add_edge(source, target, key=color)

    @property
    def vertices(self) -> list[Hashable]:
        return list(self._graph.nodes)

    @property
    def edges(self) -> list[tuple[Hashable, int, Hashable]]:
        return [(s, c, t) for s, t, c in self._graph.edges(keys=True)]

    def weight(self, vertex: Hashable) -> Weight | None:
        return self._graph.nodes[vertex].get("weight")

    def cocharge(self, vertex: Hashable) -> int | None:
        return self._graph.nodes[vertex].get("cocharge")

    def successor(self, vertex: Hashable, color: int) -> Hashable | None:
        for _, target, key in self._graph.out_edges(vertex, keys=True):
            if key == color:
                return target
        return None

    def predecessor(self, vertex: Hashable, color: int) -> Hashable | None:
        for source, _, key in self._graph.in_edges(vertex, keys=True):
            if key == color:
                return source
        return None

    def sources(self) -> list[Hashable]:
        return [v for v in self._graph.nodes if self._graph.in_degree(v) == 0]

    def is_connected(self) -> bool:
        return len(self) > 0 and nx.is_weakly_connected(self._graph)

    def subgraph(self, vertices: Iterable[Hashable]) -> "CrystalGraph":
        keep = set(vertices)
        sub = CrystalGraph(self.colors)
        for vertex in self._graph.nodes:
            if vertex in keep:
                sub.add_vertex(vertex, self.weight(vertex), self.cocharge(vertex))
        for source, color, target in self.edges:
            if source in keep and target in keep:
                sub.add_edge(source, color, target)
        return sub

    def components(self) -> list["CrystalGraph"]:
        """Weakly connected components, ordered by first vertex insertion."""
        order = {v: n for n, v in enumerate(self._graph.nodes)}
        parts = sorted(
            nx.weakly_connected_components(self._graph),
            key=lambda part: min(order[v] for v in part),
        )
        return [self.subgraph(part) for part in parts]


def closure_graph(
    seeds: Iterable[Hashable],
    colors: Iterable[int],
    lower: Callable[[Hashable, int], Hashable | None],
    raise_: Callable[[Hashable, int], Hashable | None],
    *,
    annotate: Callable[[Hashable], tuple[Weight | None, int | None]] | None = None,
    limit: int | None = None,
) -> CrystalGraph:
    """Breadth-first closure of ``seeds`` under the lowering and raising operators.

    Raises:
        ResourceLimitExceeded: more than ``limit`` vertices were reached.
    """
    cap = max_vertices(limit)
    graph = CrystalGraph(colors)
    queue: deque[Hashable] = deque()

    def visit(vertex: Hashable) -> None:
        if vertex in graph:
            return
        if len(graph) >= cap:
            logger.error(f"closure stopped at the vertex cap {cap}")
            raise ResourceLimitExceeded(cap)
        weight_, cocharge_ = annotate(vertex) if annotate else (None, None)
        graph.add_vertex(vertex, weight_, cocharge_)
        queue.append(vertex)

    for seed in seeds:
        visit(seed)
    while queue:
        vertex = queue.popleft()
        for color in graph.colors:
            lowered = lower(vertex, color)
            if lowered is not None:
                visit(lowered)
                graph.add_edge(vertex, color, lowered)
            raised = raise_(vertex, color)
            if raised is not None:
                visit(raised)
                graph.add_edge(raised, color, vertex)
    return graph


# ============================================
# Kashiwara operators
# ============================================


def _stable_vacancy(L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData) -> int:
    """p_∞^(a) = ⟨h_a, wt(ν, J)⟩."""
    return weight(L, rc, alg).pairing(a)


def _min_label(rc: RiggedConfiguration, a: int) -> int:
    """s = min(0, smallest label of ν^(a))."""
    return min((0, *rc.labels(a)))


def phi(L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData) -> int:
    """φ_a = p_∞^(a) - s."""
    alg.check_node(a)
    return _stable_vacancy(L, rc, a, alg) - _min_label(rc, a)


def eps(L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData) -> int:
    """ε_a = -s."""
    alg.check_node(a)
    return -_min_label(rc, a)


def _shifted(
    rc: RiggedConfiguration,
    a: int,
    alg: AlgebraData,
    selected: String | None,
    replacement: String | None,
    moved: Callable[[int], bool],
    sign: int,
) -> RiggedConfiguration:
    """Replace one copy of ``selected`` at node a; shift the other labels at node b by
    sign·A_ab on strings whose length satisfies ``moved``."""
    nodes = []
    for b in alg.nodes:
        shift = sign * alg.pairing(a, b)
        pending = b == a and selected is not None
        updated = []
        for length, label in rc.strings(b):
            if pending and (length, label) == selected:
                pending = False
                if replacement is not None:
                    updated.append(replacement)
                continue
            if shift and moved(length):
                label += shift
            updated.append((length, label))
        if b == a and selected is None and replacement is not None:
            updated.append(replacement)
        nodes.append(updated)
    return RiggedConfiguration.of(*nodes)


Selection = tuple[String | None, String | None, int]


def selection(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData, *, lower: bool
) -> Selection | None:
    """(selected string, its replacement, k) for f_a or e_a; None when undefined.

    A selected string of None stands for the virtual string of length 0.
    """
    alg.check_node(a)
    s = _min_label(rc, a)
    if lower:
        if phi(L, rc, a, alg) == 0:
            return None
        k = max((i for i, x in rc.strings(a) if x == s), default=0)
        return ((k, s) if k else None), (k + 1, s - 1), k
    if s == 0:
        return None
    k = min(i for i, x in rc.strings(a) if x == s)
    return (k, s), ((k - 1, s + 1) if k > 1 else None), k


def f(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData
) -> RiggedConfiguration | None:
    """f_a(ν, J), or None when φ_a = 0."""
    picked = selection(L, rc, a, alg, lower=True)
    if picked is None:
        return None
    selected, replacement, k = picked
    # colabel preservation: p_i^(b) drops by A_ab for i > k
    return _shifted(rc, a, alg, selected, replacement, lambda i: i > k, -1)


def e(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData
) -> RiggedConfiguration | None:
    """e_a(ν, J), or None when ν^(a) has no negative label."""
    picked = selection(L, rc, a, alg, lower=False)
    if picked is None:
        return None
    selected, replacement, k = picked
    # p_i^(b) rises by A_ab for i >= k
    return _shifted(rc, a, alg, selected, replacement, lambda i: i >= k, 1)


def f_string(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData
) -> list[RiggedConfiguration]:
    """rc, f_a rc, f_a² rc, ... until undefined."""
    chain = [rc]
    while (nxt := f(L, chain[-1], a, alg)) is not None:
        chain.append(nxt)
    return chain


def e_string(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData
) -> list[RiggedConfiguration]:
    chain = [rc]
    while (nxt := e(L, chain[-1], a, alg)) is not None:
        chain.append(nxt)
    return chain


def to_highest_weight(
    L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData
) -> tuple[RiggedConfiguration, tuple[int, ...]]:
    """Raise until every e_a is undefined; returns the element and the colors used."""
    word = []
    current = rc
    while True:
        for a in alg.nodes:
            raised = e(L, current, a, alg)
            if raised is not None:
                current = raised
                word.append(a)
                break
        else:
            return current, tuple(word)


def reflect(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData
) -> RiggedConfiguration:
    """Weyl group action s_a on the a-string through rc."""
    shift = phi(L, rc, a, alg) - eps(L, rc, a, alg)
    step = f if shift > 0 else e
    current = rc
    for _ in range(abs(shift)):
        current = step(L, current, a, alg)
    return current


# ============================================
# Highest weight elements and closures
# ============================================


def highest_weight_rcs(
    L: MultiplicityArray, weight_: Weight, alg: AlgebraData
) -> list[RiggedConfiguration]:
    """Rigged configurations with every label in [0, p_i^(a)], for dominant Λ.

    Raises:
        ValueError: Λ is not dominant.
    """
    if not weight_.is_dominant:
        raise ValueError(f"highest weight {weight_} is not dominant")
    found = []
    for nu in enumerate_configs(L, weight_, alg):
        if not is_admissible(L, nu, alg):
            continue
        vac = vacancy_numbers(L, nu, alg)
        cells = [(a, i, m) for a in alg.nodes for i, m in sorted(nu.multiplicities()[a - 1].items())]
        options = [_boxed_riggings(m, vac[(a, i)]) for a, i, m in cells]
        for choice in itertools.product(*options):
            nodes: list[list[String]] = [[] for _ in alg.nodes]
            for (a, i, _), labels in zip(cells, choice, strict=True):
                nodes[a - 1].extend((i, x) for x in labels)
            found.append(RiggedConfiguration.of(*nodes))
    return found


def _boxed_riggings(m: int, p: int) -> list[tuple[int, ...]]:
    """Partitions with m parts (zeros allowed) fitting in an m × p box."""
    return list(itertools.combinations_with_replacement(range(p, -1, -1), m))


def _annotator(L: MultiplicityArray, alg: AlgebraData):
    def annotate(rc: RiggedConfiguration) -> tuple[Weight, int]:
        return weight(L, rc, alg), cocharge(rc, alg)

    return annotate


def generate_component(
    L: MultiplicityArray,
    seed: RiggedConfiguration,
    alg: AlgebraData,
    *,
    limit: int | None = None,
) -> CrystalGraph:
    """Close ``seed`` under every defined e_a and f_a."""
    if seed.rank != alg.rank:
        raise ValueError(f"seed has {seed.rank} nodes, {alg} has {alg.rank}")
    return closure_graph(
        [seed],
        alg.nodes,
        lambda rc, a: f(L, rc, a, alg),
        lambda rc, a: e(L, rc, a, alg),
        annotate=_annotator(L, alg),
        limit=limit,
    )


class RiggedConfigurationSet:
    """RC(L): the closure of all highest weight rigged configurations.

    Attributes:
        graph: the full crystal graph.
        highest_weights: (Λ, highest weight element) per component, in generation order.
        fibers: elements grouped by weight.
        colabel_violations: elements with a negative colabel (monitored, not assumed).
    """

    def __init__(
        self,
        L: MultiplicityArray,
        alg: AlgebraData,
        graph: CrystalGraph,
        highest_weights: list[tuple[Weight, RiggedConfiguration]],
    ):
        self.L = L
        self.alg = alg
        self.graph = graph
        self.highest_weights = highest_weights
        self.fibers: dict[Weight, list[RiggedConfiguration]] = {}
        for rc in graph:
            self.fibers.setdefault(graph.weight(rc), []).append(rc)
        self.colabel_violations = [
            rc for rc in graph if any(c < 0 for node in colabels(L, rc, alg) for c in node)
        ]

    def __len__(self) -> int:
        return len(self.graph)

    def __contains__(self, rc: RiggedConfiguration) -> bool:
        return rc in self.graph

    def __iter__(self) -> Iterator[RiggedConfiguration]:
        return iter(self.graph)

    @property
    def elements(self) -> frozenset[RiggedConfiguration]:
        return frozenset(self.graph)

    def fiber(self, weight_: Weight) -> list[RiggedConfiguration]:
        return self.fibers.get(weight_, [])

    def components(self) -> list[tuple[RiggedConfiguration, CrystalGraph]]:
        """(highest weight element, component graph) pairs."""
        parts = []
        for component in self.graph.components():
            sources = component.sources()
            parts.append((sources[0], component))
        return parts


def generate_rc_set(
    L: MultiplicityArray, alg: AlgebraData, *, limit: int | None = None
) -> RiggedConfigurationSet:
    """RC(L) with its crystal graph and weight fibers."""
    seeds: list[tuple[Weight, RiggedConfiguration]] = []
    for weight_, _ in dominant_weights(L, alg):
        seeds.extend((weight_, rc) for rc in highest_weight_rcs(L, weight_, alg))
    logger.info(f"generating RC({L}) in {alg} from {len(seeds)} highest weight elements")
    graph = closure_graph(
        [rc for _, rc in seeds],
        alg.nodes,
        lambda rc, a: f(L, rc, a, alg),
        lambda rc, a: e(L, rc, a, alg),
        annotate=_annotator(L, alg),
        limit=limit,
    )
    result = RiggedConfigurationSet(L, alg, graph, seeds)
    logger.info(f"RC({L}) has {len(result)} elements in {len(seeds)} components")
    if result.colabel_violations:
        logger.warning(
            f"{len(result.colabel_violations)} elements of RC({L}) in {alg} "
            f"have a negative colabel"
        )
    return result


def weight_orbit_sizes(rc_set: RiggedConfigurationSet) -> dict[Weight, int]:
    """|RC(L, Λ)| per weight."""
    return {w: len(rcs) for w, rcs in sorted(rc_set.fibers.items(), reverse=True)}

