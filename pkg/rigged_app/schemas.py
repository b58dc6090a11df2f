"""Rigged Schemas - msgspec wire types for instances, graphs and command results."""

import msgspec

from rigged_app.algebra import AlgebraData, TypeATuple, Weight
from rigged_app.configurations import MultiplicityArray, RiggedConfiguration

# ============================================
# Instances
# ============================================


class AlgebraSpec(msgspec.Struct, forbid_unknown_fields=True):
    family: str
    rank: int


class FactorSpec(msgspec.Struct, forbid_unknown_fields=True):
    """B^{node, width} repeated ``multiplicity`` times."""

    node: int
    width: int
    multiplicity: int = 1


class InstanceSpec(msgspec.Struct, forbid_unknown_fields=True):
    """A problem instance as read from a JSON file.

    ``element`` lists, per node, [length, label] pairs in any order.
    """

    algebra: AlgebraSpec
    factors: list[FactorSpec]
    weight: list[int] | None = None
    lam: list[int] | None = msgspec.field(default=None, name="lambda")
    element: list[list[list[int]]] | None = None
    max_vertices: int | None = None


def to_algebra(spec: InstanceSpec) -> AlgebraData:
    return AlgebraData(spec.algebra.family, spec.algebra.rank)


def to_multiplicities(spec: InstanceSpec) -> MultiplicityArray:
    counts: dict[tuple[int, int], int] = {}
    for factor in spec.factors:
        if factor.multiplicity < 1:
            raise ValueError(f"multiplicity of B^{{{factor.node},{factor.width}}} must be positive")
        key = (factor.node, factor.width)
        counts[key] = counts.get(key, 0) + factor.multiplicity
    return MultiplicityArray.of(counts)


def to_weight(spec: InstanceSpec, alg: AlgebraData) -> Weight | None:
    """Λ from ``weight``, or from ``lambda`` in type A; None when neither is given."""
    lam = to_type_a_tuple(spec, alg)
    if spec.weight is not None:
        if len(spec.weight) != alg.rank:
            raise ValueError(f"weight {spec.weight} has {len(spec.weight)} entries, {alg} needs {alg.rank}")
        weight = Weight(tuple(spec.weight))
        if lam is not None:
            lam.check_matches(weight)
        return weight
    return lam.to_weight() if lam is not None else None


def to_type_a_tuple(spec: InstanceSpec, alg: AlgebraData) -> TypeATuple | None:
    if spec.lam is None:
        return None
    if not alg.is_type_a:
        raise ValueError(f"a type-A tuple was given for {alg}")
    if len(spec.lam) != alg.rank + 1:
        raise ValueError(f"λ={spec.lam} needs {alg.rank + 1} entries for {alg}")
    return TypeATuple(tuple(spec.lam))


def to_element(spec: InstanceSpec, alg: AlgebraData) -> RiggedConfiguration | None:
    if spec.element is None:
        return None
    if len(spec.element) != alg.rank:
        raise ValueError(f"element has {len(spec.element)} rigged partitions, {alg} needs {alg.rank}")
    nodes = []
    for node in spec.element:
        strings = []
        for pair in node:
            if len(pair) != 2:
                raise ValueError(f"string {pair} must be [length, label]")
            strings.append((pair[0], pair[1]))
        nodes.append(strings)
    return RiggedConfiguration.of(*nodes)


# ============================================
# Graphs
# ============================================


class GraphVertex(msgspec.Struct, forbid_unknown_fields=True):
    id: str
    weight: list[int] | None = None
    cocharge: int | None = None


class GraphEdge(msgspec.Struct, forbid_unknown_fields=True):
    source: str
    target: str
    color: int


class GraphDocument(msgspec.Struct, forbid_unknown_fields=True):
    colors: list[int]
    vertices: list[GraphVertex]
    edges: list[GraphEdge]


# ============================================
# Results
# ============================================


class HighestWeightResult(msgspec.Struct):
    algebra: str
    weight: list[int]
    elements: list[str]


class FiberSize(msgspec.Struct):
    weight: list[int]
    size: int


class ClosureResult(msgspec.Struct):
    algebra: str
    size: int
    components: int
    fibers: list[FiberSize]


class AxiomEntry(msgspec.Struct):
    axiom: str
    passed: bool
    skipped: bool = False
    witness: str | None = None


class VerifyResult(msgspec.Struct):
    summary: str
    passed: bool
    size: int
    components: int
    axioms: list[AxiomEntry]
    violations: list[str]


class PolynomialResult(msgspec.Struct):
    lam: list[int] = msgspec.field(name="lambda")
    terms: list[tuple[int, int]]
    direct: list[tuple[int, int]] | None = None


class ExtendedResult(msgspec.Struct):
    element: str
    member: bool
    witness: list[list[int]] | None = None
    vacancies: dict[str, int] = {}


class ElementResult(msgspec.Struct):
    operation: str
    element: str
    result: str | None


class OracleEntry(msgspec.Struct):
    weight: list[int]
    paths: int
    rigged: int
    isomorphic: bool | None = None


class OracleResult(msgspec.Struct):
    passed: bool
    entries: list[OracleEntry]
