"""Configurations - the static side of rigged configurations.

A configuration ν is a partition per Dynkin node; a rigged configuration attaches an
integer label to every part. Parts are called strings, written (length, label).
Vacancy numbers are always evaluated from scratch here; incremental updates live in
``rigged_app.crystal``.
"""

import itertools
import logging
from collections.abc import Iterable, Mapping

import msgspec
import sympy
from sympy.utilities.iterables import partitions as sympy_partitions

from rigged_app.algebra import AlgebraData, TypeATuple, Weight

logger = logging.getLogger(__name__)

String = tuple[int, int]
Rows = tuple[dict[int, int], ...]


# ============================================
# Multiplicity arrays
# ============================================


class MultiplicityArray(msgspec.Struct, frozen=True):
    """L_i^(a): how many tensor factors B^{a,i} there are.

    ``entries`` holds (node, width, count) triples sorted by (node, width), counts > 0.
    """

    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        keys = [(a, i) for a, i, _ in self.entries]
        if keys != sorted(set(keys)):
            raise ValueError("multiplicity entries must be sorted and unique")
        for a, i, count in self.entries:
            if a < 1 or i < 1 or count < 1:
                raise ValueError(f"invalid multiplicity entry L_{i}^({a}) = {count}")

    @classmethod
    def of(cls, mapping: Mapping[tuple[int, int], int] | None = None) -> "MultiplicityArray":
        """Build from {(node, width): count}; zero counts are dropped."""
        mapping = mapping or {}
        return cls(tuple((a, i, c) for (a, i), c in sorted(mapping.items()) if c))

    @classmethod
    def from_factors(cls, factors: Iterable[tuple[int, int]]) -> "MultiplicityArray":
        counts: dict[tuple[int, int], int] = {}
        for a, i in factors:
            counts[(a, i)] = counts.get((a, i), 0) + 1
        return cls.of(counts)

    def __str__(self) -> str:
        if not self.entries:
            return "L = ∅"
        return ", ".join(f"L_{i}^({a})={c}" for a, i, c in self.entries)

    def get(self, a: int, i: int) -> int:
        for node, width, count in self.entries:
            if (node, width) == (a, i):
                return count
        return 0

    def rows(self, alg: AlgebraData) -> Rows:
        """Per node {width: count}; rejects nodes outside ``alg``."""
        rows: list[dict[int, int]] = [{} for _ in alg.nodes]
        for a, i, count in self.entries:
            if a > alg.rank:
                raise ValueError(f"factor B^{{{a},{i}}} has node outside {alg}")
            rows[a - 1][i] = count
        return tuple(rows)

    @property
    def max_width(self) -> int:
        return max((i for _, i, _ in self.entries), default=0)

    @property
    def box_count(self) -> int:
        """Σ a·i·L_i^(a), the number of boxes of the type-A tableau path."""
        return sum(a * i * c for a, i, c in self.entries)

    def factors(self) -> list[tuple[int, int]]:
        """(node, width) of every tensor factor, repeated by multiplicity."""
        return [(a, i) for a, i, c in self.entries for _ in range(c)]

    def top_weight(self, alg: AlgebraData) -> Weight:
        """Σ i·L_i^(a) Λ_a, the weight of the empty rigged configuration."""
        rows = self.rows(alg)
        return Weight(tuple(sum(i * c for i, c in row.items()) for row in rows))


# ============================================
# Configurations
# ============================================


class Configuration(msgspec.Struct, frozen=True):
    """ν as multiplicities: per node a tuple of (length, m_length) sorted by length."""

    counts: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        for node in self.counts:
            lengths = [i for i, _ in node]
            if lengths != sorted(set(lengths)):
                raise ValueError("configuration lengths must be sorted and unique")
            if any(i < 1 or m < 1 for i, m in node):
                raise ValueError(f"invalid multiplicities {node}")

    @classmethod
    def of_partitions(cls, *partitions: Iterable[int]) -> "Configuration":
        counts = []
        for partition in partitions:
            tally: dict[int, int] = {}
            for part in partition:
                tally[part] = tally.get(part, 0) + 1
            counts.append(tuple(sorted(tally.items())))
        return cls(tuple(counts))

    @property
    def rank(self) -> int:
        return len(self.counts)

    def multiplicities(self) -> Rows:
        return tuple(dict(node) for node in self.counts)

    def multiplicity(self, a: int, i: int) -> int:
        return dict(self.counts[a - 1]).get(i, 0)

    def partition(self, a: int) -> tuple[int, ...]:
        return tuple(i for i, m in reversed(self.counts[a - 1]) for _ in range(m))

    def size(self, a: int) -> int:
        return sum(i * m for i, m in self.counts[a - 1])

    def sizes(self) -> tuple[int, ...]:
        return tuple(self.size(a) for a in range(1, self.rank + 1))

    @property
    def max_part(self) -> int:
        return max((node[-1][0] for node in self.counts if node), default=0)


# ============================================
# Rigged configurations
# ============================================


class RiggedConfiguration(msgspec.Struct, frozen=True):
    """(ν, J): per node the strings (length, label), sorted by (length, label) descending.

    Equality and hashing are by value, so two rigged configurations are equal exactly
    when their canonical forms agree.
    """

    partitions: tuple[tuple[String, ...], ...]

    def __post_init__(self):
        for node in self.partitions:
            if any(length < 1 for length, _ in node):
                raise ValueError(f"string lengths must be positive: {node}")
            if list(node) != sorted(node, reverse=True):
                raise ValueError(f"strings not in canonical order: {node}")

    @classmethod
    def of(cls, *nodes: Iterable[String]) -> "RiggedConfiguration":
        """Canonicalize arbitrary string lists, one per node."""
        return cls(
            tuple(
                tuple(sorted(((int(i), int(x)) for i, x in node), reverse=True))
                for node in nodes
            )
        )

    @classmethod
    def empty(cls, rank: int) -> "RiggedConfiguration":
        return cls(((),) * rank)

    def canonical(self) -> "RiggedConfiguration":
        return RiggedConfiguration.of(*self.partitions)

    @property
    def rank(self) -> int:
        return len(self.partitions)

    @property
    def is_empty(self) -> bool:
        return not any(self.partitions)

    def strings(self, a: int) -> tuple[String, ...]:
        return self.partitions[a - 1]

    def labels(self, a: int) -> tuple[int, ...]:
        return tuple(x for _, x in self.partitions[a - 1])

    def multiplicities(self) -> Rows:
        rows = []
        for node in self.partitions:
            tally: dict[int, int] = {}
            for length, _ in node:
                tally[length] = tally.get(length, 0) + 1
            rows.append(tally)
        return tuple(rows)

    @property
    def configuration(self) -> Configuration:
        return Configuration(tuple(tuple(sorted(row.items())) for row in self.multiplicities()))

    @property
    def max_part(self) -> int:
        return max((node[0][0] for node in self.partitions if node), default=0)

    def label_sum(self) -> int:
        return sum(x for node in self.partitions for _, x in node)

    def extend(self, rank: int) -> "RiggedConfiguration":
        """Pad with empty rigged partitions up to ``rank`` nodes."""
        return RiggedConfiguration(self.partitions + ((),) * (rank - self.rank))


ConfigurationLike = Configuration | RiggedConfiguration


def _check_rank(nu: ConfigurationLike, alg: AlgebraData) -> None:
    if nu.rank != alg.rank:
        raise ValueError(f"configuration has {nu.rank} nodes, {alg} has {alg.rank}")


def _truncated_sum(i: int, row: Mapping[int, int]) -> int:
    return sum(min(i, j) * c for j, c in row.items())


def vacancy_from_rows(alg: AlgebraData, l_rows: Rows, m_rows: Rows, a: int, i: int) -> int:
    value = _truncated_sum(i, l_rows[a - 1])
    for b in alg.nodes:
        ab = alg.pairing(a, b)
        if ab:
            value -= ab * _truncated_sum(i, m_rows[b - 1])
    return value


def stable_index(L: MultiplicityArray, nu: ConfigurationLike) -> int:
    """I_max: the largest part or factor width; vacancy numbers are constant from here on."""
    return max(L.max_width, nu.max_part, 1)


# ============================================
# Operations
# ============================================


def vacancy(L: MultiplicityArray, nu: ConfigurationLike, a: int, i: int, alg: AlgebraData) -> int:
    """p_i^(a) = Σ_j min(i,j) L_j^(a) - Σ_b (α_a|α_b) Σ_j min(i,j) m_j^(b)."""
    alg.check_node(a)
    if i < 0:
        raise ValueError(f"string length must be nonnegative, got {i}")
    _check_rank(nu, alg)
    return vacancy_from_rows(alg, L.rows(alg), nu.multiplicities(), a, i)


def vacancy_numbers(
    L: MultiplicityArray, nu: ConfigurationLike, alg: AlgebraData
) -> dict[tuple[int, int], int]:
    """All p_i^(a) for 1 <= i <= I_max + 1."""
    _check_rank(nu, alg)
    l_rows, m_rows = L.rows(alg), nu.multiplicities()
    top = stable_index(L, nu) + 1
    return {
        (a, i): vacancy_from_rows(alg, l_rows, m_rows, a, i)
        for a in alg.nodes
        for i in range(1, top + 1)
    }


def colabels(
    L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData
) -> tuple[tuple[int, ...], ...]:
    """p_i^(a) - x for every string, in canonical order."""
    _check_rank(rc, alg)
    l_rows, m_rows = L.rows(alg), rc.multiplicities()
    return tuple(
        tuple(vacancy_from_rows(alg, l_rows, m_rows, a, i) - x for i, x in rc.strings(a))
        for a in alg.nodes
    )


def config_sizes(L: MultiplicityArray, weight: Weight, alg: AlgebraData) -> tuple[int, ...] | None:
    """Solve Σ_b A_ab |ν^(b)| = Σ_i i L_i^(a) - ⟨h_a, Λ⟩; None unless the solution is in ℕ^n."""
    if len(weight.coords) != alg.rank:
        raise ValueError(f"weight {weight} does not have rank {alg.rank}")
    top = L.top_weight(alg)
    rhs = sympy.Matrix([t - w for t, w in zip(top.coords, weight.coords, strict=True)])
    solution = alg.cartan_inverse * rhs
    sizes = []
    for value in solution:
        if not value.is_integer or value < 0:
            return None
        sizes.append(int(value))
    return tuple(sizes)


def _partitions_of(size: int) -> list[tuple[int, ...]]:
    if size == 0:
        return [()]
    found = []
    # sympy reuses the yielded dict, so materialize each one
    for parts in sympy_partitions(size):
        found.append(tuple(sorted((k for k, m in parts.items() for _ in range(m)), reverse=True)))
    return sorted(found)


def enumerate_configs(L: MultiplicityArray, weight: Weight, alg: AlgebraData) -> list[Configuration]:
    """C(L, Λ): every ν with the sizes forced by config_sizes."""
    sizes = config_sizes(L, weight, alg)
    if sizes is None:
        return []
    per_node = [_partitions_of(size) for size in sizes]
    return [Configuration.of_partitions(*choice) for choice in itertools.product(*per_node)]


def weight(L: MultiplicityArray, nu: ConfigurationLike, alg: AlgebraData) -> Weight:
    """wt = Σ i (L_i^(a) Λ_a - m_i^(a) α_a)."""
    _check_rank(nu, alg)
    top = L.top_weight(alg)
    sizes = [sum(i * m for i, m in row.items()) for row in nu.multiplicities()]
    return Weight(
        tuple(
            top.coords[a - 1] - sum(alg.pairing(a, b) * sizes[b - 1] for b in alg.nodes)
            for a in alg.nodes
        )
    )


def configuration_cocharge(nu: ConfigurationLike, alg: AlgebraData) -> int:
    """cc(ν) = ½ Σ_{a,b} (α_a|α_b) Σ_{j,k} min(j,k) m_j^(a) m_k^(b)."""
    _check_rank(nu, alg)
    rows = nu.multiplicities()
    doubled = 0
    for a in alg.nodes:
        for b in alg.nodes:
            ab = alg.pairing(a, b)
            if not ab:
                continue
            for j, mj in rows[a - 1].items():
                doubled += ab * mj * _truncated_sum(j, rows[b - 1])
    # the form is even: diagonal terms carry a 2, off-diagonal pairs appear twice
    return doubled // 2


def cocharge(rc: ConfigurationLike, alg: AlgebraData) -> int:
    """cc(ν, J) = cc(ν) + Σ labels; a bare Configuration has no labels."""
    labels = rc.label_sum() if isinstance(rc, RiggedConfiguration) else 0
    return configuration_cocharge(rc, alg) + labels


def is_admissible(L: MultiplicityArray, nu: ConfigurationLike, alg: AlgebraData) -> bool:
    """True iff p_i^(a) >= 0 for every node and every length."""
    return all(p >= 0 for p in vacancy_numbers(L, nu, alg).values())


def validate_rc(L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData) -> bool:
    """True iff every colabel is nonnegative (x <= p_i^(a)) and the strings are canonical."""
    if rc != rc.canonical():
        return False
    return all(c >= 0 for node in colabels(L, rc, alg) for c in node)


def dominant_weights(
    L: MultiplicityArray, alg: AlgebraData
) -> list[tuple[Weight, tuple[int, ...]]]:
    """Every dominant Λ with C(L, Λ) non-empty, with its configuration sizes.

    The inverse Cartan matrix is entrywise positive in finite type, so
    |ν| <= A^{-1} (Σ i L_i^(a) Λ_a) componentwise bounds the search.
    """
    top = L.top_weight(alg)
    bounds = alg.cartan_inverse * sympy.Matrix(top.coords)
    ranges = [range(int(sympy.floor(bound)) + 1) for bound in bounds]
    found = []
    for sizes in itertools.product(*ranges):
        coords = tuple(
            top.coords[a - 1] - sum(alg.pairing(a, b) * sizes[b - 1] for b in alg.nodes)
            for a in alg.nodes
        )
        if all(c >= 0 for c in coords):
            found.append((Weight(coords), tuple(sizes)))
    found.sort(key=lambda item: (sum(item[1]), item[1]))
    logger.debug(f"{len(found)} dominant weights for {L} in {alg}")
    return found


def type_a_tuple(L: MultiplicityArray, nu: ConfigurationLike, alg: AlgebraData) -> TypeATuple:
    """λ for the weight of ν, normalized to the box count of L."""
    if not alg.is_type_a:
        raise ValueError(f"type-A tuples need a type-A algebra, got {alg}")
    return TypeATuple.from_weight(weight(L, nu, alg), L.box_count)
