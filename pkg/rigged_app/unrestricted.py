"""Unrestricted - type-A lower bounds, extended rigged configurations, fermionic formula.

For λ = (λ_1, ..., λ_n) let c_k = λ_{k+1} + ... + λ_n and c_0 = c_1. A(λ′) is the set of
tableaux whose column k (1 <= k <= n-1) is a strictly decreasing c_k-subset of
{1, ..., c_{k-1}}. Each tableau t bounds the labels of length-i strings at node a
from below by

    M_i^(a)(t) = -#{entries of column a that are <= i} + #{entries of column a+1 that are <= i}

with column n empty. An element of RC(L, λ) is exactly a rigged configuration whose
labels for some single t lie between M(t) and the vacancy numbers.
"""

import itertools
import logging

import msgspec

from rigged_app.algebra import AlgebraData, TypeATuple
from rigged_app.conf import get_rigged_config
from rigged_app.configurations import (
    Configuration,
    MultiplicityArray,
    RiggedConfiguration,
    config_sizes,
    configuration_cocharge,
    enumerate_configs,
    vacancy_numbers,
)
from rigged_app.crystal import RiggedConfigurationSet, generate_rc_set
from rigged_app.polynomials import LaurentPolynomial, q_binomial

logger = logging.getLogger(__name__)

BoundVector = tuple[tuple[int, ...], ...]


# ============================================
# Types
# ============================================


class LowerBoundTableau(msgspec.Struct, frozen=True):
    """An element of A(λ′): ``columns[k-1]`` is column k, strictly decreasing."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for column in self.columns:
            if any(entry < 1 for entry in column):
                raise ValueError(f"tableau entries must be positive: {column}")
            if any(upper <= lower for upper, lower in itertools.pairwise(column)):
                raise ValueError(f"column {column} is not strictly decreasing")

    @property
    def n(self) -> int:
        return len(self.columns) + 1

    def column(self, k: int) -> tuple[int, ...]:
        """Column k, empty for k = n."""
        return self.columns[k - 1] if k <= len(self.columns) else ()

    def rows_weakly_decreasing(self) -> bool:
        height = max((len(c) for c in self.columns), default=0)
        for j in range(height):
            row = [c[j] for c in self.columns if len(c) > j]
            if any(left < right for left, right in itertools.pairwise(row)):
                return False
        return True

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.columns]


class QuasipartitionSpec(msgspec.Struct, frozen=True):
    """Tuples M <= μ_m <= ... <= μ_1 <= p."""

    lower: int
    upper: int
    parts: int

    def __post_init__(self):
        if self.parts < 0:
            raise ValueError(f"part count must be nonnegative, got {self.parts}")

    @property
    def is_empty(self) -> bool:
        return self.parts > 0 and self.upper < self.lower

    def contains(self, labels: tuple[int, ...]) -> bool:
        return len(labels) == self.parts and all(self.lower <= x <= self.upper for x in labels)


def quasipartitions(spec: QuasipartitionSpec) -> list[tuple[int, ...]]:
    """All (M, p, m)-quasipartitions, weakly decreasing tuples."""
    return list(
        itertools.combinations_with_replacement(
            range(spec.upper, spec.lower - 1, -1), spec.parts
        )
    )


def _require_type_a(alg: AlgebraData, lam: TypeATuple | None = None) -> None:
    if not alg.is_type_a:
        raise ValueError(f"lower-bound tableaux are defined in type A only, got {alg}")
    if lam is not None and lam.n != alg.rank + 1:
        raise ValueError(f"λ={lam} has {lam.n} entries, {alg} needs {alg.rank + 1}")


# ============================================
# Lower bounds
# ============================================


def enumerate_lower_bound_tableaux(lam: TypeATuple) -> list[LowerBoundTableau]:
    """A(λ′) in a fixed order: column 1 varies slowest, each column in combinations order."""
    lengths = lam.column_lengths()
    per_column = [
        list(itertools.combinations(range(lengths[k - 1], 0, -1), lengths[k]))
        for k in range(1, lam.n)
    ]
    return [LowerBoundTableau(tuple(choice)) for choice in itertools.product(*per_column)]


def lower_bound(t: LowerBoundTableau, a: int, i: int) -> int:
    """M_i^(a)(t)."""
    if not 1 <= a <= t.n - 1:
        raise ValueError(f"node {a} out of range 1..{t.n - 1}")
    if i < 1:
        raise ValueError(f"string length must be positive, got {i}")
    below = sum(1 for entry in t.column(a) if entry <= i)
    above = sum(1 for entry in t.column(a + 1) if entry <= i)
    return above - below


def bound_vector(t: LowerBoundTableau, cap: int) -> BoundVector:
    """(M_i^(a)(t))_{a, 1<=i<=cap}; the values are constant for i >= cap when cap >= every entry."""
    return tuple(
        tuple(lower_bound(t, a, i) for i in range(1, cap + 1)) for a in range(1, t.n)
    )


def _bound_at(vector: BoundVector, a: int, i: int) -> int:
    row = vector[a - 1]
    return row[min(i, len(row)) - 1]


def _cap(lam: TypeATuple) -> int:
    return max(lam.column_lengths()[0], 1)


def _check_fiber(L: MultiplicityArray, lam: TypeATuple, nu: Configuration, alg: AlgebraData) -> None:
    if lam.total != L.box_count:
        raise ValueError(f"λ={lam} has {lam.total} boxes, L has {L.box_count}")
    sizes = config_sizes(L, lam.to_weight(), alg)
    if sizes is None or nu.sizes() != sizes:
        raise ValueError(f"configuration is not in C(L, λ) for λ={lam}")


def extended_witness(
    L: MultiplicityArray, lam: TypeATuple, rc: RiggedConfiguration, alg: AlgebraData
) -> LowerBoundTableau | None:
    """First t ∈ A(λ′) with M_i^(a)(t) <= every label <= p_i^(a), or None.

    Raises:
        ValueError: non-type-A algebra, or ν ∉ C(L, λ).
    """
    _require_type_a(alg, lam)
    nu = rc.configuration
    _check_fiber(L, lam, nu, alg)
    vac = vacancy_numbers(L, nu, alg)
    strings = [(a, i, x) for a in alg.nodes for i, x in rc.strings(a)]
    if any(x > vac[(a, i)] for a, i, x in strings):
        return None
    for t in enumerate_lower_bound_tableaux(lam):
        if all(x >= lower_bound(t, a, i) for a, i, x in strings):
            return t
    return None


def is_extended_rc(
    L: MultiplicityArray, lam: TypeATuple, rc: RiggedConfiguration, alg: AlgebraData
) -> bool:
    """Membership in the extended set ~RC(L, λ)."""
    return extended_witness(L, lam, rc, alg) is not None


def extended_rcs(
    L: MultiplicityArray, lam: TypeATuple, alg: AlgebraData
) -> set[RiggedConfiguration]:
    """~RC(L, λ) enumerated directly: for each ν and t, every quasipartition rigging."""
    _require_type_a(alg, lam)
    if lam.total != L.box_count:
        raise ValueError(f"λ={lam} has {lam.total} boxes, L has {L.box_count}")
    tableaux = enumerate_lower_bound_tableaux(lam)
    found: set[RiggedConfiguration] = set()
    for nu in enumerate_configs(L, lam.to_weight(), alg):
        vac = vacancy_numbers(L, nu, alg)
        cells = [(a, i, m) for a in alg.nodes for i, m in sorted(nu.multiplicities()[a - 1].items())]
        for t in tableaux:
            options = [
                quasipartitions(QuasipartitionSpec(lower_bound(t, a, i), vac[(a, i)], m))
                for a, i, m in cells
            ]
            for choice in itertools.product(*options):
                nodes: list[list[tuple[int, int]]] = [[] for _ in alg.nodes]
                for (a, i, _), labels in zip(cells, choice, strict=True):
                    nodes[a - 1].extend((i, x) for x in labels)
                found.add(RiggedConfiguration.of(*nodes))
    return found


# ============================================
# Fermionic formula
# ============================================


def signed_lower_bounds(vectors: list[BoundVector]) -> dict[BoundVector, int]:
    """Group Σ_{S ≠ ∅} (-1)^{|S|+1} over subsets S by their componentwise maximum.

    Adding one more tableau either starts a singleton (+1) or joins an existing
    class, flipping its sign.
    """
    classes: dict[BoundVector, int] = {}
    for vector in vectors:
        updated = dict(classes)
        for existing, count in classes.items():
            joined = _join(existing, vector)
            updated[joined] = updated.get(joined, 0) - count
        updated[vector] = updated.get(vector, 0) + 1
        classes = {v: c for v, c in updated.items() if c}
    return classes


def literal_lower_bounds(vectors: list[BoundVector]) -> dict[BoundVector, int]:
    """The same grouping by walking all 2^|A| - 1 subsets."""
    classes: dict[BoundVector, int] = {}
    for size in range(1, len(vectors) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(vectors, size):
            joined = subset[0]
            for vector in subset[1:]:
                joined = _join(joined, vector)
            classes[joined] = classes.get(joined, 0) + sign
    return {v: c for v, c in classes.items() if c}


def _join(left: BoundVector, right: BoundVector) -> BoundVector:
    return tuple(
        tuple(max(x, y) for x, y in zip(row_l, row_r, strict=True))
        for row_l, row_r in zip(left, right, strict=True)
    )


def fermionic_M(
    L: MultiplicityArray, lam: TypeATuple, alg: AlgebraData, *, literal: bool = False
) -> LaurentPolynomial:
    """M(L, λ) = Σ_S (-1)^{|S|+1} Σ_ν q^{cc(ν) + Σ m M(S)} Π [m + p - M(S) choose m].

    Args:
        literal: sum over every nonempty subset of A(λ′) instead of grouped classes.

    Raises:
        ValueError: non-type-A algebra, or ``literal`` with |A(λ′)| above the configured limit.
    """
    _require_type_a(alg, lam)
    if lam.total != L.box_count:
        raise ValueError(f"λ={lam} has {lam.total} boxes, L has {L.box_count}")
    config = get_rigged_config()
    tableaux = enumerate_lower_bound_tableaux(lam)
    if len(tableaux) > config["FERMIONIC_WARN_TABLEAUX"]:
        logger.warning(
            f"|A(λ′)| = {len(tableaux)} for λ={lam}; inclusion-exclusion may be slow"
        )
    cap = _cap(lam)
    vectors = [bound_vector(t, cap) for t in tableaux]
    if literal:
        if len(tableaux) > config["LITERAL_SUBSET_LIMIT"]:
            raise ValueError(
                f"literal subset sum refused for |A(λ′)| = {len(tableaux)} "
                f"> {config['LITERAL_SUBSET_LIMIT']}"
            )
        classes = literal_lower_bounds(vectors)
    else:
        classes = signed_lower_bounds(vectors)

    total = LaurentPolynomial.zero()
    for nu in enumerate_configs(L, lam.to_weight(), alg):
        vac = vacancy_numbers(L, nu, alg)
        base = configuration_cocharge(nu, alg)
        cells = [(a, i, m) for a in alg.nodes for i, m in nu.multiplicities()[a - 1].items()]
        for vector, count in classes.items():
            term = LaurentPolynomial.one()
            exponent = base
            for a, i, m in cells:
                bound = _bound_at(vector, a, i)
                exponent += m * bound
                term = term * q_binomial(m, vac[(a, i)] - bound)
                if not term:
                    break
            if term:
                total = total + term.shift(exponent) * count
    return total


def direct_M(
    L: MultiplicityArray,
    lam: TypeATuple,
    alg: AlgebraData,
    *,
    rc_set: RiggedConfigurationSet | None = None,
) -> LaurentPolynomial:
    """Σ q^{cc} over the weight-λ fiber of the crystal closure RC(L)."""
    _require_type_a(alg, lam)
    if lam.total != L.box_count:
        raise ValueError(f"λ={lam} has {lam.total} boxes, L has {L.box_count}")
    if rc_set is None:
        rc_set = generate_rc_set(L, alg)
    fiber = rc_set.fiber(lam.to_weight())
    return LaurentPolynomial.sum_of_powers(rc_set.graph.cocharge(rc) for rc in fiber)
