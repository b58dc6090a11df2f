"""Promotion - the promotion operator pr and the affine operators e_0, f_0 in type A_{n-1}.

pr embeds (ν, J) into A_n with an empty n-th rigged partition, applies
f_1^{λ_1} ... f_n^{λ_n} (f_n first), then runs ρ exactly λ_n times. Each ρ pass takes
the smallest singular string of the n-th partition and, for k = n-1 down to 1, the
smallest singular string at node k at least as long as the one picked at k+1; the
picked strings are shortened by one and made singular again.
"""

import logging
import math
from functools import lru_cache

import msgspec

from rigged_app.algebra import AlgebraData, TypeATuple
from rigged_app.configurations import (
    MultiplicityArray,
    RiggedConfiguration,
    type_a_tuple,
    vacancy_from_rows,
    weight,
)
from rigged_app.crystal import e, f, generate_rc_set
from rigged_app.exceptions import PromotionError

logger = logging.getLogger(__name__)


class AmbientRC(msgspec.Struct, frozen=True):
    """A type A_{n-1} rigged configuration lifted to A_n; L has no node-n factors."""

    L: MultiplicityArray
    rc: RiggedConfiguration

    @classmethod
    def lift(cls, L: MultiplicityArray, rc: RiggedConfiguration) -> "AmbientRC":
        return cls(L, rc.extend(rc.rank + 1))

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData("A", self.rc.rank)

    @property
    def n(self) -> int:
        return self.rc.rank

    def vacancy(self, a: int, i: int) -> int:
        alg = self.algebra
        return vacancy_from_rows(alg, self.L.rows(alg), self.rc.multiplicities(), a, i)

    def lower(self) -> RiggedConfiguration:
        """Drop the n-th rigged partition, which must be empty."""
        if self.rc.strings(self.n):
            raise PromotionError(self.n, 0, f"rigged partition {self.n} is not empty on exit")
        return RiggedConfiguration(self.rc.partitions[:-1])


def _check_input(L: MultiplicityArray, rc: RiggedConfiguration, lam: TypeATuple) -> AlgebraData:
    alg = lam.algebra
    if rc.rank != alg.rank:
        raise ValueError(f"rigged configuration has {rc.rank} nodes, λ={lam} needs {alg.rank}")
    lam.check_matches(weight(L, rc, alg), L.box_count)
    return alg


def promotion_lift(
    L: MultiplicityArray, rc: RiggedConfiguration, lam: TypeATuple
) -> AmbientRC:
    """Step one of pr: f_1^{λ_1} f_2^{λ_2} ... f_n^{λ_n} in A_n."""
    alg = _check_input(L, rc, lam)
    ambient = AmbientRC.lift(L, rc)
    big = ambient.algebra
    current = ambient.rc
    for a in range(lam.n, 0, -1):
        for _ in range(lam.values[a - 1]):
            lowered = f(L, current, a, big)
            if lowered is None:
                raise PromotionError(a, 0, f"f_{a} undefined while lifting in {big}")
            current = lowered
    longest = [max((i for i, _ in current.strings(a)), default=0) for a in big.nodes]
    for a in range(1, len(longest)):
        if longest[a] > longest[a - 1]:
            raise PromotionError(a + 1, longest[a], "longest parts do not decrease with the node")
    logger.debug(f"promotion lift of {rc.partitions} in {alg} gave {current.partitions}")
    return AmbientRC(L, current)


def _smallest_singular(ambient: AmbientRC, a: int, at_least: int) -> tuple[int, int] | None:
    candidates = [
        (i, x)
        for i, x in ambient.rc.strings(a)
        if i >= at_least and x == ambient.vacancy(a, i)
    ]
    return min(candidates, default=None)


def rho(ambient: AmbientRC) -> AmbientRC:
    """One ρ pass.

    Raises:
        PromotionError: no singular string of admissible length at some node k;
            carries (k, ℓ^(k+1)).
    """
    n = ambient.n
    picks: dict[int, tuple[int, int]] = {}
    length = 0
    for k in range(n, 0, -1):
        pick = _smallest_singular(ambient, k, length)
        if pick is None:
            raise PromotionError(k, length)
        picks[k] = pick
        length = pick[0]

    nodes: list[list[tuple[int, int]]] = []
    for a in range(1, n + 1):
        strings = list(ambient.rc.strings(a))
        strings.remove(picks[a])
        nodes.append(strings)
    shortened = RiggedConfiguration.of(
        *(
            [*node, (picks[a][0] - 1, 0)] if picks[a][0] > 1 else node
            for a, node in enumerate(nodes, start=1)
        )
    )
    # placeholder labels only fix the shape; unpicked labels keep their values
    staged = AmbientRC(ambient.L, shortened)
    result = []
    for a in range(1, n + 1):
        updated = list(nodes[a - 1])
        if picks[a][0] > 1:
            new_length = picks[a][0] - 1
            updated.append((new_length, staged.vacancy(a, new_length)))
        result.append(updated)
    return AmbientRC(ambient.L, RiggedConfiguration.of(*result))


def promote(
    L: MultiplicityArray, rc: RiggedConfiguration, lam: TypeATuple
) -> RiggedConfiguration:
    """pr(ν, J) for rc ∈ RC(L, λ); the weight tuple of the result is λ rotated."""
    ambient = promotion_lift(L, rc, lam)
    for _ in range(lam.values[-1]):
        ambient = rho(ambient)
    return ambient.lower()


class PromotionTable:
    """pr and pr^{-1} on all of RC(L), built once."""

    def __init__(self, L: MultiplicityArray, alg: AlgebraData, *, limit: int | None = None):
        if not alg.is_type_a:
            raise ValueError(f"promotion is defined in type A only, got {alg}")
        self.L = L
        self.alg = alg
        self.rc_set = generate_rc_set(L, alg, limit=limit)
        self.forward: dict[RiggedConfiguration, RiggedConfiguration] = {}
        for rc in self.rc_set:
            self.forward[rc] = promote(L, rc, type_a_tuple(L, rc, alg))
        self.inverse = {image: rc for rc, image in self.forward.items()}
        if len(self.inverse) != len(self.forward):
            logger.warning(f"pr is not injective on RC({L})")
        logger.info(f"promotion table for RC({L}) built with {len(self.forward)} entries")

    @property
    def is_bijection(self) -> bool:
        return len(self.inverse) == len(self.forward) and set(self.inverse) == set(self.forward)

    def order(self) -> int:
        """Order of pr as a permutation of RC(L)."""
        order = 1
        seen: set[RiggedConfiguration] = set()
        for start in self.forward:
            if start in seen:
                continue
            length, current = 0, start
            while current not in seen:
                seen.add(current)
                current = self.forward[current]
                length += 1
            order = math.lcm(order, length)
        return order


@lru_cache(maxsize=32)
def promotion_table(
    L: MultiplicityArray, alg: AlgebraData, *, limit: int | None = None
) -> PromotionTable:
    """Cached per (L, alg, limit); ``limit`` caps the closure of RC(L)."""
    return PromotionTable(L, alg, limit=limit)


def _member(table: PromotionTable, rc: RiggedConfiguration) -> None:
    if rc not in table.forward:
        raise LookupError(f"{rc.partitions} is not in RC({table.L})")


def promote_inverse(
    L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData, *, limit: int | None = None
) -> RiggedConfiguration:
    """pr^{-1}(rc) by inverting the cached table."""
    table = promotion_table(L, alg, limit=limit)
    _member(table, rc)
    return table.inverse[rc]


def promotion_order(L: MultiplicityArray, alg: AlgebraData, *, limit: int | None = None) -> int:
    return promotion_table(L, alg, limit=limit).order()


def f0(
    L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData, *, limit: int | None = None
) -> RiggedConfiguration | None:
    """f_0 = pr^{-1} ∘ f_1 ∘ pr."""
    table = promotion_table(L, alg, limit=limit)
    _member(table, rc)
    lowered = f(L, table.forward[rc], 1, alg)
    return None if lowered is None else table.inverse[lowered]


def e0(
    L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData, *, limit: int | None = None
) -> RiggedConfiguration | None:
    """e_0 = pr^{-1} ∘ e_1 ∘ pr."""
    table = promotion_table(L, alg, limit=limit)
    _member(table, rc)
    raised = e(L, table.forward[rc], 1, alg)
    return None if raised is None else table.inverse[raised]


def eps0(L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData) -> int:
    """Number of times e_0 applies; rc is level-ℓ restricted iff this is <= ℓ."""
    count = 0
    while (rc := e0(L, rc, alg)) is not None:
        count += 1
    return count


def phi0(L: MultiplicityArray, rc: RiggedConfiguration, alg: AlgebraData) -> int:
    count = 0
    while (rc := f0(L, rc, alg)) is not None:
        count += 1
    return count


class CommutationFailure(msgspec.Struct, frozen=True):
    element: RiggedConfiguration
    color: int
    left: RiggedConfiguration
    right: RiggedConfiguration


def commutation_report(L: MultiplicityArray, alg: AlgebraData) -> list[CommutationFailure]:
    """Cases with pr(f_a x) != f_{a+1}(pr x), 1 <= a <= n-2, both sides defined."""
    table = promotion_table(L, alg)
    failures = []
    for rc in table.forward:
        for a in range(1, alg.rank):
            lowered = f(L, rc, a, alg)
            right = f(L, table.forward[rc], a + 1, alg)
            if lowered is None or right is None:
                continue
            left = table.forward[lowered]
            if left != right:
                failures.append(CommutationFailure(rc, a, left, right))
    if failures:
        multi_factor = sum(c for _, _, c in L.entries) > 1
        log = logger.info if multi_factor else logger.warning
        log(f"pr commutation failed {len(failures)} times on RC({L})")
    return failures
