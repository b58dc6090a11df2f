"""Cross-module checks over the battery of tensor products."""

import pytest

from rigged_app.algebra import AlgebraData, TypeATuple
from rigged_app.configurations import MultiplicityArray, RiggedConfiguration, type_a_tuple
from rigged_app.crystal import generate_rc_set
from rigged_app.invariants import COLABEL_FLOOR, check_invariants
from rigged_app.paths import enumerate_paths, path_weight, shape_of, ssyt_count
from rigged_app.promotion import commutation_report, promotion_table
from rigged_app.stembridge import verify_regular
from rigged_app.unrestricted import direct_M, extended_rcs, fermionic_M
from tests.conftest import A3, BATTERY, D4, WORDS, rc_set_for

BATTERY_IDS = [name for name, _, _ in BATTERY]


@pytest.mark.parametrize("name, L, alg", BATTERY, ids=BATTERY_IDS)
class TestBattery:
    """Every product in the battery is a regular crystal with the expected invariants."""

    def test_axioms(self, name, L, alg):
        assert verify_regular(rc_set_for(L, alg).graph, alg).passed

    def test_invariants(self, name, L, alg):
        assert check_invariants(rc_set_for(L, alg)) == []

    def test_cocharge_constant_on_components(self, name, L, alg):
        for _, component in rc_set_for(L, alg).components():
            assert len({component.cocharge(v) for v in component}) == 1

    def test_cardinality_matches_paths(self, name, L, alg):
        assert len(rc_set_for(L, alg)) == len(enumerate_paths(L.factors(), None, alg.rank + 1))

    def test_fibers_match_paths(self, name, L, alg):
        n = alg.rank + 1
        by_weight: dict = {}
        for b in enumerate_paths(L.factors(), None, n):
            w = path_weight(b, n)
            by_weight[w] = by_weight.get(w, 0) + 1
        rc_set = rc_set_for(L, alg)
        assert by_weight == {w: len(fiber) for w, fiber in rc_set.fibers.items()}

    def test_components_have_tableau_size(self, name, L, alg):
        n = alg.rank + 1
        for hw, component in rc_set_for(L, alg).components():
            assert len(component) == ssyt_count(shape_of(component.weight(hw)), n)

    def test_promotion_is_a_weight_rotating_bijection(self, name, L, alg):
        table = promotion_table(L, alg)
        assert table.is_bijection
        for rc, image in table.forward.items():
            assert type_a_tuple(L, image, alg) == type_a_tuple(L, rc, alg).rotate()

    def test_extended_fibers(self, name, L, alg):
        rc_set = rc_set_for(L, alg)
        for w, fiber in rc_set.fibers.items():
            lam = TypeATuple.from_weight(w, L.box_count)
            assert set(extended_rcs(L, lam, alg)) == set(fiber)

    @pytest.mark.slow
    def test_fermionic_equals_direct(self, name, L, alg):
        rc_set = rc_set_for(L, alg)
        for w in rc_set.fibers:
            lam = TypeATuple.from_weight(w, L.box_count)
            assert fermionic_M(L, lam, alg) == direct_M(L, lam, alg, rc_set=rc_set)


class TestTypeD:
    """B^{2,1} of D_4."""

    def test_size_and_axioms(self, d4_set):
        assert len(d4_set) == 29
        assert len(d4_set.highest_weights) == 2
        assert verify_regular(d4_set.graph, D4).passed

    def test_only_colabel_floor_may_fail(self, d4_set):
        assert {v.invariant for v in check_invariants(d4_set)} <= {COLABEL_FLOOR}

    @pytest.mark.parametrize(
        "rc",
        [
            RiggedConfiguration.of([(1, 0)], [(1, 0), (1, 0)], [(1, 0)], [(1, 0)]),
            RiggedConfiguration.of([(1, 0)], [(1, 0), (1, -1)], [(1, 0)], [(1, 0)]),
        ],
    )
    def test_members(self, d4_set, rc):
        assert rc in d4_set

    def test_non_member(self, d4_set):
        assert RiggedConfiguration.of([(1, 0)], [(1, -1), (1, -1)], [(1, 0)], [(1, 0)]) not in d4_set


class TestWords:
    """(B^{1,1})^{⊗3} of A_3."""

    def test_size(self):
        assert len(generate_rc_set(WORDS, A3)) == 64

    def test_fiber_of_standard_words(self):
        assert len(rc_set_for(WORDS, A3).fiber(TypeATuple.of(1, 1, 1, 0).to_weight())) == 6


SINGLE_FACTORS = [
    (1, 1, 3),
    (1, 2, 3),
    (2, 1, 3),
    (1, 3, 3),
    (2, 2, 3),
    (1, 2, 4),
    (2, 2, 4),
    (3, 1, 4),
    (2, 3, 4),
]


@pytest.mark.parametrize("r, s, n", SINGLE_FACTORS, ids=[f"B{r},{s}-A{n - 1}" for r, s, n in SINGLE_FACTORS])
class TestSingleFactorPromotion:
    """pr on one B^{r,s} of A_{n-1}."""

    def test_bijection_and_order(self, r, s, n):
        table = promotion_table(MultiplicityArray.of({(r, s): 1}), AlgebraData("A", n - 1))
        assert table.is_bijection
        assert len(table.forward) == ssyt_count((s,) * r, n)
        assert n % table.order() == 0

    def test_commutes_with_crystal_operators(self, r, s, n):
        assert commutation_report(MultiplicityArray.of({(r, s): 1}), AlgebraData("A", n - 1)) == []
