"""Unit tests for configurations, vacancy numbers, weights and cocharge."""

import pytest

from rigged_app.algebra import Weight
from rigged_app.configurations import (
    Configuration,
    MultiplicityArray,
    RiggedConfiguration,
    colabels,
    config_sizes,
    configuration_cocharge,
    cocharge,
    dominant_weights,
    enumerate_configs,
    is_admissible,
    stable_index,
    type_a_tuple,
    vacancy,
    vacancy_numbers,
    validate_rc,
    weight,
)
from tests.conftest import A2, A3, CUBE, D4, MIXED, SPIN_FREE

GOLDEN = RiggedConfiguration.of([(2, -1), (1, -1)], [(3, -2)])


class TestMultiplicityArray:
    """Tests for MultiplicityArray."""

    def test_of_drops_zero_counts(self):
        L = MultiplicityArray.of({(1, 1): 2, (2, 3): 0})
        assert L.entries == ((1, 1, 2),)

    def test_from_factors(self):
        L = MultiplicityArray.from_factors([(1, 3), (1, 1), (2, 2)])
        assert L == MIXED
        assert L.factors() == [(1, 1), (1, 3), (2, 2)]

    def test_box_count_and_top_weight(self):
        assert MIXED.box_count == 1 + 3 + 4
        assert MIXED.top_weight(A2) == Weight.of(4, 2)

    def test_rows_reject_foreign_node(self):
        with pytest.raises(ValueError, match="outside"):
            MultiplicityArray.of({(3, 1): 1}).rows(A2)

    def test_unsorted_entries_rejected(self):
        with pytest.raises(ValueError):
            MultiplicityArray(((2, 1, 1), (1, 1, 1)))


class TestRiggedConfiguration:
    """Tests for canonical ordering and accessors."""

    def test_of_canonicalizes(self):
        rc = RiggedConfiguration.of([(1, -1), (2, -1)], [(3, -2)])
        assert rc == GOLDEN
        assert rc.strings(1) == ((2, -1), (1, -1))

    def test_non_canonical_rejected(self):
        with pytest.raises(ValueError, match="canonical"):
            RiggedConfiguration((((1, 0), (2, 0)),))

    def test_configuration_view(self):
        assert GOLDEN.configuration == Configuration.of_partitions((2, 1), (3,))
        assert GOLDEN.configuration.sizes() == (3, 3)
        assert GOLDEN.max_part == 3

    def test_extend(self):
        assert RiggedConfiguration.empty(2).extend(3) == RiggedConfiguration.empty(3)


class TestVacancyNumbers:
    """Tests for vacancy numbers on the A_2 example element."""

    def test_values(self):
        assert vacancy(MIXED, GOLDEN, 1, 1, A2) == -1
        assert vacancy(MIXED, GOLDEN, 1, 2, A2) == -1
        assert vacancy(MIXED, GOLDEN, 1, 3, A2) == 1
        assert vacancy(MIXED, GOLDEN, 2, 3, A2) == -1

    def test_table_covers_one_past_stable_index(self):
        table = vacancy_numbers(MIXED, GOLDEN, A2)
        top = stable_index(MIXED, GOLDEN)
        assert top == 3
        assert (1, top + 1) in table
        assert table[(1, top)] == table[(1, top + 1)] == weight(MIXED, GOLDEN, A2).pairing(1)

    def test_colabels(self):
        assert colabels(MIXED, GOLDEN, A2) == ((0, 0), (1,))
        assert validate_rc(MIXED, GOLDEN, A2)

    def test_label_above_vacancy_is_invalid(self):
        rc = RiggedConfiguration.of([(2, 0), (1, -1)], [(3, -2)])
        assert not validate_rc(MIXED, rc, A2)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            vacancy_numbers(MIXED, RiggedConfiguration.empty(3), A2)

    def test_bad_node(self):
        with pytest.raises(ValueError):
            vacancy(MIXED, GOLDEN, 3, 1, A2)


class TestWeightAndCocharge:
    """Tests for weights, configuration sizes and cocharge."""

    def test_weight(self):
        assert weight(MIXED, GOLDEN, A2) == Weight.of(1, -1)

    def test_cocharge(self):
        assert configuration_cocharge(GOLDEN, A2) == 5
        assert cocharge(GOLDEN, A2) == 1

    def test_config_sizes(self):
        assert config_sizes(CUBE, Weight.of(1, 1), A2) == (1, 0)
        assert config_sizes(CUBE, Weight.of(0, 0), A2) == (2, 1)
        assert config_sizes(CUBE, Weight.of(2, 0), A2) is None

    def test_enumerate_configs(self):
        found = enumerate_configs(CUBE, Weight.of(0, 0), A2)
        assert set(found) == {
            Configuration.of_partitions((2,), (1,)),
            Configuration.of_partitions((1, 1), (1,)),
        }

    def test_admissibility(self):
        assert is_admissible(CUBE, Configuration.of_partitions((1, 1), (1,)), A2)
        assert not is_admissible(CUBE, Configuration.of_partitions((2,), (1,)), A2)

    def test_dominant_weights(self):
        assert dominant_weights(CUBE, A2) == [
            (Weight.of(3, 0), (0, 0)),
            (Weight.of(1, 1), (1, 0)),
            (Weight.of(0, 0), (2, 1)),
        ]

    def test_dominant_weights_d4(self):
        weights = [w for w, _ in dominant_weights(SPIN_FREE, D4)]
        assert weights[0] == Weight.of(0, 1, 0, 0)
        assert Weight.zero(4) in weights

    def test_type_a_tuple(self):
        rc = RiggedConfiguration.of([(1, 0)], [(2, -1), (1, -1)], [(2, -1)])
        assert tuple(type_a_tuple(MultiplicityArray.of({(2, 2): 1}), rc, A3).values) == (1, 0, 1, 2)

    def test_type_a_tuple_rejects_d(self):
        with pytest.raises(ValueError):
            type_a_tuple(SPIN_FREE, RiggedConfiguration.empty(4), D4)
