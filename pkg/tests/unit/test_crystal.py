"""Unit tests for the Kashiwara operators and closure generation."""

import pytest

from rigged_app.algebra import Weight
from rigged_app.configurations import RiggedConfiguration, cocharge
from rigged_app.crystal import (
    CrystalGraph,
    closure_graph,
    e,
    e_string,
    eps,
    f,
    f_string,
    generate_component,
    generate_rc_set,
    highest_weight_rcs,
    phi,
    reflect,
    selection,
    to_highest_weight,
    weight_orbit_sizes,
)
from rigged_app.exceptions import ResourceLimitExceeded
from tests.conftest import A1, A2, CUBE, MIXED, PAIR

GOLDEN = RiggedConfiguration.of([(2, -1), (1, -1)], [(3, -2)])
EMPTY_A2 = RiggedConfiguration.empty(2)


class TestOperatorsOnExample:
    """The A_2 example element and its images under f_1 and e_1."""

    def test_f1(self):
        assert f(MIXED, GOLDEN, 1, A2) == RiggedConfiguration.of([(3, -2), (1, -1)], [(3, -1)])

    def test_e1(self):
        assert e(MIXED, GOLDEN, 1, A2) == RiggedConfiguration.of([(2, 1)], [(3, -3)])

    def test_string_lengths(self):
        assert phi(MIXED, GOLDEN, 1, A2) == 2
        assert eps(MIXED, GOLDEN, 1, A2) == 1
        assert len(f_string(MIXED, GOLDEN, 1, A2)) == 3
        assert len(e_string(MIXED, GOLDEN, 1, A2)) == 2

    def test_cocharge_constant_on_images(self):
        images = [f(MIXED, GOLDEN, 1, A2), e(MIXED, GOLDEN, 1, A2)]
        assert {cocharge(rc, A2) for rc in images} == {cocharge(GOLDEN, A2)} == {1}

    def test_selection_on_lowering(self):
        selected, replacement, k = selection(MIXED, GOLDEN, 1, A2, lower=True)
        assert selected == (2, -1)
        assert replacement == (3, -2)
        assert k == 2


class TestOperatorsOnEmpty:
    """Operators acting on the empty rigged configuration."""

    def test_f_adds_singular_box(self):
        assert f(CUBE, EMPTY_A2, 1, A2) == RiggedConfiguration.of([(1, -1)], [])

    def test_e_undefined_on_highest_weight(self):
        assert all(e(CUBE, EMPTY_A2, a, A2) is None for a in A2.nodes)

    def test_f_undefined_when_phi_is_zero(self):
        assert phi(CUBE, EMPTY_A2, 2, A2) == 0
        assert f(CUBE, EMPTY_A2, 2, A2) is None

    def test_e_removes_length_one_string(self):
        lowered = f(CUBE, EMPTY_A2, 1, A2)
        assert e(CUBE, lowered, 1, A2) == EMPTY_A2

    def test_f2_after_f1(self):
        two = f(CUBE, EMPTY_A2, 1, A2)
        assert f(CUBE, two, 2, A2) == RiggedConfiguration.of([(1, 0)], [(1, -1)])

    def test_bad_node(self):
        with pytest.raises(ValueError):
            f(CUBE, EMPTY_A2, 3, A2)


class TestHighestWeight:
    """Tests for highest weight enumeration and raising."""

    def test_two_elements_of_weight_adjoint(self):
        found = highest_weight_rcs(CUBE, Weight.of(1, 1), A2)
        assert set(found) == {
            RiggedConfiguration.of([(1, 0)], []),
            RiggedConfiguration.of([(1, 1)], []),
        }

    def test_trivial_weight(self):
        assert highest_weight_rcs(CUBE, Weight.of(0, 0), A2) == [
            RiggedConfiguration.of([(1, 0), (1, 0)], [(1, 0)])
        ]

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError, match="not dominant"):
            highest_weight_rcs(CUBE, Weight.of(1, -1), A2)

    def test_to_highest_weight(self):
        lowered = f(PAIR, RiggedConfiguration.empty(1), 1, A1)
        top, word = to_highest_weight(PAIR, lowered, A1)
        assert top == RiggedConfiguration.empty(1)
        assert word == (1,)

    def test_reflect_maps_weight(self):
        rc_set = generate_rc_set(CUBE, A2)
        for rc in rc_set:
            image = reflect(CUBE, rc, 1, A2)
            w = rc_set.graph.weight(rc)
            assert rc_set.graph.weight(image) == Weight.of(-w.coords[0], w.coords[0] + w.coords[1])


class TestClosure:
    """Tests for RC(L) generation."""

    def test_cube(self, cube_set):
        assert len(cube_set) == 27
        assert len(cube_set.components()) == 4
        assert len(cube_set.highest_weights) == 4

    def test_fiber_sizes(self, cube_set):
        sizes = weight_orbit_sizes(cube_set)
        assert sizes[Weight.of(3, 0)] == 1
        assert sizes[Weight.of(1, 1)] == 3
        assert sizes[Weight.of(0, 0)] == 6
        assert sum(sizes.values()) == 27

    def test_mixed(self, mixed_set):
        assert len(mixed_set) == 180
        assert GOLDEN in mixed_set
        assert not mixed_set.colabel_violations

    def test_component_of_example(self):
        component = generate_component(MIXED, GOLDEN, A2)
        assert GOLDEN in component
        assert len(component.sources()) == 1

    def test_component_rank_mismatch(self):
        with pytest.raises(ValueError):
            generate_component(MIXED, RiggedConfiguration.empty(3), A2)

    def test_vertex_cap(self):
        with pytest.raises(ResourceLimitExceeded):
            generate_rc_set(CUBE, A2, limit=10)

    def test_vertices_are_annotated(self, cube_set):
        for rc in cube_set:
            assert cube_set.graph.weight(rc) is not None
            assert cube_set.graph.cocharge(rc) == cocharge(rc, A2)


class TestCrystalGraph:
    """Tests for the networkx-backed graph wrapper."""

    def test_successor_and_predecessor(self):
        graph = CrystalGraph([1, 2])
        for v in "xyz":
            graph.add_vertex(v)
        graph.add_edge("x", 1, "y")
        graph.add_edge("x", 2, "z")
        assert graph.successor("x", 2) == "z"
        assert graph.predecessor("y", 1) == "x"
        assert graph.successor("y", 1) is None
        assert graph.sources() == ["x"]
        assert graph.is_connected()

    def test_components_in_insertion_order(self):
        graph = CrystalGraph([1])
        for v in "abcd":
            graph.add_vertex(v)
        graph.add_edge("c", 1, "d")
        graph.add_edge("a", 1, "b")
        assert [sorted(c) for c in graph.components()] == [["a", "b"], ["c", "d"]]

    def test_closure_of_a_chain(self):
        graph = closure_graph(
            [0],
            [1],
            lambda v, _: v + 1 if v < 3 else None,
            lambda v, _: v - 1 if v > 0 else None,
        )
        assert sorted(graph) == [0, 1, 2, 3]
        assert len(graph.edges) == 3
