"""Unit tests for the tableau model of type-A tensor products."""

import pytest

from rigged_app.algebra import Weight
from rigged_app.paths import (
    RectTableau,
    TensorPath,
    enumerate_paths,
    highest_weight_paths,
    kr_vertices,
    path_component,
    path_e,
    path_eps,
    path_f,
    path_phi,
    path_weight,
    shape_of,
    ssyt_count,
)
from rigged_app.stembridge import verify_regular
from tests.conftest import A2


def _word(letters: str) -> TensorPath:
    return TensorPath(tuple(RectTableau(((int(x),),)) for x in letters))


class TestRectTableau:
    """Tests for RectTableau validation."""

    def test_semistandard(self):
        t = RectTableau(((1, 3), (4, 4)))
        assert (t.r, t.s) == (2, 2)
        assert t.reading_word() == [4, 4, 1, 3]
        assert t.label() == "13/44"

    @pytest.mark.parametrize(
        "rows",
        [((2, 1),), ((1, 1), (1, 2)), ((1, 2), (3,)), ()],
    )
    def test_rejects(self, rows):
        with pytest.raises(ValueError):
            RectTableau(rows)


class TestSignatureRule:
    """Tests for f_a and e_a on words."""

    def test_example_edges(self):
        edges = {
            ("121", 1, "221"),
            ("121", 2, "131"),
            ("221", 2, "231"),
            ("231", 2, "331"),
            ("331", 1, "332"),
            ("131", 1, "132"),
            ("132", 1, "232"),
            ("232", 2, "332"),
        }
        graph = path_component(_word("121"), 3)
        assert {(s.label(), c, t.label()) for s, c, t in graph.edges} == edges

    def test_f_and_e_are_inverse(self):
        b = _word("2112")
        lowered = path_f(b, 1)
        assert path_e(lowered, 1) == b

    def test_string_lengths(self):
        b = _word("2112")
        assert path_phi(b, 1) == 1
        assert path_eps(b, 1) == 1
        assert path_phi(b, 1) - path_eps(b, 1) == path_weight(b, 3).pairing(1)

    def test_undefined(self):
        assert path_e(_word("111"), 1) is None
        assert path_f(_word("333"), 2) is None

    def test_weight(self):
        assert path_weight(_word("121"), 3) == Weight.of(1, 1)


class TestEnumeration:
    """Tests for KR crystal vertices and path enumeration."""

    @pytest.mark.parametrize(
        "shape, n, expected",
        [((2, 1), 3, 8), ((1,), 1, 1), ((2, 2), 4, 20), ((1, 1, 1, 1), 3, 0)],
    )
    def test_ssyt_count(self, shape, n, expected):
        assert ssyt_count(shape, n) == expected

    def test_kr_vertices(self):
        assert len(kr_vertices(2, 2, 4)) == 20
        with pytest.raises(ValueError):
            kr_vertices(3, 1, 3)

    def test_fiber(self):
        assert len(enumerate_paths([(1, 1)] * 3, (0, 1, 1, 1), 4)) == 6

    def test_highest_weight_paths(self):
        found = highest_weight_paths([(1, 1)] * 3, 3)
        assert sorted(b.label() for b in found) == ["111", "121", "211", "321"]

    def test_component_is_regular(self):
        graph = path_component(_word("121"), 3)
        assert len(graph) == 8
        assert verify_regular(graph, A2).passed

    def test_shape_of(self):
        assert shape_of(Weight.of(1, 1)) == (2, 1)
        assert shape_of(Weight.of(0, 0)) == ()
