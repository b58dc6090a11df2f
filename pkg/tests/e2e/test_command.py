"""End-to-end tests driving the rigged management command."""

from io import StringIO

import msgspec
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from rigged_app.schemas import OracleEntry, OracleResult
from rigged_app.services import OracleService
from tests.factories import AlgebraSpecFactory, FactorSpecFactory, InstanceSpecFactory


def run(*args) -> str:
    out = StringIO()
    call_command("rigged", *args, stdout=out)
    return out.getvalue()


class TestReadCommands:
    """Commands that report on RC(L)."""

    def test_verify(self, instance_file):
        path = instance_file(InstanceSpecFactory())
        assert run("verify", path).strip() == "axioms: all pass; components: 4; |RC(L)| = 27"

    def test_closure_json(self, instance_file):
        path = instance_file(InstanceSpecFactory())
        document = msgspec.json.decode(run("closure", path, "--json"))
        assert (document["size"], document["components"]) == (27, 4)
        assert {"weight": [3, 0], "size": 1} in document["fibers"]

    def test_hw(self, instance_file):
        path = instance_file(InstanceSpecFactory(weight=[1, 1]))
        out = run("hw", path)
        assert out.startswith("highest weight elements of weight (1,1): 2")

    def test_hw_needs_weight(self, instance_file):
        with pytest.raises(CommandError) as info:
            run("hw", instance_file(InstanceSpecFactory()))
        assert info.value.returncode == 2

    def test_graph_dot(self, instance_file):
        path = instance_file(InstanceSpecFactory(element=[[[1, 0]], []]))
        out = run("graph", path, "--dot")
        assert out.startswith("digraph crystal {")
        assert out.count(" -> ") == 8

    def test_graph_json(self, instance_file):
        path = instance_file(InstanceSpecFactory(element=[[[1, 0]], []]))
        document = msgspec.json.decode(run("graph", path))
        assert len(document["vertices"]) == 8

    def test_oracle(self, instance_file):
        out = run("oracle", instance_file(InstanceSpecFactory()))
        assert out.splitlines()[0] == "oracle: agrees"

    def test_vertex_cap(self, instance_file):
        with pytest.raises(CommandError) as info:
            run("closure", instance_file(InstanceSpecFactory()), "--max-vertices", "5")
        assert info.value.returncode == 2


class TestPolynomialCommands:
    """fermionic, direct and extended."""

    def test_fermionic_both(self, instance_file):
        path = instance_file(
            InstanceSpecFactory(algebra=AlgebraSpecFactory(rank=1), factors=[FactorSpecFactory(multiplicity=2)], lam=[1, 1])
        )
        assert run("fermionic", path, "--both").strip() == "q^0: 1\nq^1: 1\ndirect: equal"

    def test_fermionic_json(self, instance_file):
        path = instance_file(
            InstanceSpecFactory(algebra=AlgebraSpecFactory(rank=1), factors=[FactorSpecFactory(multiplicity=2)], lam=[1, 1])
        )
        document = msgspec.json.decode(run("fermionic", path, "--json"))
        assert document == {"lambda": [1, 1], "terms": [[0, 1], [1, 1]], "direct": None}

    def test_fermionic_outside_type_a(self, instance_file):
        spec = InstanceSpecFactory(algebra=AlgebraSpecFactory(family="D", rank=4), factors=[FactorSpecFactory(node=2)])
        with pytest.raises(CommandError) as info:
            run("fermionic", instance_file(spec))
        assert info.value.returncode == 2

    def test_extended_witness(self, instance_file):
        spec = InstanceSpecFactory(
            algebra=AlgebraSpecFactory(rank=3),
            factors=[FactorSpecFactory(multiplicity=6)],
            lam=[2, 2, 1, 1],
            element=[[[3, -2], [1, 0]], [[2, 0]], [[1, -1]]],
        )
        out = run("extended", instance_file(spec))
        assert "member: yes" in out
        assert "witness: (4,3,2,1)/(4,2)/(1)" in out


class TestAffineCommands:
    """promote and f0 on B^{2,2} of A_3."""

    def _spec(self, element):
        return InstanceSpecFactory(
            algebra=AlgebraSpecFactory(rank=3),
            factors=[FactorSpecFactory(node=2, width=2)],
            element=element,
        )

    def test_promote(self, instance_file):
        path = instance_file(self._spec([[[1, 0]], [[2, -1], [1, -1]], [[2, -1]]]))
        assert run("promote", path).strip() == "ν^(1):\n  ∅\nν^(2):\n  □ 0\nν^(3):\n  □ -1"

    def test_f0_json(self, instance_file):
        path = instance_file(self._spec([[], [], []]))
        document = msgspec.json.decode(run("f0", path, "--json"))
        assert document["operation"] == "f0"
        assert document["element"] == "∅ | ∅ | ∅"


class TestInputErrors:
    """Malformed instances exit with status 2."""

    def test_unknown_field(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"algebra": {"family": "A", "rank": 2}, "factors": [], "extra": 1}')
        with pytest.raises(CommandError) as info:
            run("verify", str(path))
        assert info.value.returncode == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(CommandError) as info:
            run("verify", str(tmp_path / "missing.json"))
        assert info.value.returncode == 2

    def test_unknown_family(self, instance_file):
        path = instance_file(InstanceSpecFactory(algebra=AlgebraSpecFactory(family="G", rank=2)))
        with pytest.raises(CommandError) as info:
            run("verify", path)
        assert info.value.returncode == 2


class TestMoreCommands:
    """direct, e0, the cap on affine commands and check failures."""

    def _box(self, element):
        return InstanceSpecFactory(factors=[FactorSpecFactory()], element=element)

    def test_direct(self, instance_file):
        path = instance_file(
            InstanceSpecFactory(algebra=AlgebraSpecFactory(rank=1), factors=[FactorSpecFactory(multiplicity=2)], lam=[1, 1])
        )
        assert run("direct", path).strip() == "q^0: 1\nq^1: 1"

    def test_e0_wraps_the_top_element(self, instance_file):
        path = instance_file(self._box([[], []]))
        assert run("e0", path).strip() == "ν^(1):\n  □ 0\nν^(2):\n  □ -1"

    def test_e0_undefined(self, instance_file):
        path = instance_file(self._box([[[1, 0]], [[1, -1]]]))
        assert run("e0", path).strip() == "e0 is undefined"

    def test_f0_respects_vertex_cap(self, instance_file):
        path = instance_file(InstanceSpecFactory(element=[[], []]))
        with pytest.raises(CommandError) as info:
            run("f0", path, "--max-vertices", "5")
        assert info.value.returncode == 2

    def test_failed_check_exits_one(self, instance_file, monkeypatch):
        disagreement = OracleResult(False, [OracleEntry([1, 1], 2, 1, None)])
        monkeypatch.setattr(OracleService, "compare", staticmethod(lambda instance: disagreement))
        out = StringIO()
        with pytest.raises(CommandError) as info:
            call_command("rigged", "oracle", instance_file(InstanceSpecFactory()), stdout=out)
        assert info.value.returncode == 1
        assert out.getvalue().splitlines()[0] == "oracle: disagrees"
        assert "(1,1): paths=2 rigged=1" in out.getvalue()
