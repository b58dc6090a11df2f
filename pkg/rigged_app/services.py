"""Rigged Services - business logic behind the management command."""

import logging
from pathlib import Path

import msgspec

from rigged_app.algebra import AlgebraData, TypeATuple, Weight
from rigged_app.configurations import (
    MultiplicityArray,
    RiggedConfiguration,
    type_a_tuple,
    validate_rc,
    vacancy_numbers,
)
from rigged_app.crystal import (
    CrystalGraph,
    RiggedConfigurationSet,
    generate_component,
    generate_rc_set,
    highest_weight_rcs,
    weight_orbit_sizes,
)
from rigged_app.helpers import compact_label
from rigged_app.invariants import InvariantViolation, check_invariants
from rigged_app.paths import (
    TensorPath,
    enumerate_paths,
    highest_weight_paths,
    path_component,
    path_weight,
)
from rigged_app.polynomials import LaurentPolynomial
from rigged_app.promotion import e0, f0, promote, promote_inverse
from rigged_app.schemas import (
    InstanceSpec,
    OracleEntry,
    OracleResult,
    to_algebra,
    to_element,
    to_multiplicities,
    to_type_a_tuple,
    to_weight,
)
from rigged_app.stembridge import AxiomReport, isomorphic, verify_regular
from rigged_app.unrestricted import LowerBoundTableau, direct_M, extended_witness, fermionic_M

logger = logging.getLogger(__name__)


class Instance(msgspec.Struct, frozen=True):
    """A validated problem instance."""

    alg: AlgebraData
    L: MultiplicityArray
    weight: Weight | None = None
    lam: TypeATuple | None = None
    element: RiggedConfiguration | None = None
    max_vertices: int | None = None


class InstanceService:
    """Reading and validating instance files."""

    @staticmethod
    def load(path: str | Path) -> InstanceSpec:
        return msgspec.json.decode(Path(path).read_bytes(), type=InstanceSpec)

    @staticmethod
    def resolve(spec: InstanceSpec, max_vertices: int | None = None) -> Instance:
        """Turn the wire form into engine types; ``max_vertices`` overrides the file."""
        alg = to_algebra(spec)
        L = to_multiplicities(spec)
        L.rows(alg)
        element = to_element(spec, alg)
        return Instance(
            alg,
            L,
            weight=to_weight(spec, alg),
            lam=to_type_a_tuple(spec, alg),
            element=element,
            max_vertices=max_vertices if max_vertices is not None else spec.max_vertices,
        )

    @staticmethod
    def require_weight(instance: Instance) -> Weight:
        if instance.weight is None:
            raise ValueError("this command needs a weight or lambda in the instance")
        return instance.weight

    @staticmethod
    def require_element(instance: Instance) -> RiggedConfiguration:
        if instance.element is None:
            raise ValueError("this command needs an element in the instance")
        if not validate_rc(instance.L, instance.element, instance.alg):
            raise ValueError(f"{compact_label(instance.element)} has a label above its vacancy number")
        return instance.element

    @staticmethod
    def require_lambda(instance: Instance) -> TypeATuple:
        """λ as given, else derived from Λ or from the element's weight."""
        if not instance.alg.is_type_a:
            raise ValueError(f"type-A tuples need a type-A algebra, got {instance.alg}")
        if instance.lam is not None:
            if instance.lam.total != instance.L.box_count:
                raise ValueError(f"λ={instance.lam} has {instance.lam.total} boxes, L has {instance.L.box_count}")
            return instance.lam
        if instance.weight is not None:
            return TypeATuple.from_weight(instance.weight, instance.L.box_count)
        if instance.element is not None:
            return type_a_tuple(instance.L, instance.element, instance.alg)
        raise ValueError("this command needs lambda, a weight, or an element in the instance")


class CrystalService:
    """Highest weight elements, closures and component graphs."""

    @staticmethod
    def highest_weights(instance: Instance) -> list[RiggedConfiguration]:
        weight = InstanceService.require_weight(instance)
        return highest_weight_rcs(instance.L, weight, instance.alg)

    @staticmethod
    def closure(instance: Instance) -> RiggedConfigurationSet:
        return generate_rc_set(instance.L, instance.alg, limit=instance.max_vertices)

    @staticmethod
    def fiber_sizes(rc_set: RiggedConfigurationSet) -> dict[Weight, int]:
        return weight_orbit_sizes(rc_set)

    @staticmethod
    def graph(instance: Instance) -> CrystalGraph:
        """The component of the instance element, or all of RC(L)."""
        if instance.element is not None:
            seed = InstanceService.require_element(instance)
            return generate_component(instance.L, seed, instance.alg, limit=instance.max_vertices)
        return CrystalService.closure(instance).graph


class VerificationResult(msgspec.Struct, frozen=True):
    report: AxiomReport
    violations: list[InvariantViolation]
    size: int
    components: int

    @property
    def passed(self) -> bool:
        return self.report.passed and not self.violations

    def summary(self) -> str:
        return f"{self.report.summary()}; components: {self.components}; |RC(L)| = {self.size}"


class VerificationService:
    """Axiom and invariant checks over RC(L)."""

    @staticmethod
    def verify(instance: Instance) -> VerificationResult:
        rc_set = CrystalService.closure(instance)
        report = verify_regular(rc_set.graph, instance.alg, label=compact_label)
        violations = check_invariants(rc_set)
        components = rc_set.components()
        for hw, component in components:
            values = {component.cocharge(v) for v in component}
            if len(values) > 1:
                violations.append(
                    InvariantViolation("cocharge constancy", compact_label(hw), f"values {sorted(values)}")
                )
        result = VerificationResult(report, violations, len(rc_set), len(components))
        logger.info(f"verification of RC({instance.L}) in {instance.alg}: {result.summary()}")
        return result


class KostkaService:
    """Unrestricted Kostka polynomials and extended rigged configurations."""

    @staticmethod
    def fermionic(instance: Instance, *, literal: bool = False) -> LaurentPolynomial:
        lam = InstanceService.require_lambda(instance)
        return fermionic_M(instance.L, lam, instance.alg, literal=literal)

    @staticmethod
    def direct(instance: Instance) -> LaurentPolynomial:
        lam = InstanceService.require_lambda(instance)
        rc_set = generate_rc_set(instance.L, instance.alg, limit=instance.max_vertices)
        return direct_M(instance.L, lam, instance.alg, rc_set=rc_set)

    @staticmethod
    def extended(
        instance: Instance,
    ) -> tuple[TypeATuple, LowerBoundTableau | None, dict[tuple[int, int], int]]:
        """(λ, witness tableau or None, vacancy numbers) for the instance element."""
        if instance.element is None:
            raise ValueError("this command needs an element in the instance")
        lam = InstanceService.require_lambda(instance)
        rc = instance.element
        witness = extended_witness(instance.L, lam, rc, instance.alg)
        return lam, witness, vacancy_numbers(instance.L, rc, instance.alg)


class AffineService:
    """Promotion and the affine operators in type A."""

    @staticmethod
    def promote(instance: Instance) -> RiggedConfiguration:
        rc = InstanceService.require_element(instance)
        lam = type_a_tuple(instance.L, rc, instance.alg)
        if instance.lam is not None and instance.lam != lam:
            raise ValueError(f"element has λ={lam}, the instance says {instance.lam}")
        return promote(instance.L, rc, lam)

    @staticmethod
    def promote_inverse(instance: Instance) -> RiggedConfiguration:
        rc = InstanceService.require_element(instance)
        return promote_inverse(instance.L, rc, instance.alg, limit=instance.max_vertices)

    @staticmethod
    def f0(instance: Instance) -> RiggedConfiguration | None:
        rc = InstanceService.require_element(instance)
        return f0(instance.L, rc, instance.alg, limit=instance.max_vertices)

    @staticmethod
    def e0(instance: Instance) -> RiggedConfiguration | None:
        rc = InstanceService.require_element(instance)
        return e0(instance.L, rc, instance.alg, limit=instance.max_vertices)


class OracleService:
    """Cross-checks against the tableau model of tensor products in type A."""

    @staticmethod
    def compare(instance: Instance) -> OracleResult:
        alg = instance.alg
        if not alg.is_type_a:
            raise ValueError(f"the tableau oracle covers type A only, got {alg}")
        n = alg.rank + 1
        factors = instance.L.factors()
        rc_set = CrystalService.closure(instance)

        path_fibers: dict[Weight, int] = {}
        for b in enumerate_paths(factors, None, n):
            w = path_weight(b, n)
            path_fibers[w] = path_fibers.get(w, 0) + 1

        path_hw: dict[Weight, list[TensorPath]] = {}
        for b in highest_weight_paths(factors, n):
            path_hw.setdefault(path_weight(b, n), []).append(b)
        rc_hw: dict[Weight, list[RiggedConfiguration]] = {}
        for w, rc in rc_set.highest_weights:
            rc_hw.setdefault(w, []).append(rc)

        entries = []
        for w in sorted(set(path_fibers) | set(rc_set.fibers), reverse=True):
            matched = None
            if w in path_hw or w in rc_hw:
                paths, rcs = path_hw.get(w, []), rc_hw.get(w, [])
                matched = len(paths) == len(rcs) and all(
                    isomorphic(
                        path_component(b, n, limit=instance.max_vertices),
                        generate_component(instance.L, rc, alg, limit=instance.max_vertices),
                    )
                    for b, rc in zip(paths, rcs, strict=True)
                )
            entries.append(
                OracleEntry(list(w.coords), path_fibers.get(w, 0), len(rc_set.fiber(w)), matched)
            )
        passed = all(entry.paths == entry.rigged and entry.isomorphic is not False for entry in entries)
        if not passed:
            logger.warning(f"tableau oracle disagrees with RC({instance.L})")
        return OracleResult(passed, entries)
