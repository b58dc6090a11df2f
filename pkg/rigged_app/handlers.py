"""Command handlers: one function per subcommand, each returning an Outcome."""

import msgspec

from rigged_app.algebra import Weight
from rigged_app.configurations import RiggedConfiguration
from rigged_app.helpers import (
    compact_label,
    format_polynomial,
    format_weight,
    render_rc,
    to_document,
    to_dot,
)
from rigged_app.polynomials import LaurentPolynomial
from rigged_app.schemas import (
    AxiomEntry,
    ClosureResult,
    ElementResult,
    ExtendedResult,
    FiberSize,
    HighestWeightResult,
    PolynomialResult,
    VerifyResult,
)
from rigged_app.services import (
    AffineService,
    CrystalService,
    Instance,
    InstanceService,
    KostkaService,
    OracleService,
    VerificationService,
)


class Flags(msgspec.Struct, frozen=True):
    vacancies: bool = False
    dot: bool = False
    both: bool = False
    literal: bool = False


class Outcome(msgspec.Struct, frozen=True):
    """Text for humans, a document for --json, and whether every check held."""

    text: str
    document: object
    passed: bool = True


def _render(instance: Instance, rc: RiggedConfiguration, flags: Flags) -> str:
    if flags.vacancies:
        return render_rc(rc, L=instance.L, alg=instance.alg)
    return render_rc(rc)


def _coords(weight: Weight) -> list[int]:
    return list(weight.coords)


def _terms(poly: LaurentPolynomial) -> list[tuple[int, int]]:
    return list(poly.terms)


def handle_hw(instance: Instance, flags: Flags) -> Outcome:
    """List the highest weight elements of weight Λ."""
    weight = InstanceService.require_weight(instance)
    found = CrystalService.highest_weights(instance)
    blocks = [f"highest weight elements of weight {format_weight(weight)}: {len(found)}"]
    blocks.extend(_render(instance, rc, flags) for rc in found)
    document = HighestWeightResult(
        str(instance.alg), _coords(weight), [compact_label(rc) for rc in found]
    )
    return Outcome("\n\n".join(blocks), document)


def handle_closure(instance: Instance, flags: Flags) -> Outcome:
    rc_set = CrystalService.closure(instance)
    sizes = CrystalService.fiber_sizes(rc_set)
    components = len(rc_set.highest_weights)
    lines = [f"|RC(L)| = {len(rc_set)}; components: {components}"]
    lines.extend(f"{format_weight(w)}: {size}" for w, size in sizes.items())
    document = ClosureResult(
        str(instance.alg),
        len(rc_set),
        components,
        [FiberSize(_coords(w), size) for w, size in sizes.items()],
    )
    return Outcome("\n".join(lines), document)


def handle_graph(instance: Instance, flags: Flags) -> Outcome:
    """Export a component (or all of RC(L)) as DOT or as a JSON graph document."""
    graph = CrystalService.graph(instance)
    document = to_document(graph, compact_label)
    if flags.dot:
        return Outcome(to_dot(document).rstrip("\n"), document)
    return Outcome(msgspec.json.encode(document).decode(), document)


def handle_verify(instance: Instance, flags: Flags) -> Outcome:
    result = VerificationService.verify(instance)
    lines = [result.summary()]
    entries = []
    for r in result.report.results:
        witness = None
        if r.witness is not None:
            witness = f"{r.witness.message} at {', '.join(r.witness.vertices)}"
            lines.append(f"  {r.axiom}: {witness}")
        entries.append(AxiomEntry(r.axiom, r.passed, r.skipped, witness))
    violations = [f"{v.invariant}: {v.element} ({v.detail})" for v in result.violations]
    lines.extend(f"  {v}" for v in violations)
    document = VerifyResult(
        result.summary(), result.passed, result.size, result.components, entries, violations
    )
    return Outcome("\n".join(lines), document, result.passed)


def handle_fermionic(instance: Instance, flags: Flags) -> Outcome:
    """M(L, λ) from the fermionic formula; with --both also the closure sum."""
    lam = InstanceService.require_lambda(instance)
    poly = KostkaService.fermionic(instance, literal=flags.literal)
    if not flags.both:
        return Outcome(format_polynomial(poly), PolynomialResult(list(lam.values), _terms(poly)))
    direct = KostkaService.direct(instance)
    equal = poly == direct
    text = format_polynomial(poly)
    if equal:
        text += "\ndirect: equal"
    else:
        text = f"fermionic:\n{text}\ndirect:\n{format_polynomial(direct)}"
    document = PolynomialResult(list(lam.values), _terms(poly), _terms(direct))
    return Outcome(text, document, equal)


def handle_direct(instance: Instance, flags: Flags) -> Outcome:
    lam = InstanceService.require_lambda(instance)
    poly = KostkaService.direct(instance)
    return Outcome(format_polynomial(poly), PolynomialResult(list(lam.values), _terms(poly)))


def handle_extended(instance: Instance, flags: Flags) -> Outcome:
    lam, witness, vacancies = KostkaService.extended(instance)
    rc = instance.element
    lines = [f"λ = {lam}", render_rc(rc, L=instance.L, alg=instance.alg)]
    if witness is None:
        lines.append("member: no")
    else:
        lines.append("member: yes")
        lines.append("witness: " + "/".join(f"({','.join(str(x) for x in col)})" for col in witness.columns))
    document = ExtendedResult(
        compact_label(rc),
        witness is not None,
        witness.as_lists() if witness is not None else None,
        {f"{a},{i}": p for (a, i), p in sorted(vacancies.items())},
    )
    return Outcome("\n".join(lines), document)


def _element_outcome(
    name: str, instance: Instance, result: RiggedConfiguration | None, flags: Flags
) -> Outcome:
    source = instance.element
    text = _render(instance, result, flags) if result is not None else f"{name} is undefined"
    document = ElementResult(
        name, compact_label(source), compact_label(result) if result is not None else None
    )
    return Outcome(text, document)


def handle_promote(instance: Instance, flags: Flags) -> Outcome:
    return _element_outcome("pr", instance, AffineService.promote(instance), flags)


def handle_f0(instance: Instance, flags: Flags) -> Outcome:
    return _element_outcome("f0", instance, AffineService.f0(instance), flags)


def handle_e0(instance: Instance, flags: Flags) -> Outcome:
    return _element_outcome("e0", instance, AffineService.e0(instance), flags)


def handle_oracle(instance: Instance, flags: Flags) -> Outcome:
    result = OracleService.compare(instance)
    lines = ["oracle: agrees" if result.passed else "oracle: disagrees"]
    for entry in result.entries:
        line = f"{format_weight(Weight(tuple(entry.weight)))}: paths={entry.paths} rigged={entry.rigged}"
        if entry.isomorphic is not None:
            line += f" isomorphic={'yes' if entry.isomorphic else 'no'}"
        lines.append(line)
    return Outcome("\n".join(lines), result, result.passed)


HANDLERS = {
    "hw": handle_hw,
    "closure": handle_closure,
    "graph": handle_graph,
    "verify": handle_verify,
    "fermionic": handle_fermionic,
    "direct": handle_direct,
    "extended": handle_extended,
    "promote": handle_promote,
    "f0": handle_f0,
    "e0": handle_e0,
    "oracle": handle_oracle,
}
