"""Invariants - runtime checks of the crystal structure on a generated RC(L)."""

import logging

import msgspec

from rigged_app.algebra import AlgebraData, simple_root
from rigged_app.configurations import (
    Configuration,
    MultiplicityArray,
    RiggedConfiguration,
    colabels,
    stable_index,
    vacancy_from_rows,
    vacancy_numbers,
    weight,
)
from rigged_app.crystal import (
    RiggedConfigurationSet,
    e,
    e_string,
    eps,
    f,
    f_string,
    phi,
    selection,
)

logger = logging.getLogger(__name__)

INVERSE = "inverse"
WEIGHT = "weight"
STRING_COUNTS = "string counts"
PAIRING = "phi - eps"
COCHARGE = "cocharge"
LABEL_FLOOR = "label floor"
COLABEL_FLOOR = "colabel floor"
INCREMENTAL = "incremental vacancy"
STABILITY = "vacancy stability"
CONVEXITY = "convexity"
SECOND_DIFFERENCE = "second difference"


class InvariantViolation(msgspec.Struct, frozen=True):
    invariant: str
    element: str
    detail: str


def apply_from_scratch(
    L: MultiplicityArray, rc: RiggedConfiguration, a: int, alg: AlgebraData, *, lower: bool
) -> RiggedConfiguration | None:
    """f_a (or e_a) with every unselected label read off freshly evaluated vacancy numbers."""
    picked = selection(L, rc, a, alg, lower=lower)
    if picked is None:
        return None
    selected, replacement, _ = picked
    l_rows, old_rows = L.rows(alg), rc.multiplicities()
    kept: list[list[tuple[int, int]]] = []
    for b in alg.nodes:
        pending = b == a and selected is not None
        node = []
        for i, x in rc.strings(b):
            if pending and (i, x) == selected:
                pending = False
                continue
            node.append((i, vacancy_from_rows(alg, l_rows, old_rows, b, i) - x))
        kept.append(node)

    new_rows: list[dict[int, int]] = [{} for _ in alg.nodes]
    for b, node in enumerate(kept, start=1):
        lengths = [i for i, _ in node]
        if b == a and replacement is not None:
            lengths.append(replacement[0])
        for i in lengths:
            new_rows[b - 1][i] = new_rows[b - 1].get(i, 0) + 1
    nodes = [
        [(i, vacancy_from_rows(alg, l_rows, tuple(new_rows), b, i) - c) for i, c in node]
        for b, node in enumerate(kept, start=1)
    ]
    if replacement is not None:
        nodes[a - 1].append(replacement)
    return RiggedConfiguration.of(*nodes)


def _config_violations(
    L: MultiplicityArray, nu: Configuration, alg: AlgebraData, name: str
) -> list[InvariantViolation]:
    found = []
    vac = vacancy_numbers(L, nu, alg)
    top = stable_index(L, nu)
    stable = weight(L, nu, alg)
    l_rows, m_rows = L.rows(alg), nu.multiplicities()
    for a in alg.nodes:
        if not vac[(a, top)] == vac[(a, top + 1)] == stable.pairing(a):
            found.append(InvariantViolation(STABILITY, name, f"node {a}"))
        for i in range(1, top + 1):
            before = vac[(a, i - 1)] if i > 1 else 0
            after = vac[(a, i + 1)]
            second = -before + 2 * vac[(a, i)] - after
            coupling = sum(alg.pairing(a, b) * m_rows[b - 1].get(i, 0) for b in alg.nodes)
            if second != l_rows[a - 1].get(i, 0) - coupling:
                found.append(InvariantViolation(SECOND_DIFFERENCE, name, f"(a, i) = ({a}, {i})"))
            if alg.is_type_a:
                # chain form: m_i^(a-1) - 2 m_i^(a) + m_i^(a+1)
                chain = -2 * m_rows[a - 1].get(i, 0)
                if a > 1:
                    chain += m_rows[a - 2].get(i, 0)
                if a < alg.rank:
                    chain += m_rows[a].get(i, 0)
                if second != l_rows[a - 1].get(i, 0) + chain:
                    found.append(InvariantViolation(SECOND_DIFFERENCE, name, f"chain form at ({a}, {i})"))
            if m_rows[a - 1].get(i, 0) == 0 and 2 * vac[(a, i)] < before + after:
                found.append(InvariantViolation(CONVEXITY, name, f"(a, i) = ({a}, {i})"))
    return found


def check_invariants(rc_set: RiggedConfigurationSet) -> list[InvariantViolation]:
    """Evaluate every crystal invariant on every element and color of ``rc_set``."""
    L, alg, graph = rc_set.L, rc_set.alg, rc_set.graph
    found: list[InvariantViolation] = []
    seen_configs: set[Configuration] = set()

    for rc in rc_set:
        name = str(rc.partitions)
        nu = rc.configuration
        if nu not in seen_configs:
            seen_configs.add(nu)
            found.extend(_config_violations(L, nu, alg, name))

        for a in alg.nodes:
            for i, x in rc.strings(a):
                if x < -i:
                    found.append(InvariantViolation(LABEL_FLOOR, name, f"string ({i},{x}) at {a}"))
        if any(c < 0 for node in colabels(L, rc, alg) for c in node):
            found.append(InvariantViolation(COLABEL_FLOOR, name, "negative colabel"))

        wt = graph.weight(rc)
        for a in alg.nodes:
            lowered, raised = f(L, rc, a, alg), e(L, rc, a, alg)
            if lowered is not None:
                if e(L, lowered, a, alg) != rc:
                    found.append(InvariantViolation(INVERSE, name, f"e_{a} f_{a} != id"))
                if weight(L, lowered, alg) != wt - simple_root(alg, a):
                    found.append(InvariantViolation(WEIGHT, name, f"color {a}"))
                if graph.cocharge(lowered) != graph.cocharge(rc):
                    found.append(InvariantViolation(COCHARGE, name, f"color {a}"))
                if apply_from_scratch(L, rc, a, alg, lower=True) != lowered:
                    found.append(InvariantViolation(INCREMENTAL, name, f"f_{a}"))
            if raised is not None:
                if f(L, raised, a, alg) != rc:
                    found.append(InvariantViolation(INVERSE, name, f"f_{a} e_{a} != id"))
                if apply_from_scratch(L, rc, a, alg, lower=False) != raised:
                    found.append(InvariantViolation(INCREMENTAL, name, f"e_{a}"))
            phi_a, eps_a = phi(L, rc, a, alg), eps(L, rc, a, alg)
            if (phi_a, eps_a) != (len(f_string(L, rc, a, alg)) - 1, len(e_string(L, rc, a, alg)) - 1):
                found.append(InvariantViolation(STRING_COUNTS, name, f"color {a}"))
            if phi_a - eps_a != wt.pairing(a):
                found.append(InvariantViolation(PAIRING, name, f"color {a}"))

    if found:
        logger.warning(f"{len(found)} invariant violations on RC({L}) in {alg}")
    return found
