"""Garside recognition for finite germs.

The decider follows the maximum-J route: a germ is a Garside germ iff it is
left-associative, left-cancellative, and every J-set

    J(g1, g2) = {g : g1•g is defined and g ⋖ g2}

has a ⋖-greatest element. Greatest elements are canonicalized through the
≃-selector so that the resulting function satisfies the sharp J-law. The
Noetherian and lcm criteria are independent sufficient conditions, exposed
as cross-checks.
"""

import logging
from collections.abc import Iterator

import networkx as nx

from .config import Config
from .errors import PreconditionError, UnsupportedGermError
from .germ import GermTable, eqir_class_selector
from .models import (
    ClosureReport,
    FailedCriterion,
    GarsideVerdict,
    JTable,
    LawReport,
    LawViolation,
    LcmReport,
    NoetherianReport,
)

logger = logging.getLogger(__name__)


def _require_composable(table: GermTable, g1: int, g2: int) -> None:
    if not table.composable(g1, g2):
        raise PreconditionError(f"{table.name(g1)!r} and {table.name(g2)!r} are not composable")


def _j_members(table: GermTable, g1: int, g2: int) -> set[int]:
    return table.rows[g1].keys() & table.left_divisors[g2].keys()


def j_set(table: GermTable, g1: int, g2: int) -> frozenset[int]:
    """J(g1, g2): elements g with g1•g defined and g ⋖ g2."""
    _require_composable(table, g1, g2)
    return frozenset(_j_members(table, g1, g2))


def i_set(table: GermTable, g1: int, g2: int) -> frozenset[int]:
    """I(g1, g2) = {g1•g : g in J(g1, g2)}."""
    row = table.rows[g1]
    return frozenset(row[g] for g in j_set(table, g1, g2))


def composable_pairs(table: GermTable) -> Iterator[tuple[int, int]]:
    """Every composable (g1, g2) in id order."""
    by_source = _elements_by_source(table)
    for g1 in range(table.size):
        for g2 in by_source[table.target(g1)]:
            yield g1, g2


def _elements_by_source(table: GermTable) -> list[list[int]]:
    by_source: list[list[int]] = [[] for _ in table.objects]
    for element_id, element in enumerate(table.elements):
        by_source[element.source].append(element_id)
    return by_source


def _greatest(table: GermTable, members: set[int]) -> int | None:
    """The least-id ⋖-greatest member, or None when there is none."""
    divisors = table.left_divisors
    # a greatest element has at least as many divisors as any member
    top = max(len(divisors[m]) for m in members)
    for candidate in sorted(m for m in members if len(divisors[m]) == top):
        if all(x in divisors[candidate] for x in members):
            return candidate
    return None


def _check_preconditions(table: GermTable) -> None:
    report = table.report
    if not report.valid:
        raise UnsupportedGermError(
            "table is not a germ",
            criterion=FailedCriterion.NOT_A_GERM.value,
            witness=_first_witness(report.counterexamples),
        )
    if not report.left_associative:
        raise UnsupportedGermError(
            "germ is not left-associative",
            criterion=FailedCriterion.NOT_LEFT_ASSOCIATIVE.value,
            witness=report.counterexamples["left_associative"][0],
        )
    if not report.left_cancellative:
        raise UnsupportedGermError(
            "germ is not left-cancellative",
            criterion=FailedCriterion.NOT_LEFT_CANCELLATIVE.value,
            witness=report.counterexamples["left_cancellative"][0],
        )


def _first_witness(counterexamples: dict[str, list[tuple[int, ...]]]) -> tuple[int, ...]:
    for key in sorted(counterexamples):
        if counterexamples[key]:
            return counterexamples[key][0]
    return ()


def max_j_function(table: GermTable, keep_sets: bool = False) -> JTable:
    """Compute the maximum J-function, selector-canonical.

    The scan stops at the first composable pair whose J-set has no greatest
    element; that pair is returned as JTable.missing. With keep_sets the
    J-sets themselves are stored too.

    Raises:
        UnsupportedGermError: the germ is invalid, not left-associative or
            not left-cancellative.
    """
    _check_preconditions(table)
    selector = eqir_class_selector(table)
    canonical = any(selector[i] != i for i in range(table.size))
    rows, divisors = table.rows, table.left_divisors

    values: dict[tuple[int, int], int] = {}
    sets: dict[tuple[int, int], frozenset[int]] = {}
    missing: tuple[int, int] | None = None
    for g1, g2 in composable_pairs(table):
        members = _j_members(table, g1, g2)
        if keep_sets:
            sets[(g1, g2)] = frozenset(members)
        greatest = _greatest(table, members)
        if greatest is None:
            missing = (g1, g2)
            logger.warning(
                "J(%s, %s) has no greatest element: %s",
                table.name(g1),
                table.name(g2),
                sorted(table.name(m) for m in members),
            )
            break
        if canonical:
            head = selector[rows[g1][greatest]]
            shifted = divisors[head].get(g1)
            if shifted is not None and shifted in divisors[g2]:
                greatest = shifted
        values[(g1, g2)] = greatest

    logger.debug("Maximum J-function: %d values, missing=%s", len(values), missing)
    return JTable.model_construct(sets=sets, values=values, missing=missing)


def i_value(table: GermTable, j: JTable, g1: int, g2: int) -> int:
    """I(g1, g2) = g1•J(g1, g2)."""
    return j.i_value(table, g1, g2)


def is_garside_germ(table: GermTable, config: Config | None = None) -> GarsideVerdict:
    """Decide whether `table` is a Garside germ.

    Failed criteria are reported in this order: not-a-germ,
    not-left-associative, not-left-cancellative, no-greatest-J. A yes-verdict
    re-checks the sharp J-law when Config.verify_laws is set; a failure there
    means the canonicalization is inconsistent and is reported as
    law-violation.
    """
    config = config or Config()
    try:
        _check_preconditions(table)
    except UnsupportedGermError as e:
        logger.warning("Not a Garside germ: %s, witness %s", e.criterion, e.witness)
        return GarsideVerdict(
            is_garside=False,
            failed_criterion=FailedCriterion(e.criterion),
            witness=e.witness,
        )

    j = max_j_function(table)
    if j.missing is not None:
        return GarsideVerdict(
            is_garside=False,
            failed_criterion=FailedCriterion.NO_GREATEST_J,
            witness=j.missing,
        )

    if config.verify_laws:
        laws = verify_laws(table, j, laws=("J",))
        if not laws.j_law:
            violation = laws.violations["J"]
            logger.error(
                "Sharp J-law fails on a computed maximum J-function at %s", violation.triple
            )
            return GarsideVerdict(
                is_garside=False,
                failed_criterion=FailedCriterion.LAW_VIOLATION,
                witness=violation.triple,
                j_table=j,
            )

    logger.info("Garside germ: %d elements, %d J-values", table.size, len(j.values))
    return GarsideVerdict(is_garside=True, j_table=j)


def verify_laws(table: GermTable, j: JTable, laws: tuple[str, ...] = ("J", "I", "H")) -> LawReport:
    """Check the sharp laws of a total J-table on every relevant triple.

    J-law and I-law run over triples (g1, g2, g3) with g1•g2 defined and
    (g2, g3) composable:

        J(g1, g2•J(g2, g3)) = g2•J(g1•g2, g3)
        I(g1, I(g2, g3)) = I(g1•g2, g3)

    The H-law is checked on S^2 inputs with H(g1·g2) := I(g1, g2), over
    triples with g2•g3 defined: H(g1·(g2•g3)) = H(g1·H(g2·g3)).
    Both sides fold right to left, so on an undefined g2•g3 the law holds
    by construction; on the checked triples it says I(g1, g2•g3) =
    I(g1, I(g2, g3)), which fails as soon as I(g2, g3) is not g2•g3.
    Only the first violation of each law is kept.
    """
    if not j.is_total:
        raise PreconditionError(f"J-table is not total, first missing pair {j.missing}")
    values, rows = j.values, table.rows
    by_source = _elements_by_source(table)
    report = LawReport()

    def fail(law: str, triple: tuple[int, int, int], lhs: int | None, rhs: int | None) -> None:
        if law not in report.violations:
            report.violations[law] = LawViolation(law=law, triple=triple, lhs=lhs, rhs=rhs)
            logger.warning("Sharp %s-law fails at %s: %s != %s", law, triple, lhs, rhs)

    checked = 0
    for (g1, g2), g12 in sorted(table.products.items()):
        for g3 in by_source[table.target(g2)]:
            checked += 1
            i23 = rows[g2][values[(g2, g3)]]
            if "J" in laws:
                lhs = values[(g1, i23)]
                rhs = rows[g2].get(values[(g12, g3)])
                if lhs != rhs:
                    fail("J", (g1, g2, g3), lhs, rhs)
            if "I" in laws:
                lhs = rows[g1][values[(g1, i23)]]
                rhs = rows[g12][values[(g12, g3)]]
                if lhs != rhs:
                    fail("I", (g1, g2, g3), lhs, rhs)

    if "H" in laws:
        by_target: list[list[int]] = [[] for _ in table.objects]
        for element_id, element in enumerate(table.elements):
            by_target[element.target].append(element_id)
        for (g2, g3), g23 in sorted(table.products.items()):
            head23 = rows[g2][values[(g2, g3)]]
            for g1 in by_target[table.source(g2)]:
                lhs = rows[g1][values[(g1, g23)]]
                rhs = rows[g1][values[(g1, head23)]]
                if lhs != rhs:
                    fail("H", (g1, g2, g3), lhs, rhs)

    report.triples_checked = checked
    report.j_law = "J" not in report.violations
    report.i_law = "I" not in report.violations
    report.h_law = "H" not in report.violations
    return report


def noetherian_report(table: GermTable) -> NoetherianReport:
    """Left/right Noetherianity as acyclicity of the proper local divisibility digraphs.

    Left-Noetherian uses local left-divisibility, right-Noetherian local
    right-divisibility. An edge f -> g means f divides g and g does not
    divide f.
    """
    left_cycle = _proper_divisibility_cycle(table.left_divisors)
    right_cycle = _proper_divisibility_cycle(table.right_divisors)
    return NoetherianReport(
        left_noetherian=not left_cycle,
        right_noetherian=not right_cycle,
        left_cycle=left_cycle,
        right_cycle=right_cycle,
    )


def _proper_divisibility_cycle(divisors: tuple[dict[int, int], ...]) -> list[int]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(divisors)))
    for g, divs in enumerate(divisors):
        for f in divs:
            if f != g and g not in divisors[f]:
                graph.add_edge(f, g)
    try:
        return [u for u, _ in nx.find_cycle(graph)]
    except nx.NetworkXNoCycle:
        return []


def _right_lcms(table: GermTable, f: int, g: int) -> tuple[set[int], set[int]]:
    """Common right-multiples of f and g in S, and the lcms among them."""
    common = set(table.right_multiples(f) & table.right_multiples(g))
    divisors = table.left_divisors
    lcms = {m for m in common if all(m in divisors[other] for other in common)}
    return common, lcms


def lcm_criteria(table: GermTable) -> LcmReport:
    """Evaluate the common-multiple and lcm criteria.

    - J-sets admit common right-multiples: with right-Noetherianity,
      left-associativity and left-cancellativity this is equivalent to
      being a Garside germ.
    - Local right-lcms plus the lcm compatibility condition (g•h and g•h'
      defined imply g•h'' defined for every right-lcm h'' of h, h') is
      sufficient.
    - Associative, left-cancellative, right-Noetherian with right-lcms for
      every pair sharing a source is sufficient.
    """
    report = table.report
    witnesses: dict[str, tuple[int, ...]] = {}
    left_ok = bool(report.valid and report.left_associative and report.left_cancellative)
    right_noetherian = noetherian_report(table).right_noetherian

    j_common = True
    if report.valid:
        divisors = table.left_divisors
        for g1, g2 in composable_pairs(table):
            members = _j_members(table, g1, g2)
            pair = _pair_without_common_multiple(members, divisors)
            if pair is not None:
                j_common = False
                witnesses["j_sets_common_multiples"] = (g1, g2, *pair)
                break

    by_source = _elements_by_source(table)
    local_lcms = right_lcms = compatible = True
    for obj_elements in by_source:
        for position, f in enumerate(obj_elements):
            for g in obj_elements[position:]:
                common, lcms = _right_lcms(table, f, g)
                if not lcms:
                    if right_lcms:
                        right_lcms = False
                        witnesses["right_lcms"] = (f, g)
                    if common and local_lcms:
                        local_lcms = False
                        witnesses["local_right_lcms"] = (f, g)
                    continue
                if not compatible:
                    continue
                for left in table.columns[f].keys() & table.columns[g].keys():
                    bad = next((m for m in sorted(lcms) if table.product(left, m) is None), None)
                    if bad is not None:
                        compatible = False
                        witnesses["lcm_compatibility"] = (left, f, g, bad)
                        break

    associative = bool(report.valid and report.associative)
    rnoeth_applies = left_ok and right_noetherian
    llcm_applies = rnoeth_applies and local_lcms and compatible
    lcm_applies = associative and left_ok and right_noetherian and right_lcms
    result = LcmReport(
        j_sets_common_multiples=j_common,
        local_right_lcms=local_lcms,
        lcm_compatibility=compatible,
        right_lcms=right_lcms,
        associative=associative,
        right_noetherian=right_noetherian,
        rnoeth_criterion_applies=rnoeth_applies,
        rnoeth_criterion_garside=j_common if rnoeth_applies else None,
        llcm_criterion_applies=llcm_applies,
        lcm_corollary_applies=lcm_applies,
        witnesses=witnesses,
    )
    logger.debug("lcm criteria: %s", result.model_dump(exclude={"witnesses"}))
    return result


def _pair_without_common_multiple(
    members: set[int], divisors: tuple[dict[int, int], ...]
) -> tuple[int, int] | None:
    ordered = sorted(members)
    for position, h in enumerate(ordered):
        for h2 in ordered[position + 1 :]:
            if not any(h in divisors[m] and h2 in divisors[m] for m in members):
                return h, h2
    return None


def closure_report(table: GermTable) -> ClosureReport:
    """Head and closure conditions over S^2 products.

    For a composable pair (g1, g2) the S-divisors of g1·g2 are taken to be
    D = all local left-divisors of members of I(g1, g2). Checked: each
    non-invertible g1·g2 has a head in D (a member every other member
    divides), and any two members of D have a common right-multiple
    f•g' = g•f' in D. Under local divisibility the right-complement and
    right-comultiple conditions coincide on this domain; both flags are
    reported.
    """
    _check_preconditions(table)
    rows, divisors = table.rows, table.left_divisors
    invertibles = table.report.invertibles
    witnesses: dict[str, tuple[int, ...]] = {}
    heads = closed = True
    for g1, g2 in composable_pairs(table):
        if g1 in invertibles and g2 in invertibles:
            continue
        tops = {rows[g1][g] for g in _j_members(table, g1, g2)}
        domain: set[int] = set()
        for top in tops:
            domain.update(divisors[top])
        if heads and _greatest(table, domain) is None:
            heads = False
            witnesses["s2_heads"] = (g1, g2)
        if closed:
            pair = _pair_without_common_multiple(domain, divisors)
            if pair is not None:
                closed = False
                witnesses["right_complement_closed"] = (g1, g2, *pair)
        if not heads and not closed:
            break
    if "right_complement_closed" in witnesses:
        witnesses["right_comultiple_closed"] = witnesses["right_complement_closed"]
    return ClosureReport(
        s2_heads=heads,
        right_complement_closed=closed,
        right_comultiple_closed=closed,
        witnesses=witnesses,
    )
