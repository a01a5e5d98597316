"""Finite Coxeter groups and the germs derived from them.

Groups of type A (permutations of n points), B (signed permutations of n
points) and I2(m) (dihedral of order 2m) are enumerated in full. Products act
on the right: fg means "apply f, then g", so (fg)[i] = g[f[i]].

Given a positively generating set Σ, the derived germ on H ⊆ G has
f•g = fg exactly when fg lies in H and ℓ_Σ(fg) = ℓ_Σ(f) + ℓ_Σ(g).
"""

import logging
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import networkx as nx

from .analyzer import is_garside_germ
from .config import Config
from .errors import DerivationError, PreconditionError
from .germ import Element, GermTable, axiom_report
from .models import CoxeterSpec, DerivationReport

logger = logging.getLogger(__name__)

Perm = tuple[int, ...]

# Object name of derived germs; they have a single object.
DERIVED_OBJECT = "*"


def _compose(f: Perm, g: Perm) -> Perm:
    return tuple(g[i] for i in f)


def _transposition(n: int, i: int, j: int) -> Perm:
    points = list(range(n))
    points[i], points[j] = j, i
    return tuple(points)


def _cycle_name(p: Perm) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = p[point]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "1"


def _signed_name(p: Perm) -> str:
    n = len(p) // 2
    return "[" + "".join(str(v + 1) if v < n else str(-(v - n + 1)) for v in p[:n]) + "]"


@dataclass(frozen=True)
class CoxeterGroup:
    """An enumerated finite Coxeter group.

    Attributes:
        spec: Family and rank (the dihedral order m for I2).
        names: Display name per element id; id 0 is the identity.
        mult: Full multiplication table, mult[f][g] = id of fg.
        inverse: Inverse per element id.
        simple: Ids of the simple reflections in index order.
    """
    spec: CoxeterSpec
    names: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    simple: tuple[int, ...]

    identity = 0

    @property
    def order(self) -> int:
        return len(self.names)

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def reflections(self) -> frozenset[int]:
        """All conjugates w s w^-1 of simple reflections."""
        mult, inverse = self.mult, self.inverse
        return frozenset(mult[mult[w][s]][inverse[w]] for w in range(self.order) for s in self.simple)

    def multiply(self, *ids: int) -> int:
        result = self.identity
        for g in ids:
            result = self.mult[result][g]
        return result

    def element_from_word(self, word: Sequence[int]) -> int:
        """The product of simple reflections given by their indices."""
        return self.multiply(*(self.simple[i] for i in word))


def _enumerate(
    identity: Hashable,
    generators: Sequence[Hashable],
    compose: Callable,
    name: Callable[[Hashable], str],
) -> tuple[list[Hashable], list[str], list[tuple[int, ...]], list[int], list[int]]:
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = compose(x, s)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    mult = [tuple(index[compose(x, y)] for y in elements) for x in elements]
    inverse = [row.index(0) for row in mult]
    return elements, [name(x) for x in elements], mult, inverse, [index[s] for s in generators]


def build_group(spec: CoxeterSpec) -> CoxeterGroup:
    """Enumerate the group of `spec` breadth-first from the identity."""
    n = spec.rank
    if spec.family == "A":
        generators = [_transposition(n, i, i + 1) for i in range(n - 1)]
        parts = _enumerate(tuple(range(n)), generators, _compose, _cycle_name)
    elif spec.family == "B":
        # point i stands for +(i+1), point i+n for -(i+1)
        sign = list(range(2 * n))
        sign[0], sign[n] = n, 0
        generators = [tuple(sign)]
        for i in range(1, n):
            points = list(range(2 * n))
            points[i - 1], points[i] = i, i - 1
            points[i - 1 + n], points[i + n] = i + n, i - 1 + n
            generators.append(tuple(points))
        parts = _enumerate(tuple(range(2 * n)), generators, _compose, _signed_name)
    else:
        m = n

        def dihedral(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
            # (k, f) is r^k s^f with r = s_a s_b and s = s_a
            return ((x[0] + (-1) ** x[1] * y[0]) % m, x[1] ^ y[1])

        parts = _enumerate(
            (0, 0),
            [(0, 1), (m - 1, 1)],
            dihedral,
            lambda x: f"{'rs'[x[1]]}{x[0]}",
        )
    _, names, mult, inverse, simple = parts
    group = CoxeterGroup(spec, tuple(names), tuple(mult), tuple(inverse), tuple(simple))
    logger.debug("Built %s(%d): %d elements", spec.family, spec.rank, group.order)
    return group


@dataclass(frozen=True)
class GeneratorSet:
    kind: Literal["simple", "reflections"]
    members: frozenset[int]

    @classmethod
    def simple_reflections(cls, group: CoxeterGroup) -> "GeneratorSet":
        return cls("simple", frozenset(group.simple))

    @classmethod
    def all_reflections(cls, group: CoxeterGroup) -> "GeneratorSet":
        return cls("reflections", group.reflections)


class TightContext:
    """Σ-length, tightness and the Σ-prefix order on an enumerated group.

    Raises:
        PreconditionError: Σ does not positively generate the group.
    """

    def __init__(self, group: CoxeterGroup, generators: GeneratorSet):
        self.group = group
        self.generators = generators
        cayley = nx.DiGraph()
        cayley.add_nodes_from(range(group.order))
        cayley.add_edges_from(
            (g, group.mult[g][s]) for g in range(group.order) for s in generators.members
        )
        lengths = nx.single_source_shortest_path_length(cayley, group.identity)
        if len(lengths) != group.order:
            raise PreconditionError(
                f"{generators.kind} generators reach {len(lengths)} of {group.order} elements"
            )
        self.lengths = tuple(lengths[g] for g in range(group.order))

    def length(self, g: int) -> int:
        return self.lengths[g]

    def is_tight(self, sequence: Iterable[int]) -> bool:
        sequence = list(sequence)
        return self.lengths[self.group.multiply(*sequence)] == sum(self.lengths[g] for g in sequence)

    def is_prefix(self, f: int, g: int) -> bool:
        """f ⪯ g iff (f, f^-1 g) is tight."""
        rest = self.group.mult[self.group.inverse[f]][g]
        return self.lengths[f] + self.lengths[rest] == self.lengths[g]

    def is_suffix(self, f: int, g: int) -> bool:
        """f is a Σ-suffix of g iff (g f^-1, f) is tight."""
        rest = self.group.mult[g][self.group.inverse[f]]
        return self.lengths[rest] + self.lengths[f] == self.lengths[g]

    @cached_property
    def prefixes(self) -> tuple[frozenset[int], ...]:
        """prefixes[g] = {f : f ⪯ g}."""
        order = self.group.order
        return tuple(
            frozenset(f for f in range(order) if self.is_prefix(f, g)) for g in range(order)
        )

    def prefix_lub(self, H: Iterable[int], f: int, g: int) -> int | None:
        """The ⪯-least common upper bound of f and g among elements of H, if any."""
        prefixes = self.prefixes
        uppers = [h for h in H if f in prefixes[h] and g in prefixes[h]]
        for candidate in uppers:
            if all(candidate in prefixes[other] for other in uppers):
                return candidate
        return None


def sigma_length(ctx: TightContext, g: int) -> int:
    return ctx.length(g)


def is_tight(ctx: TightContext, sequence: Iterable[int]) -> bool:
    return ctx.is_tight(sequence)


def is_prefix(ctx: TightContext, f: int, g: int) -> bool:
    return ctx.is_prefix(f, g)


def is_suffix(ctx: TightContext, f: int, g: int) -> bool:
    return ctx.is_suffix(f, g)


def prefix_lub(ctx: TightContext, H: Iterable[int], f: int, g: int) -> int | None:
    return ctx.prefix_lub(H, f, g)


def derive_germ(ctx: TightContext, H: Iterable[int]) -> GermTable:
    """The derived germ on H: f•g = fg when fg ∈ H and (f, g) is tight.

    Germ ids put the identity first, then sort by (Σ-length, group id).

    Raises:
        PreconditionError: H does not contain the identity.
        DerivationError: the result is not cancellative or has nontrivial
            invertibles.
    """
    group, lengths = ctx.group, ctx.lengths
    members = set(H)
    if group.identity not in members:
        raise PreconditionError("H must contain the identity")
    ordered = sorted(members, key=lambda g: (lengths[g], g))
    germ_id = {g: i for i, g in enumerate(ordered)}
    products = {}
    for f in ordered:
        row = group.mult[f]
        for g in ordered:
            fg = row[g]
            if fg in germ_id and lengths[fg] == lengths[f] + lengths[g]:
                products[(germ_id[f], germ_id[g])] = germ_id[fg]
    table = GermTable(
        objects=(DERIVED_OBJECT,),
        elements=tuple(Element(group.names[g], 0, 0) for g in ordered),
        identities=(0,),
        products=products,
    )
    report = axiom_report(table)
    if not (report.valid and report.left_cancellative and report.right_cancellative):
        raise DerivationError(f"derived germ fails cancellativity: {sorted(report.counterexamples)}")
    if report.invertibles != table.identity_set:
        raise DerivationError("derived germ has nontrivial invertible elements")
    logger.debug("Derived germ: %d elements, %d products", table.size, len(products))
    return table


def _assert_garside(table: GermTable, label: str) -> GermTable:
    verdict = is_garside_germ(table, Config(verify_laws=False))
    if not verdict.is_garside:
        raise DerivationError(
            f"{label} germ is not a Garside germ ({verdict.failed_criterion}, witness {verdict.witness})"
        )
    return table


def classical_germ(spec: CoxeterSpec) -> GermTable:
    """Derived germ on the whole group with the simple reflections."""
    group = build_group(spec)
    ctx = TightContext(group, GeneratorSet.simple_reflections(group))
    table = derive_germ(ctx, range(group.order))
    logger.info("Classical germ %s(%d): %d elements", spec.family, spec.rank, table.size)
    return _assert_garside(table, "classical")


def coxeter_element(group: CoxeterGroup, order: Sequence[int] | None = None) -> int:
    """Product of the simple reflections in `order` (default: index order)."""
    count = len(group.simple)
    order = list(range(count)) if order is None else list(order)
    if sorted(order) != list(range(count)):
        raise PreconditionError(
            f"Coxeter element order must be a permutation of 0..{count - 1}, got {order}"
        )
    return group.element_from_word(order)


def dual_germ(spec: CoxeterSpec, order: Sequence[int] | None = None) -> GermTable:
    """Derived germ on Div(c) = {w : w ⪯_T c} with all reflections T."""
    group = build_group(spec)
    ctx = TightContext(group, GeneratorSet.all_reflections(group))
    c = coxeter_element(group, order)
    table = derive_germ(ctx, ctx.prefixes[c])
    logger.info("Dual germ %s(%d): %d elements", spec.family, spec.rank, table.size)
    return _assert_garside(table, "dual")


def check_derivation_hypotheses(ctx: TightContext, H: Iterable[int]) -> DerivationReport:
    """Closure and least-upper-bound hypotheses of the derived-germ criteria.

    Upper bounds are taken among elements of H. The Σ-variants restrict g, g'
    to generators lying in H; the full variants let them range over H. The
    lattice flag needs both closures and a lub for every pair of H.
    """
    group, prefixes = ctx.group, ctx.prefixes
    members = sorted(set(H))
    in_h = set(members)
    witnesses: dict[str, tuple[int, ...]] = {}

    def first(key: str, found: tuple[int, ...] | None) -> bool:
        if found is not None:
            witnesses[key] = found
        return found is None

    suffix_closed = first(
        "suffix_closed",
        next(
            ((h, f) for h in members for f in range(group.order) if ctx.is_suffix(f, h) and f not in in_h),
            None,
        ),
    )
    prefix_closed = first(
        "prefix_closed",
        next(((h, f) for h in members for f in sorted(prefixes[h]) if f not in in_h), None),
    )

    def has_upper(f: int, g: int) -> bool:
        return any(f in prefixes[h] and g in prefixes[h] for h in members)

    def lubs(candidates: list[int]) -> tuple[dict[tuple[int, int], int], tuple[int, ...] | None]:
        found: dict[tuple[int, int], int] = {}
        missing = None
        for position, f in enumerate(candidates):
            for g in candidates[position:]:
                if not has_upper(f, g):
                    continue
                lub = ctx.prefix_lub(members, f, g)
                if lub is None:
                    missing = missing or (f, g)
                else:
                    found[(f, g)] = found[(g, f)] = lub
        return found, missing

    def compatible(found: dict[tuple[int, int], int]) -> tuple[int, ...] | None:
        for (g, g2), lub in found.items():
            for f in members:
                fg, fg2 = group.mult[f][g], group.mult[f][g2]
                if fg in in_h and fg2 in in_h and ctx.is_tight((f, g)) and ctx.is_tight((f, g2)):
                    if not (group.mult[f][lub] in in_h and ctx.is_tight((f, lub))):
                        return (f, g, g2, lub)
        return None

    generators = sorted(ctx.generators.members & in_h)
    sigma_found, sigma_missing = lubs(generators)
    all_found, all_missing = lubs(members)
    sigma_lubs = first("sigma_lubs", sigma_missing)
    sigma_compatibility = first("sigma_compatibility", compatible(sigma_found))
    all_lubs = first("lubs", all_missing)
    all_compatibility = first("compatibility", compatible(all_found))

    lattice_missing = next(
        (
            (f, g)
            for position, f in enumerate(members)
            for g in members[position:]
            if ctx.prefix_lub(members, f, g) is None
        ),
        None,
    )
    lattice = suffix_closed and prefix_closed and first("lattice", lattice_missing)
    return DerivationReport(
        suffix_closed=suffix_closed,
        prefix_closed=prefix_closed,
        sigma_lubs=sigma_lubs,
        sigma_compatibility=sigma_compatibility,
        lubs=all_lubs,
        compatibility=all_compatibility,
        lattice=lattice,
        witnesses=witnesses,
    )
