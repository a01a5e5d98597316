"""Finite germs: an immutable product table and the axiom checks on it.

A germ is a precategory with identities and a partial product `•`. Elements
and objects are dense integer ids; names are only for display. A missing
product entry means "undefined".
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Literal, NamedTuple

from networkx.utils import UnionFind

from .errors import PreconditionError, StructuralError
from .models import AxiomReport, Division

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]

# Counterexamples kept per failed property.
MAX_WITNESSES = 5


class Element(NamedTuple):
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class GermTable:
    """A finite germ (S, 1_S, •).

    Attributes:
        objects: Display names of the objects, indexed by object id.
        elements: Per element id, its name, source and target object ids.
        identities: Per object id, the element id of its identity.
        products: Partial product, (f, g) -> f•g. Only composable pairs.

    Construction checks structure only (ids in range, identities are
    loops, composable product keys). Germ axioms are checked by
    validate_germ and axiom_report.
    """
    objects: tuple[str, ...]
    elements: tuple[Element, ...]
    identities: tuple[int, ...]
    products: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "elements", tuple(Element(*e) for e in self.elements))
        object.__setattr__(self, "identities", tuple(self.identities))
        object.__setattr__(self, "products", MappingProxyType(dict(self.products)))
        self._check_structure()

    def _check_structure(self) -> None:
        num_objects, size = len(self.objects), len(self.elements)
        if len(set(self.objects)) != num_objects:
            raise StructuralError("objects: duplicate object name")
        for element_id, element in enumerate(self.elements):
            for side in ("source", "target"):
                obj = getattr(element, side)
                if not 0 <= obj < num_objects:
                    raise StructuralError(
                        f"element {element_id} ({element.name!r}): {side} object {obj} out of range"
                    )
        if len({e.name for e in self.elements}) != size:
            raise StructuralError("elements: duplicate element name")
        if len(self.identities) != num_objects:
            raise StructuralError(
                f"identities: {len(self.identities)} entries for {num_objects} objects"
            )
        for obj, element_id in enumerate(self.identities):
            if not 0 <= element_id < size:
                raise StructuralError(
                    f"identity of object {self.objects[obj]!r}: element {element_id} out of range"
                )
            element = self.elements[element_id]
            if element.source != obj or element.target != obj:
                raise StructuralError(
                    f"identity of object {self.objects[obj]!r}: element {element.name!r} "
                    "is not a loop on that object"
                )
        for (f, g), h in self.products.items():
            for value in (f, g, h):
                if not 0 <= value < size:
                    raise StructuralError(f"product ({f}, {g}) -> {h}: element {value} out of range")
            if self.elements[f].target != self.elements[g].source:
                raise StructuralError(
                    f"product ({f}, {g}) -> {h}: {self.name(f)!r} and {self.name(g)!r} "
                    "are not composable"
                )

    @classmethod
    def single_object(
        cls,
        names: Sequence[str],
        products: Iterable[tuple[str, str, str]],
        obj: str = "x",
    ) -> "GermTable":
        """Build a one-object germ from element names and (f, g, f•g) name triples.

        The first name is the identity; its products with every element are added.
        """
        index = {name: i for i, name in enumerate(names)}
        table: dict[tuple[int, int], int] = {}
        for f in range(len(names)):
            table[(0, f)] = f
            table[(f, 0)] = f
        for f, g, h in products:
            table[(index[f], index[g])] = index[h]
        return cls(
            objects=(obj,),
            elements=tuple(Element(name, 0, 0) for name in names),
            identities=(0,),
            products=table,
        )

    # ------------------------------------------------------------------
    # Lookups

    @property
    def size(self) -> int:
        return len(self.elements)

    def product(self, f: int, g: int) -> int | None:
        return self.products.get((f, g))

    def source(self, f: int) -> int:
        return self.elements[f].source

    def target(self, f: int) -> int:
        return self.elements[f].target

    def name(self, f: int) -> str:
        return self.elements[f].name

    def identity(self, obj: int) -> int:
        return self.identities[obj]

    def is_identity(self, f: int) -> bool:
        return f in self.identity_set

    def element_id(self, name: str) -> int:
        try:
            return self.name_index[name]
        except KeyError:
            raise PreconditionError(f"unknown element name {name!r}") from None

    def object_id(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise PreconditionError(f"unknown object name {name!r}") from None

    def composable(self, f: int, g: int) -> bool:
        return self.elements[f].target == self.elements[g].source

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {e.name: i for i, e in enumerate(self.elements)}

    @cached_property
    def identity_set(self) -> frozenset[int]:
        return frozenset(self.identities)

    @cached_property
    def rows(self) -> tuple[dict[int, int], ...]:
        """rows[f] maps g to f•g for every defined product."""
        rows: list[dict[int, int]] = [{} for _ in self.elements]
        for (f, g), h in sorted(self.products.items()):
            rows[f][g] = h
        return tuple(rows)

    @cached_property
    def columns(self) -> tuple[dict[int, int], ...]:
        """columns[g] maps f to f•g for every defined product."""
        columns: list[dict[int, int]] = [{} for _ in self.elements]
        for (f, g), h in sorted(self.products.items()):
            columns[g][f] = h
        return tuple(columns)

    @cached_property
    def left_divisors(self) -> tuple[dict[int, int], ...]:
        """left_divisors[h] maps f to the least g with f•g = h."""
        divisors: list[dict[int, int]] = [{} for _ in self.elements]
        for (f, g), h in sorted(self.products.items()):
            divisors[h].setdefault(f, g)
        return tuple(divisors)

    @cached_property
    def right_divisors(self) -> tuple[dict[int, int], ...]:
        """right_divisors[h] maps g to the least f with f•g = h."""
        divisors: list[dict[int, int]] = [{} for _ in self.elements]
        for (f, g), h in sorted(self.products.items()):
            divisors[h].setdefault(g, f)
        return tuple(divisors)

    @cached_property
    def report(self) -> AxiomReport:
        """The full axiom report, computed once per table."""
        return axiom_report(self)

    def divides(self, f: int, g: int) -> bool:
        """Local left-divisibility f ⋖ g."""
        return f in self.left_divisors[g]

    def right_multiples(self, f: int) -> frozenset[int]:
        """Every f•g defined in the germ."""
        return frozenset(self.rows[f].values())

    def left_multiples(self, g: int) -> frozenset[int]:
        """Every f•g defined in the germ, for fixed g."""
        return frozenset(self.columns[g].values())

    # ------------------------------------------------------------------
    # Derived tables

    def without_product(self, f: int, g: int) -> "GermTable":
        """A copy with the (f, g) product entry removed."""
        products = dict(self.products)
        products.pop((f, g), None)
        return GermTable(self.objects, self.elements, self.identities, products)

    def with_products(self, updates: Mapping[tuple[int, int], int]) -> "GermTable":
        """A copy with product entries added or overwritten."""
        return GermTable(self.objects, self.elements, self.identities, {**self.products, **updates})

    def restricted_to(self, keep: Iterable[int]) -> "GermTable":
        """The sub-germ on `keep` (identities always kept), ids renumbered in order."""
        kept = sorted(set(keep) | self.identity_set)
        renumber = {old: new for new, old in enumerate(kept)}
        products = {
            (renumber[f], renumber[g]): renumber[h]
            for (f, g), h in self.products.items()
            if f in renumber and g in renumber and h in renumber
        }
        return GermTable(
            self.objects,
            tuple(self.elements[old] for old in kept),
            tuple(renumber[i] for i in self.identities),
            products,
        )


def _record(counterexamples: dict[str, list[tuple[int, ...]]], key: str, witness: tuple[int, ...]) -> None:
    found = counterexamples.setdefault(key, [])
    if len(found) < MAX_WITNESSES:
        found.append(witness)


def validate_germ(table: GermTable) -> AxiomReport:
    """Check the germ axioms: endpoints of products, identity products, associativity exchange.

    Witness keys are "germ1" (f, g), "germ2" (identity, f) or (f, identity),
    and "germ3" (f, g, h).
    """
    counterexamples: dict[str, list[tuple[int, ...]]] = {}
    elements = table.elements

    for (f, g), h in sorted(table.products.items()):
        if elements[h].source != elements[f].source or elements[h].target != elements[g].target:
            _record(counterexamples, "germ1", (f, g))

    for f, element in enumerate(elements):
        left = table.identities[element.source]
        right = table.identities[element.target]
        if table.product(left, f) != f:
            _record(counterexamples, "germ2", (left, f))
        if table.product(f, right) != f:
            _record(counterexamples, "germ2", (f, right))

    rows = table.rows
    for (f, g), fg in sorted(table.products.items()):
        for h, gh in rows[g].items():
            left = table.product(fg, h)
            right = table.product(f, gh)
            if left != right:
                _record(counterexamples, "germ3", (f, g, h))

    valid = not counterexamples
    if not valid:
        logger.warning("Germ axioms fail: %s", sorted(counterexamples))
    return AxiomReport(valid=valid, counterexamples=counterexamples)


def axiom_report(table: GermTable) -> AxiomReport:
    """Decide associativity and cancellativity, and list invertibles and atoms.

    Invalid germs get the validate_germ report back unchanged.
    """
    report = validate_germ(table)
    if not report.valid:
        return report

    counterexamples: dict[str, list[tuple[int, ...]]] = {}
    rows, columns = table.rows, table.columns

    # (f•g)•h defined implies g•h defined
    for (f, g), fg in sorted(table.products.items()):
        for h in rows[fg]:
            if table.product(g, h) is None:
                _record(counterexamples, "left_associative", (f, g, h))

    # f•(g•h) defined implies f•g defined
    for (g, h), gh in sorted(table.products.items()):
        for f in columns[gh]:
            if table.product(f, g) is None:
                _record(counterexamples, "right_associative", (f, g, h))

    for f, row in enumerate(rows):
        seen: dict[int, int] = {}
        for g, fg in row.items():
            if fg in seen:
                _record(counterexamples, "left_cancellative", (f, seen[fg], g))
            else:
                seen[fg] = g

    for g, column in enumerate(columns):
        seen = {}
        for f, fg in column.items():
            if fg in seen:
                _record(counterexamples, "right_cancellative", (seen[fg], f, g))
            else:
                seen[fg] = f

    identities = table.identity_set
    invertibles = frozenset(
        e
        for e, row in enumerate(rows)
        if any(ee in identities and table.product(inv, e) in identities for inv, ee in row.items())
    )
    decomposable = {
        h
        for (f, g), h in table.products.items()
        if f not in invertibles and g not in invertibles
    }
    atoms = frozenset(
        h for h in range(table.size) if h not in invertibles and h not in decomposable
    )

    report = AxiomReport(
        valid=True,
        left_associative="left_associative" not in counterexamples,
        right_associative="right_associative" not in counterexamples,
        left_cancellative="left_cancellative" not in counterexamples,
        right_cancellative="right_cancellative" not in counterexamples,
        invertibles=invertibles,
        atoms=atoms,
        counterexamples=counterexamples,
    )
    logger.debug(
        "Axiom report: %d elements, %d invertibles, %d atoms, failures %s",
        table.size,
        len(invertibles),
        len(atoms),
        sorted(counterexamples),
    )
    return report


def local_divisibility(table: GermTable, f: int, g: int, side: Side = "left") -> Division:
    """Local divisibility in the germ.

    left:  f ⋖ g, that is g = f•g' for some g' (returned as complement).
    right: f right-divides g, that is g = f'•f for some f'.
    """
    if side == "left":
        if table.source(f) != table.source(g):
            raise PreconditionError(
                f"{table.name(f)!r} and {table.name(g)!r} do not share a source"
            )
        complement = table.left_divisors[g].get(f)
    elif side == "right":
        if table.target(f) != table.target(g):
            raise PreconditionError(
                f"{table.name(f)!r} and {table.name(g)!r} do not share a target"
            )
        complement = table.right_divisors[g].get(f)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return Division(divides=complement is not None, complement=complement)


def eqir_class_selector(table: GermTable) -> tuple[int, ...]:
    """Map each element to the least id of its class under f ≃ f•e, e invertible."""
    invertibles = table.report.invertibles
    classes = UnionFind(range(table.size))
    for (f, e), fe in table.products.items():
        if e in invertibles:
            classes.union(f, fe)
    selector = list(range(table.size))
    for members in classes.to_sets():
        least = min(members)
        for member in members:
            selector[member] = least
    return tuple(selector)
