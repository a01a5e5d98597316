"""Data models for germ files, verdicts and reports."""

from enum import Enum
from typing import TYPE_CHECKING, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

if TYPE_CHECKING:
    from .germ import GermTable

# Desk bounds for enumerated Coxeter groups, keyed by family.
MAX_RANK = {"A": 6, "B": 4, "I2": 12}
MIN_RANK = {"A": 2, "B": 2, "I2": 2}


class ElementEntry(BaseModel):
    """One element of a germ file: id, display name and endpoints (object names)."""
    id: int
    name: str
    source: str
    target: str


class GermFile(BaseModel):
    """A germ as stored on disk.

    Keys appear in the order objects, elements, identities, products; that
    order plus sorted elements and products makes serialization canonical.
    """
    objects: list[str]
    elements: list[ElementEntry]
    identities: dict[str, int]
    products: list[tuple[int, int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_structure(self) -> "GermFile":
        """Ids are dense, endpoints and identities name known objects, products are single-valued."""
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("objects: duplicate object name")
        known = set(self.objects)
        for position, entry in enumerate(self.elements):
            if entry.id != position:
                raise ValueError(f"elements[{position}]: id {entry.id} is not dense (expected {position})")
            for side in ("source", "target"):
                if getattr(entry, side) not in known:
                    raise ValueError(
                        f"elements[{position}].{side}: unknown object {getattr(entry, side)!r}"
                    )
        names = [entry.name for entry in self.elements]
        if len(set(names)) != len(names):
            raise ValueError("elements: duplicate element name")
        for obj in self.objects:
            if obj not in self.identities:
                raise ValueError(f"identities: missing identity for object {obj!r}")
        count = len(self.elements)
        for obj, element_id in self.identities.items():
            if obj not in known:
                raise ValueError(f"identities[{obj!r}]: unknown object")
            if not 0 <= element_id < count:
                raise ValueError(f"identities[{obj!r}]: element id {element_id} out of range")
        seen: dict[tuple[int, int], int] = {}
        for position, (left, right, result) in enumerate(self.products):
            for value in (left, right, result):
                if not 0 <= value < count:
                    raise ValueError(f"products[{position}]: element id {value} out of range")
            previous = seen.setdefault((left, right), result)
            if previous != result:
                raise ValueError(
                    f"products[{position}]: ({left}, {right}) already maps to {previous}"
                )
        return self


class AxiomReport(BaseModel):
    """Outcome of germ axiom checks.

    validate_germ fills only `valid` and the germ-axiom counterexamples;
    axiom_report fills every flag. Each false flag has at least one witness
    tuple under the matching key of `counterexamples`.
    """
    valid: bool
    left_associative: bool | None = None
    right_associative: bool | None = None
    left_cancellative: bool | None = None
    right_cancellative: bool | None = None
    invertibles: frozenset[int] = Field(default_factory=frozenset)
    atoms: frozenset[int] = Field(default_factory=frozenset)
    counterexamples: dict[str, list[tuple[int, ...]]] = Field(default_factory=dict)

    @property
    def associative(self) -> bool:
        return bool(self.left_associative and self.right_associative)


class Division(BaseModel):
    """Answer to a local divisibility query; `complement` is one witness when it divides."""
    divides: bool
    complement: int | None = None

    def __bool__(self) -> bool:
        return self.divides


class JTable(BaseModel):
    """J-sets of every composable pair and their selector-canonical greatest elements.

    `values` holds the maximum J-function where it exists; `missing` is the
    first pair (in scan order) whose J-set has no greatest element.
    """
    model_config = ConfigDict(frozen=True)

    sets: dict[tuple[int, int], frozenset[int]]
    values: dict[tuple[int, int], int]
    missing: tuple[int, int] | None = None

    @property
    def is_total(self) -> bool:
        return self.missing is None

    def value(self, g1: int, g2: int) -> int:
        return self.values[(g1, g2)]

    def i_value(self, table: "GermTable", g1: int, g2: int) -> int:
        """I(g1, g2) = g1•J(g1, g2)."""
        return table.rows[g1][self.values[(g1, g2)]]


class FailedCriterion(str, Enum):
    NOT_A_GERM = "not-a-germ"
    NOT_LEFT_ASSOCIATIVE = "not-left-associative"
    NOT_LEFT_CANCELLATIVE = "not-left-cancellative"
    NO_GREATEST_J = "no-greatest-J"
    LAW_VIOLATION = "law-violation"


class GarsideVerdict(BaseModel):
    """Yes/no answer of is_garside_germ with the failed criterion and a witness."""
    model_config = {"arbitrary_types_allowed": True}

    is_garside: bool
    failed_criterion: FailedCriterion | None = None
    witness: tuple[int, ...] = ()
    j_table: JTable | None = Field(default=None, exclude=True)


class LawViolation(BaseModel):
    """First triple on which a law fails, with both sides (None when undefined)."""
    law: str
    triple: tuple[int, int, int]
    lhs: int | None = None
    rhs: int | None = None


class LawReport(BaseModel):
    j_law: bool = True
    i_law: bool = True
    h_law: bool = True
    triples_checked: int = 0
    violations: dict[str, LawViolation] = Field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.j_law and self.i_law and self.h_law


class NoetherianReport(BaseModel):
    """Acyclicity of the proper local divisibility digraphs; a cycle is the witness."""
    left_noetherian: bool
    right_noetherian: bool
    left_cycle: list[int] = Field(default_factory=list)
    right_cycle: list[int] = Field(default_factory=list)


class LcmReport(BaseModel):
    """Common-multiple and lcm conditions and which sufficient criteria apply."""
    j_sets_common_multiples: bool
    local_right_lcms: bool
    lcm_compatibility: bool
    right_lcms: bool
    associative: bool
    right_noetherian: bool
    rnoeth_criterion_applies: bool
    rnoeth_criterion_garside: bool | None = None
    llcm_criterion_applies: bool
    lcm_corollary_applies: bool
    witnesses: dict[str, tuple[int, ...]] = Field(default_factory=dict)


class ClosureReport(BaseModel):
    """Head and closure conditions, checked over the S-divisors of S^2 products only."""
    s2_heads: bool
    right_complement_closed: bool
    right_comultiple_closed: bool
    restricted_to: str = "S2"
    witnesses: dict[str, tuple[int, ...]] = Field(default_factory=dict)


class DerivationReport(BaseModel):
    """Hypotheses of the derived-germ criteria; witnesses are group element ids."""
    suffix_closed: bool
    prefix_closed: bool
    sigma_lubs: bool
    sigma_compatibility: bool
    lubs: bool
    compatibility: bool
    lattice: bool
    witnesses: dict[str, tuple[int, ...]] = Field(default_factory=dict)


class CoxeterSpec(BaseModel):
    """A finite Coxeter type: A (permutations of `rank` points), B (signed), I2 (dihedral)."""
    family: Literal["A", "B", "I2"]
    rank: int

    @field_validator("family", mode="before")
    @classmethod
    def normalize_family(cls, v):
        """Accept lower-case family names."""
        return v.upper() if isinstance(v, str) else v

    @model_validator(mode="after")
    def check_bounds(self) -> "CoxeterSpec":
        low, high = MIN_RANK[self.family], MAX_RANK[self.family]
        if not low <= self.rank <= high:
            raise ValueError(
                f"unsupported rank {self.rank} for family {self.family} (allowed {low}..{high})"
            )
        return self


class Report(BaseModel):
    """Machine-readable result of a CLI command. Witnesses use element names."""
    command: str
    file: str | None = None
    verdicts: dict[str, bool | int | str | None] = Field(default_factory=dict)
    witnesses: dict[str, list[str]] = Field(default_factory=dict)
    details: dict[str, Any] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)
