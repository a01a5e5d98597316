"""The category generated by a Garside germ.

Elements of Cat(S) are handled only as words over the germ. Normal forms are
computed with the head/tail recursion

    H(g·w) = g•J(g, H(w))
    T(g·w) = K(g, H(w))·T(w),   where H(w) = J(g, H(w))•K(g, H(w))

evaluated right to left, so one pass over a word yields its head and a tail
word of the same length.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from .analyzer import is_garside_germ, lcm_criteria
from .config import Config
from .errors import (
    EnumerationLimitError,
    InvalidMoveError,
    NormalizationError,
    PreconditionError,
    UnsupportedGermError,
)
from .germ import GermTable, eqir_class_selector
from .models import FailedCriterion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathWord:
    """A composable sequence of element ids; the empty word carries its object."""
    entries: tuple[int, ...]
    source: int
    target: int

    @classmethod
    def of(cls, table: GermTable, entries: Sequence[int], source: int | None = None) -> "PathWord":
        """Build a word, checking composability. `source` is required for the empty word."""
        entries = tuple(entries)
        if not entries:
            if source is None:
                raise PreconditionError("the empty word needs an explicit object")
            return cls((), source, source)
        if source is not None and table.source(entries[0]) != source:
            raise PreconditionError(
                f"word starts at {table.objects[table.source(entries[0])]!r}, "
                f"not {table.objects[source]!r}"
            )
        for position, (f, g) in enumerate(zip(entries, entries[1:])):
            if not table.composable(f, g):
                raise PreconditionError(
                    f"entries {position} and {position + 1} ({table.name(f)!r}, {table.name(g)!r}) "
                    "are not composable"
                )
        return cls(entries, table.source(entries[0]), table.target(entries[-1]))

    def __len__(self) -> int:
        return len(self.entries)

    def names(self, table: GermTable) -> list[str]:
        return [table.name(e) for e in self.entries]


class NormalForm(PathWord):
    """A canonical S-normal word: greedy, no identity entries, an invertible entry only last."""


def pi(table: GermTable, w: PathWord) -> int | None:
    """Evaluate w inside the germ: Π(ε_x) = 1_x, Π(g·w) = g•Π(w); None when undefined."""
    if not table.report.left_associative:
        raise UnsupportedGermError(
            "evaluation is only well defined on left-associative germs",
            criterion=FailedCriterion.NOT_LEFT_ASSOCIATIVE.value,
            witness=table.report.counterexamples.get("left_associative", [()])[0],
        )
    value: int | None = table.identity(w.target)
    for g in reversed(w.entries):
        value = table.product(g, value)
        if value is None:
            return None
    return value


def rewrite_step(
    table: GermTable,
    w: PathWord,
    position: int,
    direction: str = "contract",
    factorization: tuple[int, int] | None = None,
) -> PathWord:
    """Apply one elementary move f·g <-> f•g at `position`.

    contract replaces entries position and position+1 by their product;
    expand replaces the entry at position by the given factorization.
    """
    entries = w.entries
    if direction == "contract":
        if not 0 <= position < len(entries) - 1:
            raise InvalidMoveError(f"no pair of entries at position {position}")
        f, g = entries[position], entries[position + 1]
        product = table.product(f, g)
        if product is None:
            raise InvalidMoveError(f"{table.name(f)}•{table.name(g)} is not defined")
        new_entries = entries[:position] + (product,) + entries[position + 2 :]
    elif direction == "expand":
        if not 0 <= position < len(entries):
            raise InvalidMoveError(f"no entry at position {position}")
        if factorization is None:
            raise InvalidMoveError("expand needs a factorization")
        f, g = factorization
        if table.product(f, g) != entries[position]:
            raise InvalidMoveError(
                f"{table.name(f)}•{table.name(g)} is not {table.name(entries[position])}"
            )
        new_entries = entries[:position] + (f, g) + entries[position + 1 :]
    else:
        raise InvalidMoveError(f"unknown direction {direction!r}")
    return PathWord(new_entries, w.source, w.target)


class GermCategory:
    """Normal forms and the word problem in the category of a Garside germ.

    Construction runs the Garside verdict once and keeps its J-table; every
    query afterwards only reads precomputed tables.

    Raises:
        UnsupportedGermError: the germ is not a Garside germ. The error carries
            the failed criterion and its witness.
    """

    def __init__(self, table: GermTable, config: Config | None = None, debug: bool = False):
        self.table = table
        self.config = config or Config()
        self.debug = debug

        self.logger = logger.getChild(f"{self.__class__.__name__}.{id(self)}")
        if debug:
            self.logger.setLevel(logging.DEBUG)

        verdict = is_garside_germ(table, self.config)
        if not verdict.is_garside:
            raise UnsupportedGermError(
                f"not a Garside germ ({verdict.failed_criterion.value})",
                criterion=verdict.failed_criterion.value,
                witness=verdict.witness,
            )
        self.verdict = verdict
        self.j_values = verdict.j_table.values
        self.selector = eqir_class_selector(table)
        self.invertibles = table.report.invertibles
        self.has_invertible_elements = len(self.invertibles) > len(table.identities)
        divisors = table.left_divisors
        # K(g1, g2): g2 = J(g1, g2)•K(g1, g2)
        self.complements = {(g1, g2): divisors[g2][j] for (g1, g2), j in self.j_values.items()}
        self.logger.debug(
            "Category ready: %d elements, %d invertibles", table.size, len(self.invertibles)
        )

        if self.config.cross_check:
            self._cross_check()

    def _cross_check(self) -> None:
        report = lcm_criteria(self.table)
        if report.rnoeth_criterion_applies and not report.rnoeth_criterion_garside:
            self.logger.warning("J-set common multiple criterion disagrees with the verdict")
        if report.lcm_corollary_applies or report.llcm_criterion_applies:
            self.logger.debug("lcm criteria agree with the verdict")

    # ------------------------------------------------------------------
    # Words

    def word(self, names: str | Sequence[str], obj: str | None = None) -> PathWord:
        """Parse a comma-separated (or listed) sequence of element names."""
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        entries = [self.table.element_id(n) for n in names]
        source = self.table.object_id(obj) if obj is not None else None
        if not entries and source is None and len(self.table.objects) == 1:
            source = 0
        return PathWord.of(self.table, entries, source)

    def _check(self, w: PathWord) -> None:
        PathWord.of(self.table, w.entries, w.source)

    # ------------------------------------------------------------------
    # Head and tail

    def _head_tail(self, entries: Sequence[int], target: int) -> tuple[int, list[int]]:
        rows, values, complements = self.table.rows, self.j_values, self.complements
        head = self.table.identity(target)
        tail = [0] * len(entries)
        for position in range(len(entries) - 1, -1, -1):
            g = entries[position]
            tail[position] = complements[(g, head)]
            head = rows[g][values[(g, head)]]
        return head, tail

    def head_sharp(self, w: PathWord) -> int:
        """H(w): the head of w, an element of S with w ≡ H(w)·T(w)."""
        return self._head_tail(w.entries, w.target)[0]

    def tail_sharp(self, w: PathWord) -> PathWord:
        """T(w): a word of the same length as w, untrimmed."""
        head, tail = self._head_tail(w.entries, w.target)
        return PathWord(tuple(tail), self.table.target(head), w.target)

    # ------------------------------------------------------------------
    # Normal forms

    def _trimmed(self, entries: Sequence[int]) -> list[int]:
        identities = self.table.identity_set
        return [e for e in entries if e not in identities]

    def normal_form(self, w: PathWord) -> NormalForm:
        """The S-normal form of w, trailing identities trimmed.

        Non-invertible entries are ≃-class representatives; a non-identity
        invertible element can only be the last entry.

        Raises:
            NormalizationError: more head extractions than
                (entries x |S| x step_budget_factor).
        """
        self._check(w)
        entries = self._trimmed(w.entries)
        budget = max(1, len(entries)) * self.table.size * self.config.step_budget_factor
        result: list[int] = []
        steps = 0
        while entries:
            steps += 1
            if steps > budget:
                raise NormalizationError(
                    f"normal form of a {len(w)}-entry word exceeded {budget} steps; "
                    "the germ verdict is inconsistent"
                )
            head, tail = self._head_tail(entries, w.target)
            if head in self.invertibles:
                # an invertible head means the remaining element is invertible
                remainder = self._evaluate_invertible(entries, w.target)
                if not self.table.is_identity(remainder):
                    result.append(remainder)
                break
            representative = self.selector[head]
            shift = self.table.left_divisors[head].get(representative)
            if representative != head and shift is not None:
                # head = representative•shift, the shift moves into the tail
                head, tail = representative, [shift, *tail]
            result.append(head)
            entries = self._trimmed(tail)
            self.logger.debug("head %s, %d tail entries left", self.table.name(head), len(entries))
        return NormalForm(tuple(result), w.source, w.target)

    def _evaluate_invertible(self, entries: Sequence[int], target: int) -> int:
        value: int | None = self.table.identity(target)
        for g in reversed(entries):
            value = self.table.product(g, value)
            if value is None:
                raise NormalizationError(
                    f"invertible remainder {[self.table.name(e) for e in entries]} "
                    "has no product inside the germ"
                )
        return value

    def left_multiply(self, f: int, nf: NormalForm) -> NormalForm:
        """normal_form([f]·nf) by the domino rule, threading the carry left to right."""
        if self.table.target(f) != nf.source:
            raise PreconditionError(
                f"{self.table.name(f)!r} does not end where the normal form starts"
            )
        if not nf.entries:
            return self.normal_form(PathWord.of(self.table, [f]))
        rows, values, complements = self.table.rows, self.j_values, self.complements
        carry = f
        result: list[int] = []
        for entry in nf.entries:
            result.append(rows[carry][values[(carry, entry)]])
            carry = complements[(carry, entry)]
        if not self.table.is_identity(carry):
            result.append(carry)
        product = PathWord(tuple(result), self.table.source(f), nf.target)
        if self.has_invertible_elements:
            return self.normal_form(product)
        return NormalForm(tuple(self._trimmed(product.entries)), product.source, product.target)

    def multiply(self, nf1: NormalForm, nf2: NormalForm) -> NormalForm:
        """Normal form of the concatenation nf1·nf2."""
        if nf1.target != nf2.source:
            raise PreconditionError("normal forms are not composable")
        result = nf2
        for entry in reversed(nf1.entries):
            result = self.left_multiply(entry, result)
        return result

    def word_problem(self, w1: PathWord, w2: PathWord) -> bool:
        """True iff w1 and w2 represent the same element of the category."""
        if (w1.source, w1.target) != (w2.source, w2.target):
            raise PreconditionError("words have different endpoints")
        return self.normal_form(w1) == self.normal_form(w2)

    def s_length(self, nf: NormalForm) -> int:
        """Number of non-invertible entries."""
        return sum(1 for e in nf.entries if e not in self.invertibles)

    def s_head(self, w: PathWord) -> int:
        """First entry of the normal form, or the identity at the source if it is empty."""
        nf = self.normal_form(w)
        return nf.entries[0] if nf.entries else self.table.identity(w.source)

    # ------------------------------------------------------------------
    # Greediness

    def is_greedy_pair(self, g1: int, g2: int) -> bool:
        """(g1, g2) is S-greedy iff the head of g1·g2 is ≃ g1."""
        if not self.table.composable(g1, g2):
            raise PreconditionError(
                f"{self.table.name(g1)!r} and {self.table.name(g2)!r} are not composable"
            )
        head = self.table.rows[g1][self.j_values[(g1, g2)]]
        return self.selector[head] == self.selector[g1]

    def is_normal(self, w: PathWord) -> bool:
        """Every entry is a germ element and every adjacent pair is greedy."""
        if any(not 0 <= e < self.table.size for e in w.entries):
            return False
        return all(self.is_greedy_pair(f, g) for f, g in zip(w.entries, w.entries[1:]))

    # ------------------------------------------------------------------
    # Enumeration

    def enumerate_normal_forms(self, max_length: int) -> list[set[NormalForm]]:
        """Normal forms grouped by S-length 0..max_length.

        Level k+1 is obtained by left-multiplying level k by non-invertible
        germ elements and keeping results of S-length k+1.

        Raises:
            EnumerationLimitError: more than Config.enumerate_limit forms.
        """
        table = self.table
        letters = [s for s in range(table.size) if s not in self.invertibles]
        level = {
            self.normal_form(PathWord.of(table, [] if table.is_identity(e) else [e], table.source(e)))
            for e in self.invertibles
        }
        levels = [level]
        held = len(level)
        for k in range(max_length):
            following: set[NormalForm] = set()
            for nf in levels[-1]:
                for s in letters:
                    if table.target(s) != nf.source:
                        continue
                    product = self.left_multiply(s, nf)
                    if self.s_length(product) == k + 1:
                        following.add(product)
            held += len(following)
            if held > self.config.enumerate_limit:
                raise EnumerationLimitError(
                    f"{held} normal forms up to length {k + 1} exceed the limit "
                    f"{self.config.enumerate_limit}"
                )
            self.logger.debug("length %d: %d normal forms", k + 1, len(following))
            levels.append(following)
        return levels

    def count_by_length(self, max_length: int) -> list[int]:
        return [len(level) for level in self.enumerate_normal_forms(max_length)]

    def count_normal_forms(self, max_length: int) -> list[int]:
        """Count normal words by length with the greedy-pair transition table.

        Only for germs without nontrivial invertibles, where normal words and
        elements correspond one to one.
        """
        if self.has_invertible_elements:
            raise UnsupportedGermError("counting by transitions needs trivial invertibles")
        letters = [s for s in range(self.table.size) if not self.table.is_identity(s)]
        follows = {
            s: [t for t in letters if self.table.composable(s, t) and self.is_greedy_pair(s, t)]
            for s in letters
        }
        counts = [len(self.table.objects)]
        current = dict.fromkeys(letters, 1)
        for _ in range(max_length):
            counts.append(sum(current.values()))
            following = dict.fromkeys(letters, 0)
            for s, count in current.items():
                for t in follows[s]:
                    following[t] += count
            current = following
        return counts[: max_length + 1]

    def relations(self) -> list[tuple[int, int, int]]:
        """Defining relations f·g = f•g of the category, identity factors left out."""
        identities = self.table.identity_set
        return [
            (f, g, h)
            for (f, g), h in sorted(self.table.products.items())
            if f not in identities and g not in identities
        ]
