"""Shared pytest fixtures for garside-germs tests.

The fixtures follow the data flow of the package: hand-built germs and
germs derived from Coxeter groups, the category built on top of them, and
an independent rewriting oracle used to check normal forms against the
defining relations directly.

In the classical germ of S3 (type A, 3 points) the simple reflections are
a = (12) and b = (23); with products acting on the right, ab = (132),
ba = (123) and the top element Δ = aba = bab = (13).
"""

from collections import deque
from collections.abc import Sequence
from typing import NamedTuple

import pytest

from garside_germs import (
    CoxeterSpec,
    GermCategory,
    GermTable,
    classical_germ,
    dual_germ,
)

# =============================================================================
# Hand-built Germs
# =============================================================================


@pytest.fixture
def identity_germ() -> GermTable:
    """One object x, one element 1_x, and the single product 1_x•1_x = 1_x."""
    return GermTable.single_object(["1"], [])


@pytest.fixture
def inverse_germ() -> GermTable:
    """Three elements {1, e, e'} with e•e' = e'•e = 1.

    A valid germ whose elements are all invertible. It is not
    left-associative: (e•e')•e' = e' is defined but e'•e' is not.
    """
    return GermTable.single_object(["1", "e", "e'"], [("e", "e'", "1"), ("e'", "e", "1")])


@pytest.fixture
def no_greatest_germ() -> GermTable:
    """Five elements {1, h, h', hh', h2} with h•h' = h'•h = hh' and h•h = h2.

    J(h, hh') = {1, h, h'} where h and h' are incomparable, so the germ
    has no maximum J-function.
    """
    return GermTable.single_object(
        ["1", "h", "h'", "hh'", "h2"],
        [("h", "h'", "hh'"), ("h'", "h", "hh'"), ("h", "h", "h2")],
    )


@pytest.fixture
def two_object_germ() -> GermTable:
    """Objects x, y with identities and one arrow u: x -> y."""
    return GermTable(
        objects=("x", "y"),
        elements=(("1x", 0, 0), ("1y", 1, 1), ("u", 0, 1)),
        identities=(0, 1),
        products={(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2},
    )


@pytest.fixture
def parity_germ() -> GermTable:
    """Germ of N × Z/2: {1, e, a, ae} with e•e = 1 and e commuting with a.

    A Garside germ with a non-identity invertible element e. The
    ≃-classes are {1, e} and {a, ae}, and a•a is not defined.
    """
    return GermTable.single_object(
        ["1", "e", "a", "ae"],
        [("e", "e", "1"), ("a", "e", "ae"), ("e", "a", "ae"), ("ae", "e", "a"), ("e", "ae", "a")],
    )


# =============================================================================
# Derived Germs
# =============================================================================


class S3Ids(NamedTuple):
    e: int
    a: int
    b: int
    ab: int
    ba: int
    delta: int


@pytest.fixture(scope="session")
def classical_s3() -> GermTable:
    """Classical germ of S3: the whole group with simple reflections."""
    return classical_germ(CoxeterSpec(family="A", rank=3))


@pytest.fixture(scope="session")
def s3(classical_s3) -> S3Ids:
    """Element ids of the classical S3 germ, by role."""
    ids = classical_s3.element_id
    return S3Ids(ids("1"), ids("(12)"), ids("(23)"), ids("(132)"), ids("(123)"), ids("(13)"))


@pytest.fixture(scope="session")
def classical_s4() -> GermTable:
    return classical_germ(CoxeterSpec(family="A", rank=4))


@pytest.fixture(scope="session")
def dual_s3() -> GermTable:
    return dual_germ(CoxeterSpec(family="A", rank=3))


@pytest.fixture(scope="session")
def dual_s4() -> GermTable:
    return dual_germ(CoxeterSpec(family="A", rank=4))


@pytest.fixture
def derived_corpus(classical_s3, classical_s4, dual_s3, dual_s4) -> dict[str, GermTable]:
    """Every derived germ the suite checks criteria on, by label."""
    corpus = {
        "classical A3": classical_s3,
        "classical A4": classical_s4,
        "dual A3": dual_s3,
        "dual A4": dual_s4,
        "classical B2": classical_germ(CoxeterSpec(family="B", rank=2)),
        "dual B3": dual_germ(CoxeterSpec(family="B", rank=3)),
    }
    for m in (3, 4, 5):
        corpus[f"classical I2({m})"] = classical_germ(CoxeterSpec(family="I2", rank=m))
        corpus[f"dual I2({m})"] = dual_germ(CoxeterSpec(family="I2", rank=m))
    return corpus


# =============================================================================
# Categories
# =============================================================================


@pytest.fixture(scope="session")
def s3_category(classical_s3) -> GermCategory:
    return GermCategory(classical_s3)


@pytest.fixture(scope="session")
def s4_category(classical_s4) -> GermCategory:
    return GermCategory(classical_s4)


@pytest.fixture(scope="session")
def dual_s4_category(dual_s4) -> GermCategory:
    return GermCategory(dual_s4)


# =============================================================================
# Rewriting Oracle
# =============================================================================


class RewritingOracle:
    """≡-classes of identity-free words computed from the product table alone.

    A class is explored breadth-first with contractions f·g -> f•g and
    expansions h -> f·g (f, g non-identity). For germs where every
    non-identity element has positive length and products add lengths,
    classes are finite.
    """

    def __init__(self, table: GermTable, max_class_size: int = 50_000):
        self.table = table
        self.max_class_size = max_class_size
        identities = table.identity_set
        self.factorizations: dict[int, list[tuple[int, int]]] = {}
        for (f, g), h in table.products.items():
            if f not in identities and g not in identities:
                self.factorizations.setdefault(h, []).append((f, g))
        self._class_of: dict[tuple[int, ...], int] = {}
        self._classes: list[frozenset[tuple[int, ...]]] = []

    def moves(self, word: tuple[int, ...]):
        for i in range(len(word) - 1):
            product = self.table.product(word[i], word[i + 1])
            if product is not None:
                yield word[:i] + (product,) + word[i + 2 :]
        for i, h in enumerate(word):
            for f, g in self.factorizations.get(h, ()):
                yield word[:i] + (f, g) + word[i + 1 :]

    def closure(self, word: Sequence[int]) -> frozenset[tuple[int, ...]]:
        """All identity-free words ≡ to `word`."""
        start = tuple(e for e in word if e not in self.table.identity_set)
        if start in self._class_of:
            return self._classes[self._class_of[start]]
        seen = {start}
        queue = deque([start])
        while queue:
            for following in self.moves(queue.popleft()):
                if following not in seen:
                    seen.add(following)
                    queue.append(following)
                    if len(seen) > self.max_class_size:
                        raise RuntimeError(f"class of {start} exceeds {self.max_class_size} words")
        members = frozenset(seen)
        self._classes.append(members)
        for member in members:
            self._class_of[member] = len(self._classes) - 1
        return members

    def equivalent(self, w1: Sequence[int], w2: Sequence[int]) -> bool:
        trimmed = tuple(e for e in w2 if e not in self.table.identity_set)
        return trimmed in self.closure(w1)


@pytest.fixture(scope="session")
def s3_oracle(classical_s3) -> RewritingOracle:
    return RewritingOracle(classical_s3)


@pytest.fixture(scope="session")
def dual_s4_oracle(dual_s4) -> RewritingOracle:
    return RewritingOracle(dual_s4)
