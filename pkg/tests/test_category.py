"""Tests for normal forms and the word problem (category.py).

Normal forms are checked against the RewritingOracle from conftest, which
knows nothing about J-functions: it explores ≡-classes with the defining
relations f·g = f•g only.
"""

import itertools
import logging
import random

import pytest

from garside_germs import (
    Config,
    EnumerationLimitError,
    GermCategory,
    GermTable,
    InvalidMoveError,
    NormalForm,
    NormalizationError,
    PathWord,
    PreconditionError,
    UnsupportedGermError,
    pi,
    rewrite_step,
)


def _random_words(table: GermTable, seed: int, count: int, max_length: int = 6):
    rng = random.Random(seed)
    for _ in range(count):
        length = rng.randint(0, max_length)
        yield PathWord.of(table, [rng.randrange(table.size) for _ in range(length)], 0)


@pytest.fixture
def group_germ() -> GermTable:
    """The cyclic group of order 2 as a germ: every element invertible."""
    return GermTable.single_object(["1", "e"], [("e", "e", "1")])


@pytest.fixture
def two_object_category(two_object_germ) -> GermCategory:
    return GermCategory(two_object_germ)


# =============================================================================
# Words, Evaluation and Rewriting
# =============================================================================


class TestPathWord:
    """Words are composable sequences with explicit endpoints."""

    def test_parse_names(self, s3_category, s3):
        """Comma-separated and listed names give the same word."""
        w = s3_category.word("(12), (23),(12)")
        assert w.entries == (s3.a, s3.b, s3.a)
        assert w == s3_category.word(["(12)", "(23)", "(12)"])
        assert w.names(s3_category.table) == ["(12)", "(23)", "(12)"]
        assert len(w) == 3

    def test_empty_word_single_object(self, s3_category):
        """A single-object germ supplies the object of the empty word."""
        w = s3_category.word("")
        assert (w.entries, w.source, w.target) == ((), 0, 0)

    def test_empty_word_needs_object(self, two_object_category):
        """With several objects the empty word must name one."""
        with pytest.raises(PreconditionError, match="explicit object"):
            two_object_category.word("")
        w = two_object_category.word("", obj="y")
        assert (w.source, w.target) == (1, 1)

    def test_endpoints(self, two_object_category):
        """Endpoints come from the first and last entries."""
        w = two_object_category.word("1x,u,1y")
        assert (w.source, w.target) == (0, 1)

    def test_not_composable(self, two_object_category):
        """u·u does not compose."""
        with pytest.raises(PreconditionError, match="not composable"):
            two_object_category.word("u,u")

    def test_source_mismatch(self, two_object_category):
        """An explicit object must match the first entry."""
        with pytest.raises(PreconditionError, match="word starts at"):
            two_object_category.word("u", obj="y")

    def test_unknown_name(self, s3_category):
        """Unknown element names are rejected."""
        with pytest.raises(PreconditionError, match="unknown element name"):
            s3_category.word("(12),(34)")


class TestPi:
    """pi evaluates a word inside the germ."""

    def test_values(self, classical_s3, s3):
        """Products inside S evaluate, others are undefined."""
        assert pi(classical_s3, PathWord.of(classical_s3, [], 0)) == s3.e
        assert pi(classical_s3, PathWord.of(classical_s3, [s3.a, s3.b])) == s3.ab
        assert pi(classical_s3, PathWord.of(classical_s3, [s3.a, s3.b, s3.a])) == s3.delta
        assert pi(classical_s3, PathWord.of(classical_s3, [s3.a, s3.a])) is None

    def test_requires_left_associative(self, inverse_germ):
        """Evaluation is refused on germs that are not left-associative."""
        with pytest.raises(UnsupportedGermError) as excinfo:
            pi(inverse_germ, PathWord.of(inverse_germ, [1]))
        assert excinfo.value.criterion == "not-left-associative"

    def test_invariant_under_rewriting(self, classical_s4):
        """A contraction never changes whether or what a word evaluates to."""
        for w in _random_words(classical_s4, seed=11, count=200):
            for position in range(len(w) - 1):
                if classical_s4.product(w.entries[position], w.entries[position + 1]) is None:
                    continue
                contracted = rewrite_step(classical_s4, w, position)
                assert pi(classical_s4, contracted) == pi(classical_s4, w)


class TestRewriteStep:
    """rewrite_step applies one elementary move."""

    def test_contract(self, classical_s3, s3):
        """[a, b] contracts to [ab]."""
        w = PathWord.of(classical_s3, [s3.a, s3.b])
        assert rewrite_step(classical_s3, w, 0).entries == (s3.ab,)

    def test_contract_identity(self, classical_s3, s3):
        """[g, 1] contracts to [g]."""
        w = PathWord.of(classical_s3, [s3.ba, s3.e])
        assert rewrite_step(classical_s3, w, 0).entries == (s3.ba,)

    def test_expand(self, classical_s3, s3):
        """[Δ] expands to [a, ba]."""
        w = PathWord.of(classical_s3, [s3.delta])
        expanded = rewrite_step(classical_s3, w, 0, "expand", (s3.a, s3.ba))
        assert expanded.entries == (s3.a, s3.ba)
        assert (expanded.source, expanded.target) == (w.source, w.target)

    def test_undefined_product(self, classical_s3, s3):
        """a•a is not defined."""
        w = PathWord.of(classical_s3, [s3.a, s3.a])
        with pytest.raises(InvalidMoveError, match="not defined"):
            rewrite_step(classical_s3, w, 0)

    def test_wrong_factorization(self, classical_s3, s3):
        """a•b is not Δ."""
        w = PathWord.of(classical_s3, [s3.delta])
        with pytest.raises(InvalidMoveError, match="is not"):
            rewrite_step(classical_s3, w, 0, "expand", (s3.a, s3.b))

    def test_bad_position_and_direction(self, classical_s3, s3):
        """Positions out of range and unknown directions are invalid moves."""
        w = PathWord.of(classical_s3, [s3.a, s3.b])
        with pytest.raises(InvalidMoveError):
            rewrite_step(classical_s3, w, 1)
        with pytest.raises(InvalidMoveError):
            rewrite_step(classical_s3, w, 0, "expand")
        with pytest.raises(InvalidMoveError, match="unknown direction"):
            rewrite_step(classical_s3, w, 0, "swap")


# =============================================================================
# Construction
# =============================================================================


class TestGermCategory:
    """GermCategory refuses germs that are not Garside germs."""

    def test_rejects_no_greatest(self, no_greatest_germ):
        """The error carries the failed criterion and witness."""
        with pytest.raises(UnsupportedGermError) as excinfo:
            GermCategory(no_greatest_germ)
        assert excinfo.value.criterion == "no-greatest-J"
        assert excinfo.value.witness == (1, 3)

    def test_rejects_non_left_associative(self, inverse_germ):
        """The inverse germ is refused before J-sets are computed."""
        with pytest.raises(UnsupportedGermError, match="not-left-associative"):
            GermCategory(inverse_germ)

    def test_complements(self, s3_category, s3):
        """K(g1, g2) completes J(g1, g2) to g2."""
        table = s3_category.table
        for (g1, g2), j in s3_category.j_values.items():
            assert table.product(j, s3_category.complements[(g1, g2)]) == g2
        assert s3_category.complements[(s3.a, s3.ba)] == s3.e
        assert s3_category.complements[(s3.a, s3.a)] == s3.a

    def test_cross_check_logs(self, classical_s3, caplog):
        """With cross_check the lcm criteria are consulted on construction."""
        with caplog.at_level(logging.DEBUG, logger="garside_germs.category"):
            GermCategory(classical_s3, Config(cross_check=True), debug=True)
        assert "lcm criteria agree with the verdict" in caplog.text

    def test_group_germ(self, group_germ):
        """A germ made of invertibles is a Garside germ."""
        category = GermCategory(group_germ)
        assert category.has_invertible_elements
        assert category.selector == (0, 0)


# =============================================================================
# Head and Tail
# =============================================================================


class TestHeadTail:
    """head_sharp and tail_sharp split a word as H·T."""

    def test_examples(self, s3_category, s3):
        """Hand-unrolled heads in S3."""
        w = s3_category.word("(12),(23),(12),(12)")
        assert s3_category.head_sharp(w) == s3.delta
        tail = s3_category.tail_sharp(w)
        assert len(tail) == len(w)
        assert [e for e in tail.entries if e != s3.e] == [s3.a]
        assert s3_category.head_sharp(s3_category.word("(23),(12),(12)")) == s3.ba

    def test_empty_word(self, s3_category, s3):
        """The empty word has the identity as head and an empty tail."""
        w = s3_category.word("")
        assert s3_category.head_sharp(w) == s3.e
        assert s3_category.tail_sharp(w).entries == ()

    def test_decomposition(self, s4_category):
        """w ≡ H(w)·T(w)."""
        table = s4_category.table
        for w in _random_words(table, seed=3, count=100):
            head = s4_category.head_sharp(w)
            tail = s4_category.tail_sharp(w)
            joined = PathWord.of(table, (head, *tail.entries), w.source)
            assert s4_category.word_problem(w, joined)

    def test_invariant_under_rewriting(self, s4_category):
        """Contractions and expansions keep the head."""
        table = s4_category.table
        rng = random.Random(5)
        for w in _random_words(table, seed=5, count=150):
            head = s4_category.head_sharp(w)
            for position in range(len(w) - 1):
                if table.product(w.entries[position], w.entries[position + 1]) is not None:
                    moved = rewrite_step(table, w, position)
                    assert s4_category.head_sharp(moved) == head
            if len(w):
                position = rng.randrange(len(w))
                f, g = rng.choice(sorted(table.left_divisors[w.entries[position]].items()))
                moved = rewrite_step(table, w, position, "expand", (f, g))
                assert s4_category.head_sharp(moved) == head

    def test_head_law(self, s4_category):
        """s_head(u·v) = s_head(u·[s_head(v)]) on random words."""
        table = s4_category.table
        rng = random.Random(41)
        for _ in range(300):
            u = [rng.randrange(table.size) for _ in range(rng.randint(0, 4))]
            v = [rng.randrange(table.size) for _ in range(rng.randint(0, 4))]
            head_v = s4_category.s_head(PathWord.of(table, v, 0))
            lhs = s4_category.s_head(PathWord.of(table, u + v, 0))
            rhs = s4_category.s_head(PathWord.of(table, [*u, head_v], 0))
            assert lhs == rhs, (u, v)

    def test_tail_class_under_rewriting(self, s3_category, s3_oracle):
        """After one move the head is unchanged and the tail stays in its ≡-class."""
        table = s3_category.table
        rng = random.Random(37)
        checked = 0
        for w in _random_words(table, seed=37, count=1000, max_length=4):
            if not len(w):
                continue
            position = rng.randrange(len(w))
            if position + 1 < len(w) and table.product(w.entries[position], w.entries[position + 1]) is not None:
                moved = rewrite_step(table, w, position)
            else:
                f, g = rng.choice(sorted(table.left_divisors[w.entries[position]].items()))
                moved = rewrite_step(table, w, position, "expand", (f, g))
            head, tail = s3_category.head_sharp(w), s3_category.tail_sharp(w)
            assert s3_category.head_sharp(moved) == head
            assert s3_oracle.equivalent(tail.entries, s3_category.tail_sharp(moved).entries)
            checked += 1
        assert checked > 700


# =============================================================================
# Normal Forms
# =============================================================================


class TestNormalForm:
    """normal_form computes the greedy decomposition."""

    def test_examples(self, s3_category, s3):
        """Known S3 normal forms."""
        assert s3_category.normal_form(s3_category.word("(12),(23),(12),(12)")).entries == (
            s3.delta,
            s3.a,
        )
        assert s3_category.normal_form(s3_category.word("(12),(12)")).entries == (s3.a, s3.a)
        assert s3_category.normal_form(s3_category.word("1,1")).entries == ()

    def test_returns_normal_form(self, s3_category):
        """The result type is NormalForm and carries the word endpoints."""
        nf = s3_category.normal_form(s3_category.word("(12)"))
        assert isinstance(nf, NormalForm)
        assert (nf.source, nf.target) == (0, 0)

    def test_idempotent(self, s4_category):
        """Normalizing twice changes nothing."""
        for w in _random_words(s4_category.table, seed=7, count=150):
            nf = s4_category.normal_form(w)
            assert s4_category.normal_form(nf) == nf
            assert s4_category.is_normal(nf)

    def test_no_identity_entries(self, dual_s4_category):
        """Identities never appear in a normal form of a germ without invertibles."""
        identities = dual_s4_category.table.identity_set
        for w in _random_words(dual_s4_category.table, seed=8, count=150):
            assert not identities & set(dual_s4_category.normal_form(w).entries)

    def test_length_bound(self, dual_s4_category):
        """The S-length never exceeds the number of entries."""
        for w in _random_words(dual_s4_category.table, seed=9, count=150):
            assert dual_s4_category.s_length(dual_s4_category.normal_form(w)) <= len(w)

    def test_grouping(self, s4_category):
        """A normal head stays greedy against the product of the rest when it lies in S."""
        table = s4_category.table
        for w in _random_words(table, seed=10, count=150):
            nf = s4_category.normal_form(w)
            if len(nf) < 2:
                continue
            rest = pi(table, PathWord.of(table, nf.entries[1:]))
            if rest is not None:
                assert s4_category.is_greedy_pair(nf.entries[0], rest)

    def test_step_budget(self, classical_s3):
        """A zero budget stops normalization with a diagnostic."""
        category = GermCategory(classical_s3, Config(step_budget_factor=0))
        with pytest.raises(NormalizationError, match="exceeded"):
            category.normal_form(category.word("(12)"))

    def test_invertible_remainder_kept(self, group_germ):
        """A non-identity invertible remainder is the single, final entry."""
        category = GermCategory(group_germ)
        e = group_germ.element_id("e")
        assert category.normal_form(category.word("e")).entries == (e,)
        assert category.normal_form(category.word("e,e")).entries == ()
        nf = category.normal_form(category.word("e,e,e"))
        assert nf.entries == (e,)
        assert category.s_length(nf) == 0

    def test_group_word_problem(self, group_germ):
        """e is not the identity in Z/2, e·e is."""
        category = GermCategory(group_germ)
        assert not category.word_problem(category.word("e"), category.word(""))
        assert category.word_problem(category.word("e,e"), category.word(""))
        assert category.word_problem(category.word("e,e,e"), category.word("e"))

    def test_invertible_only_last(self, parity_germ):
        """Heads are class representatives and the invertible part trails."""
        category = GermCategory(parity_germ)
        assert category.normal_form(category.word("ae")).names(parity_germ) == ["a", "e"]
        assert category.normal_form(category.word("a")).names(parity_germ) == ["a"]
        nf = category.normal_form(category.word("e,a,a"))
        assert nf.names(parity_germ) == ["a", "a", "e"]
        assert category.s_length(nf) == 2
        assert category.is_normal(nf)
        assert category.normal_form(nf) == nf

    def test_parity_word_problem(self, parity_germ):
        """a and ae are distinct elements; e commutes with a."""
        category = GermCategory(parity_germ)
        word = category.word
        assert not category.word_problem(word("a"), word("ae"))
        assert category.word_problem(word("ae"), word("a,e"))
        assert category.word_problem(word("e,a"), word("a,e"))
        assert category.word_problem(word("ae,ae"), word("a,a"))
        assert not category.word_problem(word("a,a"), word("a,ae"))

    def test_parity_domino(self, parity_germ):
        """Left multiplication agrees with normalizing the longer word."""
        category = GermCategory(parity_germ)
        for w in _random_words(parity_germ, seed=29, count=200, max_length=5):
            nf = category.normal_form(w)
            for f in range(parity_germ.size):
                expected = category.normal_form(PathWord.of(parity_germ, (f, *w.entries), 0))
                assert category.left_multiply(f, nf) == expected


class TestAgainstRewritingOracle:
    """Normal forms agree with ≡-classes explored by raw rewriting."""

    @staticmethod
    def _words(table: GermTable, max_length: int):
        letters = [s for s in range(table.size) if not table.is_identity(s)]
        for length in range(1, max_length + 1):
            yield from itertools.product(letters, repeat=length)

    def test_s3_exhaustive(self, s3_category, s3_oracle):
        """Every word of up to four letters has a unique normal word in its class."""
        table = s3_category.table
        normal_words: dict[frozenset, set] = {}
        for entries in self._words(table, 4):
            nf = s3_category.normal_form(PathWord.of(table, entries))
            members = s3_oracle.closure(entries)
            if members not in normal_words:
                normal_words[members] = {
                    m for m in members if s3_category.is_normal(PathWord.of(table, m, 0))
                }
            assert normal_words[members] == {nf.entries}

    def test_s3_aba_a(self, s3_category, s3_oracle, s3):
        """Δ·a is the only normal word ≡ to a·b·a·a."""
        table = s3_category.table
        members = s3_oracle.closure((s3.a, s3.b, s3.a, s3.a))
        normal = {m for m in members if s3_category.is_normal(PathWord.of(table, m, 0))}
        assert normal == {(s3.delta, s3.a)}

    def test_s3_word_problem(self, s3_category, s3_oracle):
        """word_problem partitions words of up to four letters like the oracle."""
        table = s3_category.table
        classes: dict[frozenset, set[NormalForm]] = {}
        for entries in self._words(table, 4):
            classes.setdefault(s3_oracle.closure(entries), set()).add(
                s3_category.normal_form(PathWord.of(table, entries))
            )
        assert all(len(forms) == 1 for forms in classes.values())
        forms = [next(iter(forms)) for forms in classes.values()]
        assert len(set(forms)) == len(forms)

    def test_s3_word_problem_pairs(self, s3_category, s3_oracle):
        """word_problem agrees with the oracle on sampled pairs of short words."""
        table = s3_category.table
        words = list(self._words(table, 4))
        rng = random.Random(31)
        pairs = [(rng.choice(words), rng.choice(words)) for _ in range(1000)]
        pairs += [(w, m) for w in words[:40] for m in s3_oracle.closure(w) if len(m) <= 4]
        for w1, w2 in pairs:
            expected = s3_oracle.equivalent(w1, w2)
            actual = s3_category.word_problem(PathWord.of(table, w1), PathWord.of(table, w2))
            assert actual == expected, (w1, w2)

    def test_dual_s4(self, dual_s4_category, dual_s4_oracle):
        """Dual S4 normal forms of two-letter words are ≡ to the input."""
        table = dual_s4_category.table
        letters = [s for s in range(table.size) if not table.is_identity(s)]
        for entries in itertools.product(letters, repeat=2):
            nf = dual_s4_category.normal_form(PathWord.of(table, entries))
            assert dual_s4_oracle.equivalent(entries, nf.entries)



# =============================================================================
# Multiplication and the Word Problem
# =============================================================================


class TestMultiplication:
    """left_multiply, multiply and word_problem."""

    def test_left_multiply_examples(self, s3_category, s3):
        """The domino rule on small S3 inputs."""
        nf_ba = s3_category.normal_form(s3_category.word("(23),(12)"))
        assert s3_category.left_multiply(s3.a, nf_ba).entries == (s3.delta,)
        nf_a = s3_category.normal_form(s3_category.word("(12)"))
        assert s3_category.left_multiply(s3.a, nf_a).entries == (s3.a, s3.a)
        assert s3_category.left_multiply(s3.e, nf_ba) == nf_ba

    @pytest.mark.parametrize("name", ["s3_category", "s4_category", "dual_s4_category"])
    def test_domino_matches_normal_form(self, name, request):
        """left_multiply(f, nf(w)) = nf(f·w) for every germ element f."""
        category = request.getfixturevalue(name)
        table = category.table
        for w in _random_words(table, seed=13, count=1000):
            nf = category.normal_form(w)
            for f in range(table.size):
                expected = category.normal_form(PathWord.of(table, (f, *w.entries)))
                assert category.left_multiply(f, nf) == expected, (f, w.entries)

    def test_left_multiply_length(self, s4_category):
        """Left multiplication adds at most one to the S-length."""
        table = s4_category.table
        rng = random.Random(17)
        for w in _random_words(table, seed=17, count=150):
            nf = s4_category.normal_form(w)
            product = s4_category.left_multiply(rng.randrange(table.size), nf)
            assert s4_category.s_length(nf) <= s4_category.s_length(product)
            assert s4_category.s_length(product) <= s4_category.s_length(nf) + 1

    def test_left_multiply_endpoint_mismatch(self, two_object_category, two_object_germ):
        """u cannot be multiplied onto a form starting at x."""
        nf = two_object_category.normal_form(two_object_category.word("", obj="x"))
        with pytest.raises(PreconditionError):
            two_object_category.left_multiply(two_object_germ.element_id("u"), nf)

    def test_multiply_is_concatenation(self, s4_category):
        """multiply(nf(w1), nf(w2)) = nf(w1·w2)."""
        table = s4_category.table
        words = list(_random_words(table, seed=19, count=80, max_length=4))
        for w1, w2 in zip(words, reversed(words)):
            joined = PathWord.of(table, w1.entries + w2.entries, 0)
            product = s4_category.multiply(s4_category.normal_form(w1), s4_category.normal_form(w2))
            assert product == s4_category.normal_form(joined)

    def test_associative(self, dual_s4_category):
        """(n1·n2)·n3 = n1·(n2·n3)."""
        category = dual_s4_category
        forms = [category.normal_form(w) for w in _random_words(category.table, seed=23, count=30, max_length=3)]
        for n1, n2, n3 in zip(forms, forms[1:], forms[2:]):
            left = category.multiply(category.multiply(n1, n2), n3)
            right = category.multiply(n1, category.multiply(n2, n3))
            assert left == right

    def test_word_problem_examples(self, s3_category):
        """The braid relation holds and ab differs from ba."""
        assert s3_category.word_problem(
            s3_category.word("(12),(23),(12)"), s3_category.word("(23),(12),(23)")
        )
        assert not s3_category.word_problem(
            s3_category.word("(12),(23)"), s3_category.word("(23),(12)")
        )

    def test_word_problem_endpoints(self, two_object_category):
        """Words with different endpoints are not comparable."""
        with pytest.raises(PreconditionError, match="different endpoints"):
            two_object_category.word_problem(
                two_object_category.word("u"), two_object_category.word("", obj="x")
            )

    def test_s_length_and_head(self, s3_category, s3):
        """[a, b, a, a] has S-length 2 and head Δ."""
        w = s3_category.word("(12),(23),(12),(12)")
        assert s3_category.s_length(s3_category.normal_form(w)) == 2
        assert s3_category.s_head(w) == s3.delta
        assert s3_category.s_head(s3_category.word("")) == s3.e


# =============================================================================
# Greediness and Enumeration
# =============================================================================


class TestGreedy:
    """is_greedy_pair and is_normal."""

    def test_pairs(self, s3_category, s3):
        """(a, a) and (g, 1) are greedy, (a, b) is not."""
        assert s3_category.is_greedy_pair(s3.a, s3.a)
        assert not s3_category.is_greedy_pair(s3.a, s3.b)
        assert s3_category.is_greedy_pair(s3.delta, s3.b)
        for g in range(s3_category.table.size):
            assert s3_category.is_greedy_pair(g, s3.e)

    def test_not_composable(self, two_object_category):
        """Greediness needs a composable pair."""
        with pytest.raises(PreconditionError):
            two_object_category.is_greedy_pair(2, 0)

    def test_is_normal(self, s3_category, s3):
        """Every adjacent pair must be greedy and every entry in S."""
        table = s3_category.table
        assert s3_category.is_normal(PathWord.of(table, [s3.delta, s3.a]))
        assert not s3_category.is_normal(PathWord.of(table, [s3.a, s3.b]))
        assert not s3_category.is_normal(PathWord((99,), 0, 0))


class TestEnumeration:
    """enumerate_normal_forms and the transition count agree."""

    def test_first_levels(self, s3_category):
        """Level 0 is the empty form, level 1 the non-identity elements."""
        levels = s3_category.enumerate_normal_forms(1)
        assert [nf.entries for nf in levels[0]] == [()]
        assert {nf.entries for nf in levels[1]} == {(s,) for s in range(1, 6)}

    @pytest.mark.parametrize(("name", "max_length"), [("s3_category", 4), ("dual_s4_category", 3)])
    def test_counts_agree(self, name, max_length, request):
        """Enumeration and the greedy-pair transition table give the same counts."""
        category = request.getfixturevalue(name)
        assert category.count_by_length(max_length) == category.count_normal_forms(max_length)

    def test_every_level_is_normal(self, dual_s4_category):
        """Enumerated forms are normal with the expected S-length."""
        for k, level in enumerate(dual_s4_category.enumerate_normal_forms(2)):
            for nf in level:
                assert dual_s4_category.is_normal(nf)
                assert dual_s4_category.s_length(nf) == k

    def test_limit(self, classical_s3):
        """Too many forms raise EnumerationLimitError."""
        category = GermCategory(classical_s3, Config(enumerate_limit=3))
        with pytest.raises(EnumerationLimitError, match="exceed the limit"):
            category.enumerate_normal_forms(2)

    def test_count_needs_trivial_invertibles(self, group_germ):
        """Transition counting is refused when invertibles are nontrivial."""
        with pytest.raises(UnsupportedGermError):
            GermCategory(group_germ).count_normal_forms(2)

    def test_invertible_level(self, group_germ):
        """Level 0 holds one form per invertible element."""
        category = GermCategory(group_germ)
        levels = category.enumerate_normal_forms(1)
        assert {nf.entries for nf in levels[0]} == {(), (group_germ.element_id("e"),)}
        assert category.count_by_length(1) == [2, 0]

    def test_parity_counts(self, parity_germ):
        """Each S-length has the form a^k and the form a^k·e."""
        category = GermCategory(parity_germ)
        assert category.count_by_length(2) == [2, 2, 2]
        names = {tuple(nf.names(parity_germ)) for nf in category.enumerate_normal_forms(2)[2]}
        assert names == {("a", "a"), ("a", "a", "e")}

    def test_relations(self, s3_category, s3):
        """The six defining relations of the S3 germ."""
        relations = s3_category.relations()
        assert len(relations) == 6
        assert (s3.a, s3.b, s3.ab) in relations
        assert (s3.a, s3.ba, s3.delta) in relations
        assert (s3.ba, s3.b, s3.delta) in relations
