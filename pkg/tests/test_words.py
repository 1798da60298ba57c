import random

import pytest
from hypothesis import given

from thompsonf import (
    LEAF,
    element_of_word,
    NormalForm,
    ParseError,
    TreePair,
    caret,
    format_word,
    graft_at,
    leaf_exponents,
    normal_form_to_tree_pair,
    parse_word,
    reduce_pair,
    rewrite_to_normal_form,
    to_normal_form,
    tree_pair_to_normal_form,
    word_inverse,
    x,
    xinv,
)
from thompsonf.metric import random_element

from conftest import el, elements, tree_pairs


class TestParsing:
    def test_examples(self):
        assert parse_word("x0 x1^-1") == (x(0), xinv(1))
        assert parse_word("") == ()
        assert parse_word("x2^3") == (x(2), x(2), x(2))

    def test_zero_exponent_drops_term(self):
        assert parse_word("x3^0") == ()

    def test_negative_exponent_expands(self):
        assert parse_word("x1^-2") == (xinv(1), xinv(1))

    def test_errors_carry_position(self):
        with pytest.raises(ParseError) as err:
            parse_word("x1 y0")
        assert err.value.position == 3
        with pytest.raises(ParseError) as err:
            parse_word("x")
        assert err.value.position == 0
        with pytest.raises(ParseError) as err:
            parse_word("x1^")
        assert err.value.position == 0

    def test_format_groups_runs(self):
        word = (x(0), x(0), x(0), xinv(3), xinv(2))
        assert format_word(word) == "x0^3 x3^-1 x2^-1"
        assert parse_word(format_word(word)) == word

    def test_format_keeps_unreduced_words(self):
        assert format_word((x(0), xinv(0))) == "x0 x0^-1"


class TestNormalFormType:
    def test_validation(self):
        with pytest.raises(ValueError):
            NormalForm(((1, 1), (1, 1)), ())  # repeated index
        with pytest.raises(ValueError):
            NormalForm(((2, 1), (1, 1)), ())  # decreasing indices
        with pytest.raises(ValueError):
            NormalForm(((0, 0),), ())  # zero exponent
        with pytest.raises(ValueError):
            # x1 in both parts but no x2 anywhere
            NormalForm(((1, 1),), ((1, 1),))

    def test_uniqueness_condition_satisfiable(self):
        NormalForm(((1, 1), (2, 1)), ((1, 1),))  # x2 present, fine

    def test_str(self):
        nf = NormalForm(((0, 3),), ((1, 1), (2, 1), (3, 1)))
        assert str(nf) == "x0^3 x3^-1 x2^-1 x1^-1"
        assert str(NormalForm()) == ""

    def test_word_emission_order(self):
        nf = NormalForm(((0, 1), (2, 2)), ((1, 1), (3, 1)))
        assert nf.word() == (x(0), x(2), x(2), xinv(3), xinv(1))

    def test_shift(self):
        nf = NormalForm(((0, 2),), ((1, 1),))
        assert nf.shift(2) == NormalForm(((2, 2),), ((3, 1),))


class TestRewritingOracle:
    def test_defining_relation(self):
        assert rewrite_to_normal_form((xinv(0), x(1), x(0))) == NormalForm(((2, 1),), ())

    def test_positive_swap(self):
        # x2 x1 = x1 x3, one relation application
        assert rewrite_to_normal_form((x(2), x(1))) == NormalForm(((1, 1), (3, 1)), ())

    def test_identity_word(self):
        assert rewrite_to_normal_form(()) == NormalForm()
        assert rewrite_to_normal_form((x(0), xinv(0))) == NormalForm()

    def test_uniqueness_enforcement(self):
        # x1 x3 x1^-1 conjugates down to x2
        assert rewrite_to_normal_form((x(1), x(3), xinv(1))) == NormalForm(((2, 1),), ())

    def test_enforcement_shifts_both_parts(self):
        # x0 x2 x5 x3^-1 x0^-1 -> x1 x4 x2^-1
        word = (x(0), x(2), x(5), xinv(3), xinv(0))
        assert rewrite_to_normal_form(word) == NormalForm(
            ((1, 1), (4, 1)), ((2, 1),)
        )


class TestBijection:
    def test_identity(self):
        assert normal_form_to_tree_pair(NormalForm()) == TreePair(LEAF, LEAF)
        assert tree_pair_to_normal_form(TreePair(LEAF, LEAF)) == NormalForm()

    def test_x0_pair(self):
        pair = normal_form_to_tree_pair(NormalForm(((0, 1),), ()))
        assert pair.neg == caret(LEAF, caret(LEAF, LEAF))
        assert pair.pos == caret(caret(LEAF, LEAF), LEAF)
        assert tree_pair_to_normal_form(pair) == NormalForm(((0, 1),), ())

    def test_x1_is_grafted_x0(self):
        x0_pair = normal_form_to_tree_pair(NormalForm(((0, 1),), ()))
        x1_pair = normal_form_to_tree_pair(NormalForm(((1, 1),), ()))
        assert x1_pair == TreePair(
            graft_at(x0_pair.neg, "1"), graft_at(x0_pair.pos, "1")
        )

    def test_z_cubed_pair_reads_back(self):
        g = el("x0 x1^-1") ** 3
        assert tree_pair_to_normal_form(g.pair) == NormalForm(
            ((0, 3),), ((1, 1), (2, 1), (3, 1))
        )

    def test_unreduced_pair_rejected(self):
        t = caret(LEAF, LEAF)
        with pytest.raises(ValueError):
            tree_pair_to_normal_form(TreePair(t, t))

    @given(tree_pairs(max_carets=8))
    def test_roundtrip(self, pair):
        reduced = reduce_pair(pair)
        nf = tree_pair_to_normal_form(reduced)
        assert normal_form_to_tree_pair(nf) == reduced

    @given(tree_pairs(max_carets=8))
    def test_exponent_mass_is_total(self, pair):
        reduced = reduce_pair(pair)
        nf = tree_pair_to_normal_form(reduced)
        assert sum(r for _, r in nf.positive) == sum(leaf_exponents(reduced.pos))
        assert sum(s for _, s in nf.negative) == sum(leaf_exponents(reduced.neg))


class TestOracleAgreement:
    def test_random_infinite_alphabet_words(self):
        rng = random.Random(11)
        for _ in range(1500):
            word = tuple(
                (x if rng.random() < 0.5 else xinv)(rng.randint(0, 6))
                for _ in range(rng.randint(0, 10))
            )
            assert to_normal_form(word) == rewrite_to_normal_form(word)

    def test_tree_route_examples(self):
        assert to_normal_form((x(1), x(0))) == NormalForm(((0, 1), (2, 1)), ())
        assert to_normal_form((x(0), xinv(0))) == NormalForm()

    def test_inverse_word_gives_inverse_form(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_element(rng, 8)
            nf = g.normal_form()
            back = rewrite_to_normal_form(word_inverse(nf.word()))
            assert back == NormalForm(nf.negative, nf.positive)

    @given(elements(max_carets=7))
    def test_emitted_word_respells_the_element(self, g):
        assert element_of_word(g.normal_form().word()) == g

    def test_every_emitted_form_passes_uniqueness(self):
        # NormalForm validates on construction; surviving construction is the check
        rng = random.Random(5)
        for _ in range(500):
            word = tuple(
                (x if rng.random() < 0.5 else xinv)(rng.randint(0, 5))
                for _ in range(rng.randint(0, 9))
            )
            nf = rewrite_to_normal_form(word)
            NormalForm(nf.positive, nf.negative)
