import random

import pytest
from hypothesis import given

from thompsonf import (
    GroupElement,
    NormalForm,
    TreePair,
    caret,
    LEAF,
    commutator,
    commutator_is_trivial,
    element_of_word,
    generator,
    identity,
    inverse,
    is_reduced,
    multiply,
    power,
    rewrite_to_normal_form,
    to_normal_form,
    verify_relators,
    x,
    xinv,
)
from thompsonf.metric import random_element

from conftest import el, elements


class TestBasicLaws:
    def test_identity_laws(self):
        g = el("x0 x1^-1 x0^2")
        assert multiply(g, identity()) == g
        assert multiply(identity(), g) == g

    def test_inverse_law(self):
        g = el("x1 x0^-1 x1")
        assert multiply(g, inverse(g)) == identity()
        assert multiply(inverse(g), g) == identity()

    def test_inverse_examples(self):
        assert inverse(identity()) == identity()
        assert inverse(generator(0)).normal_form() == NormalForm((), ((0, 1),))

    @given(elements(max_carets=6))
    def test_inverse_involution_and_caret_symmetry(self, g):
        assert inverse(inverse(g)) == g
        assert inverse(g).caret_count == g.caret_count

    def test_inverse_of_z_power(self):
        z, k = el("x0 x1^-1"), 5
        assert inverse(power(z, k)) == power(el("x1 x0^-1"), k)
        assert power(z, k).caret_count == power(el("x1 x0^-1"), k).caret_count

    @given(elements(max_carets=5), elements(max_carets=5))
    def test_product_is_reduced(self, a, b):
        assert is_reduced(multiply(a, b).pair)

    def test_unreduced_pair_rejected(self):
        t = caret(LEAF, LEAF)
        with pytest.raises(ValueError):
            GroupElement(TreePair(t, t))


class TestPinnedRelation:
    def test_conjugation_relation(self):
        x0, x1 = generator(0), generator(1)
        assert multiply(multiply(inverse(x0), x1), x0) == generator(2)

    def test_relation_x3_x5(self):
        lhs = multiply(multiply(inverse(generator(3)), generator(5)), generator(3))
        assert lhs == generator(6)

    def test_verify_relators(self):
        report = verify_relators()
        assert report.passed
        assert report.failures == ()
        # two finite relators plus the sampled relations for 0 <= i < j <= 8
        assert len(report.entries) == 2 + 9 * 8 // 2


class TestPowers:
    def test_power_zero_and_negative(self):
        g = el("x0 x1")
        assert power(g, 0) == identity()
        assert power(g, -3) == inverse(power(g, 3))

    def test_z_power_normal_form(self):
        z = el("x0 x1^-1")
        for k in range(1, 13):
            nf = power(z, k).normal_form()
            assert nf == NormalForm(
                ((0, k),), tuple((i, 1) for i in range(1, k + 1))
            )
            assert power(z, k).caret_count == k + 2


class TestCommutators:
    def test_identity_commutes(self):
        assert commutator_is_trivial(el("x0 x1"), identity())

    def test_clone_commutes_with_z_powers(self):
        z5 = power(el("x0 x1^-1"), 5)
        assert commutator_is_trivial(generator(2), z5)
        assert commutator_is_trivial(generator(3), z5)

    def test_group_is_not_abelian(self):
        assert not commutator_is_trivial(generator(0), generator(1))
        assert not commutator(generator(0), generator(1)).is_identity


class TestBulkAlgebra:
    def test_associativity_on_random_triples(self):
        rng = random.Random(17)
        for _ in range(10_000):
            a = random_element(rng, 10)
            b = random_element(rng, 10)
            c = random_element(rng, 10)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    def test_normal_form_compatibility_up_to_length_six(self):
        # tree-route products of all split points agree with the rewriting
        # oracle on every word over x0, x1 and inverses of length <= 6
        letters = (x(0), xinv(0), x(1), xinv(1))
        table = {(): identity()}
        frontier = [()]
        for _ in range(6):
            nxt = []
            for word in frontier:
                base = table[word]
                for letter in letters:
                    new = word + (letter,)
                    g = generator(letter.index)
                    table[new] = multiply(base, g if letter.sign > 0 else inverse(g))
                    nxt.append(new)
            frontier = nxt
        assert len(table) == (4 ** 7 - 1) // 3
        for word, g in table.items():
            assert g.normal_form() == rewrite_to_normal_form(word)
            for cut in range(1, len(word)):
                assert multiply(table[word[:cut]], table[word[cut:]]) == g


class TestWordRoute:
    def test_element_of_word_examples(self):
        assert to_normal_form((x(1), x(0))) == NormalForm(((0, 1), (2, 1)), ())
        assert element_of_word((x(0), xinv(0))) == identity()

    def test_str_shows_normal_form(self):
        assert str(el("x1 x0")) == "x0 x2"
        assert str(identity()) == ""
