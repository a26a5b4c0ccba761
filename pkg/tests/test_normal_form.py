"""Normal form parsing, the tree pair bijection, and normalization."""

from __future__ import annotations

import itertools
import random

import pytest

from conftest import random_pair
from thompson_f.group_ops import TreePair, multiply
from thompson_f.normal_form import (InfiniteWord, NormalForm, NotNormalFormError,
                                    WordSyntaxError, element_of, from_tree_pair,
                                    normalize, parse, parse_normal_form, side_tree,
                                    to_tree_pair, tree_for_exponents)
from thompson_f.trees import (CaretType, classify, enumerate_trees, leaf_exponents,
                              parse_tree, render_tree)

T = CaretType

BIG_WORD = "x10^-1 x7^-1 x6^-1 x4^-1 x2^-2 x0^-2"


def test_parse_simple():
    nf = parse("x0^2 x1^-1")
    assert isinstance(nf, NormalForm)
    assert nf.positive == ((0, 2),)
    assert nf.negative == ((1, 1),)


def test_parse_big_word():
    nf = parse(BIG_WORD)
    assert isinstance(nf, NormalForm)
    assert nf.positive == ()
    assert nf.negative == ((0, 2), (2, 2), (4, 1), (6, 1), (7, 1), (10, 1))


def test_parse_identity():
    nf = parse("")
    assert isinstance(nf, NormalForm)
    assert nf.is_identity()
    assert nf.render() == ""


def test_parse_exponent_defaults():
    assert parse("x3") == NormalForm(((3, 1),), ())
    assert parse("x3^1") == NormalForm(((3, 1),), ())
    assert parse("x3^0") == NormalForm((), ())  # vanishing term drops out


def test_parse_syntax_errors():
    with pytest.raises(WordSyntaxError) as err:
        parse("x")
    assert err.value.position == 0
    with pytest.raises(WordSyntaxError):
        parse("x1^")
    with pytest.raises(WordSyntaxError):
        parse("y2")
    with pytest.raises(WordSyntaxError):
        parse("x1x2")


def test_parse_classifies_non_normal_words():
    for text in ["x1 x0", "x0^-1 x0", "x1 x1^-1", "x0 x0"]:
        assert isinstance(parse(text), InfiniteWord)
    with pytest.raises(NotNormalFormError):
        parse_normal_form("x1 x0")


def test_uniqueness_condition():
    # x1 in both parts needs x2 somewhere
    with pytest.raises(NotNormalFormError):
        NormalForm(((1, 1),), ((1, 1),))
    NormalForm(((1, 1), (2, 1)), ((1, 1),))  # fine
    assert isinstance(parse("x1 x2 x1^-1"), NormalForm)
    assert isinstance(parse("x1 x1^-1"), InfiniteWord)


def test_render_round_trip():
    rng = random.Random(5)
    for _ in range(300):
        nf = from_tree_pair(random_pair(rng, 10))
        assert parse(nf.render()) == nf


def test_identity_pair():
    assert to_tree_pair(NormalForm((), ())) == TreePair.identity()
    assert from_tree_pair(TreePair.identity()).is_identity()


def test_x1_pair_matches_generator_diagram():
    pair = to_tree_pair(parse_normal_form("x1"))
    assert render_tree(pair.neg) == "(*(*(**)))"
    assert render_tree(pair.pos) == "(*((**)*))"
    assert from_tree_pair(pair).render() == "x1"
    assert leaf_exponents(pair.pos) == [0, 1, 0, 0]


def test_big_word_tree():
    pair = to_tree_pair(parse_normal_form(BIG_WORD))
    assert classify(pair.neg) == [T.L0, T.LL, T.I0, T.IR, T.I0, T.LL,
                                  T.IR, T.I0, T.RNI, T.RI, T.I0, T.R0]
    assert from_tree_pair(pair) == parse_normal_form(BIG_WORD)


def test_tree_for_exponents_minimal():
    assert render_tree(tree_for_exponents({})) == "(**)"
    assert render_tree(tree_for_exponents({0: 1})) == "((**)*)"
    assert render_tree(tree_for_exponents({1: 1})) == "(*((**)*))"
    # prescribed exponents realized exactly, nothing else nonzero
    rng = random.Random(11)
    for _ in range(200):
        terms = {rng.randrange(10): rng.randint(1, 3) for _ in range(rng.randrange(4))}
        tree = tree_for_exponents(terms)
        exps = leaf_exponents(tree)
        assert {i: e for i, e in enumerate(exps) if e} == {
            i: e for i, e in terms.items() if e}


def test_side_tree_unpadded():
    nf = parse_normal_form("x1^-1")
    assert render_tree(side_tree(nf, "negative")) == "(*((**)*))"
    assert render_tree(side_tree(nf, "positive")) == "(**)"


def _reduced_pairs(max_carets):
    for n in range(1, max_carets + 1):
        for neg in enumerate_trees(n):
            for pos in enumerate_trees(n):
                try:
                    yield TreePair(neg, pos)
                except ValueError:
                    continue


def test_bijection_exhaustive_small():
    count = 0
    for pair in _reduced_pairs(5):
        nf = from_tree_pair(pair)
        assert to_tree_pair(nf) == pair
        count += 1
    assert count > 1000


def test_bijection_random_large():
    rng = random.Random(99)
    for _ in range(10_000):
        pair = random_pair(rng, 14)
        nf = from_tree_pair(pair)
        assert to_tree_pair(nf) == pair
        assert all(e >= 1 for _, e in nf.positive + nf.negative)


def test_normalize_free_cancellation():
    assert normalize([(0, -1), (0, 1)]).is_identity()


def test_normalize_single_relation():
    assert normalize([(1, 1), (0, 1)]).render() == "x0 x2"


def test_normalize_concatenation_golden():
    letters = ([(1, 1)] * 3 + [(2, -1), (1, -1), (0, -1), (0, -1)]
               + [(1, 1), (2, -1), (0, -1)])
    assert normalize(letters).render() == "x1^3 x5 x6^-1 x2^-1 x1^-1 x0^-3"


def test_normalize_respects_relators():
    # u x_i^-1 x_j x_i v  ==  u x_{j+1} v  for i < j
    rng = random.Random(17)
    for _ in range(150):
        u = [(rng.randrange(5), rng.choice((1, -1))) for _ in range(rng.randrange(4))]
        v = [(rng.randrange(5), rng.choice((1, -1))) for _ in range(rng.randrange(4))]
        i = rng.randrange(6)
        j = rng.randrange(i + 1, 8)
        left = normalize(u + [(i, -1), (j, 1), (i, 1)] + v)
        right = normalize(u + [(j + 1, 1)] + v)
        assert left == right


def test_normalize_agrees_with_multiplication():
    rng = random.Random(23)
    for _ in range(150):
        a = [(rng.randrange(4), rng.choice((1, -1))) for _ in range(rng.randrange(6))]
        b = [(rng.randrange(4), rng.choice((1, -1))) for _ in range(rng.randrange(6))]
        concat = normalize(a + b)
        product = from_tree_pair(
            multiply(to_tree_pair(normalize(a)), to_tree_pair(normalize(b))))
        assert concat == product


def test_element_of():
    assert element_of("x1 x0") == to_tree_pair(parse_normal_form("x0 x2"))


def test_built_pairs_are_reduced():
    rng = random.Random(31)
    for _ in range(500):
        nf = from_tree_pair(random_pair(rng, 12))
        to_tree_pair(nf)  # raises internally if a reduction were needed
