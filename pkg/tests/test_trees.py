"""Tree structure, numbering, classification, and leaf exponents."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, strategies as st

from thompson_f.trees import (CaretType, caret_count, classify, enumerate_trees,
                              graft_rightmost, infix_order, iter_trees,
                              leaf_count, leaf_exponents, leaf_numbers, parse_tree,
                              render_tree, right_comb, subtree_at, tree_to_dot)

T = CaretType

X1_POS = parse_tree("(*((**)*))")
COMB3 = parse_tree("(*(*(**)))")
# 12-caret tree of the worked minimal-path example
BIG = parse_tree("(((**)((**)(**)))((*(**))(*((**)*))))")

small_trees = st.integers(1, 6).flatmap(
    lambda n: st.sampled_from(enumerate_trees(n)))


def test_parse_render_round_trip():
    for text in ["*", "(**)", "(*(**))", "((**)*)", "(*((**)*))"]:
        assert render_tree(parse_tree(text)) == text


@given(small_trees)
def test_render_parse_inverse(tree):
    assert parse_tree(render_tree(tree)) == tree


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_tree("(*")
    with pytest.raises(ValueError):
        parse_tree("(**)*")
    with pytest.raises(ValueError):
        parse_tree("(x*)")


def test_infix_order_single_caret():
    assert infix_order(parse_tree("(**)")) == [()]


def test_infix_order_right_comb():
    # root first, then its right child, then that caret's right child
    assert infix_order(COMB3) == [(), (1,), (1, 1)]


def test_infix_order_big_tree():
    paths = infix_order(BIG)
    assert len(paths) == 12
    # caret 0 is the bottom of the left side, with exposed left leaf 0
    assert paths[0] == (0, 0)
    assert subtree_at(BIG, paths[0])[0] is None


def test_leaf_numbers():
    assert leaf_numbers(parse_tree("(**)")) == [(0,), (1,)]
    assert len(leaf_numbers(COMB3)) == 4
    assert len(leaf_numbers(X1_POS)) == 4


@given(small_trees)
def test_numbering_bijections(tree):
    n = caret_count(tree)
    carets = infix_order(tree)
    leaves = leaf_numbers(tree)
    assert len(carets) == n
    assert len(set(carets)) == n
    assert len(leaves) == n + 1
    assert len(set(leaves)) == n + 1
    for path in carets:
        assert subtree_at(tree, path) is not None
    for path in leaves:
        assert subtree_at(tree, path) is None


def test_classify_single():
    assert classify(parse_tree("(**)")) == [T.L0]


def test_classify_right_comb():
    assert classify(COMB3) == [T.L0, T.R0, T.R0]


def test_classify_big_tree():
    expected = [T.L0, T.LL, T.I0, T.IR, T.I0, T.LL,
                T.IR, T.I0, T.RNI, T.RI, T.I0, T.R0]
    assert classify(BIG) == expected


def test_exactly_one_l0():
    for tree in iter_trees(7):
        assert classify(tree).count(T.L0) == 1


def test_right_family_partition():
    # Recompute the right-caret subtypes from the definition and compare.
    for tree in iter_trees(7):
        types = classify(tree)
        families = ["L" if t in (T.L0, T.LL) else
                    "I" if t in (T.I0, T.IR) else "R" for t in types]
        n = len(types)
        for k, fam in enumerate(families):
            if fam != "R":
                continue
            if k + 1 < n and families[k + 1] == "I":
                assert types[k] is T.RI
            elif any(f == "I" for f in families[k + 1:]):
                assert types[k] is T.RNI
            else:
                assert types[k] is T.R0


def test_leaf_exponents_generators():
    assert leaf_exponents(X1_POS) == [0, 1, 0, 0]
    assert leaf_exponents(COMB3) == [0, 0, 0, 0]
    assert leaf_exponents(parse_tree("(**)")) == [0, 0]
    assert leaf_exponents(parse_tree("((**)*)")) == [1, 0, 0]


def _exponents_by_definition(tree):
    """Independent oracle: per leaf, climb the maximal chain of left edges
    and discard the top step when it ends on the right side of the tree."""
    out = []
    for path in leaf_numbers(tree):
        t = 0
        while t < len(path) and path[len(path) - 1 - t] == 0:
            t += 1
        top = path[: len(path) - t]
        on_right_side = all(step == 1 for step in top)
        out.append(t - 1 if on_right_side and t > 0 else t)
    return out


def test_exponents_match_definition_exhaustive():
    for tree in iter_trees(8):
        assert leaf_exponents(tree) == _exponents_by_definition(tree)


def test_exponent_zero_rules():
    for tree in iter_trees(7):
        exps = leaf_exponents(tree)
        assert exps[-1] == 0  # rightmost leaf sits on the right side
        for path, e in zip(leaf_numbers(tree), exps):
            if path[-1] == 1:
                assert e == 0  # right leaves have no left edge above them


def test_exponent_sum_rule():
    # Total exponent = (left carets - 1) + interior carets.
    for tree in iter_trees(8):
        types = classify(tree)
        left = sum(1 for t in types if t in (T.L0, T.LL))
        interior = sum(1 for t in types if t in (T.I0, T.IR))
        assert sum(leaf_exponents(tree)) == left - 1 + interior


def test_enumerate_trees_catalan():
    for n in range(9):
        catalan = math.comb(2 * n, n) // (n + 1)
        assert len(enumerate_trees(n)) == catalan


def test_graft_and_comb():
    assert render_tree(right_comb(2)) == "(*(**))"
    assert render_tree(graft_rightmost(parse_tree("(**)"), right_comb(1))) == "(*(**))"
    padded = graft_rightmost(X1_POS, right_comb(2))
    assert leaf_exponents(padded)[:4] == [0, 1, 0, 0]
    assert caret_count(padded) == 5


def test_leaf_count():
    assert leaf_count(None) == 1
    assert leaf_count(COMB3) == 4


def test_dot_export():
    dot = tree_to_dot(X1_POS)
    assert dot.startswith("digraph")
    assert 'label="0:L0"' in dot
    assert 'label="1(E=1)"' in dot
    assert dot.count("->") == 2 * 3  # two edges per caret


def test_empty_tree_rejected():
    for fn in (classify, leaf_exponents, infix_order, leaf_numbers):
        with pytest.raises(ValueError):
            fn(None)
