"""The infinite-presentation normal form and its bijection with tree pairs.

Elements are written x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1}
with ascending positive indices, descending negative indices, all exponents
at least 1, and the uniqueness condition: where an index occurs in both
parts, the next index up occurs in at least one part.  The positive part is
read off the positive tree's leaf exponents, the negative part off the
negative tree's.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .group_ops import TreePair, multiply, reduce_trees
from .trees import Node, caret_count, graft_rightmost, leaf_exponents, right_comb

Terms = tuple[tuple[int, int], ...]  # (index, exponent >= 1), indices ascending


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotNormalFormError(ValueError):
    """Structurally valid word that is not in unique normal form."""


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Unique normal form: positive and negative parts, both stored with
    ascending indices (the negative part renders in descending order)."""

    positive: Terms = ()
    negative: Terms = ()

    def __post_init__(self) -> None:
        for part in (self.positive, self.negative):
            for idx, exp in part:
                if idx < 0 or exp < 1:
                    raise NotNormalFormError(f"bad term x{idx}^{exp}")
            if any(a[0] >= b[0] for a, b in zip(part, part[1:])):
                raise NotNormalFormError("indices within a part must increase")
        pos_idx = {i for i, _ in self.positive}
        neg_idx = {i for i, _ in self.negative}
        for i in pos_idx & neg_idx:
            if i + 1 not in pos_idx and i + 1 not in neg_idx:
                raise NotNormalFormError(
                    f"x{i} occurs in both parts but x{i + 1} in neither")

    def is_identity(self) -> bool:
        return not self.positive and not self.negative

    def inverse(self) -> "NormalForm":
        return NormalForm(self.negative, self.positive)

    def exponent_sum(self, side: str) -> int:
        part = self.negative if side == "negative" else self.positive
        return sum(e for _, e in part)

    def render(self) -> str:
        parts = [_term_text(i, e) for i, e in self.positive]
        parts += [_term_text(i, -e) for i, e in reversed(self.negative)]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, slots=True)
class InfiniteWord:
    """A free word over the infinite generating set: (index, sign) letters."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for idx, sign in self.letters:
            if idx < 0 or sign not in (1, -1):
                raise ValueError(f"bad letter (x{idx}, {sign})")


def _term_text(index: int, exponent: int) -> str:
    if exponent == 1:
        return f"x{index}"
    return f"x{index}^{exponent}"


_TERM = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse(text: str) -> Union[NormalForm, InfiniteWord]:
    """Parse a word; classify it as a NormalForm when it is one.

    Raises WordSyntaxError on malformed text.  A well-formed word that
    violates normal-form shape or uniqueness comes back as an InfiniteWord.
    """
    terms = _parse_terms(text)
    nf = _try_normal_form(terms)
    if nf is not None:
        return nf
    letters = []
    for idx, exp in terms:
        sign = 1 if exp > 0 else -1
        letters.extend((idx, sign) for _ in range(abs(exp)))
    return InfiniteWord(tuple(letters))


def parse_normal_form(text: str) -> NormalForm:
    """Parse a word that must already be in normal form."""
    word = parse(text)
    if isinstance(word, InfiniteWord):
        raise NotNormalFormError(f"not in normal form: {text!r}")
    return word


def _parse_terms(text: str) -> list[tuple[int, int]]:
    terms: list[tuple[int, int]] = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TERM.match(text, i)
        if m is None:
            raise WordSyntaxError("expected a term like x2 or x2^-1", i)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp != 0:
            terms.append((int(m.group(1)), exp))
        i = m.end()
        if i < n and not text[i].isspace():
            raise WordSyntaxError("expected whitespace between terms", i)
    return terms


def _try_normal_form(terms: list[tuple[int, int]]):
    positive: list[tuple[int, int]] = []
    negative: list[tuple[int, int]] = []
    for idx, exp in terms:
        if exp > 0:
            if negative:
                return None  # positive letter after the negative part began
            positive.append((idx, exp))
        else:
            negative.append((idx, -exp))
    if any(a[0] >= b[0] for a, b in zip(positive, positive[1:])):
        return None
    if any(a[0] <= b[0] for a, b in zip(negative, negative[1:])):
        return None  # negative part must be written in descending order
    try:
        return NormalForm(tuple(positive), tuple(negative[::-1]))
    except NotNormalFormError:
        return None


def tree_for_exponents(exponents: dict[int, int]) -> Node:
    """The smallest tree whose leaf exponents match the given assignment
    (zero everywhere else).

    Works down the right side of the tree: each step parses one left-hanging
    subtree whose leading leaf consumes the next exponent as its left-chain
    depth, recursing for the chains stacked above it.
    """
    for idx, exp in exponents.items():
        if idx < 0 or exp < 0:
            raise ValueError(f"bad exponent assignment E({idx})={exp}")
    exps = {i: e for i, e in exponents.items() if e > 0}
    top = max(exps) if exps else -1
    pos = [0]  # next leaf number to place

    def parse_chain() -> Node:
        depth = exps.get(pos[0], 0)
        pos[0] += 1
        node: Node = None
        for _ in range(depth):
            node = (node, parse_chain())
        return node

    def parse_spine() -> Node:
        hung = parse_chain()
        rest = parse_spine() if pos[0] <= top else None
        return (hung, rest)

    tree = parse_spine()
    built = leaf_exponents(tree)
    want = [exps.get(i, 0) for i in range(len(built))]
    if built != want:
        raise AssertionError(f"exponent construction failed: {built} != {want}")
    return tree


def side_tree(nf: NormalForm, side: str) -> Node:
    """The unpadded tree for one part of a normal form."""
    part = nf.negative if side == "negative" else nf.positive
    return tree_for_exponents(dict(part))


def to_tree_pair(nf: NormalForm) -> TreePair:
    """The reduced tree pair of a normal form.

    Each side is built to match its leaf exponents, then the smaller side is
    padded with right carets, which leave every exponent at zero.
    """
    neg = side_tree(nf, "negative")
    pos = side_tree(nf, "positive")
    n_neg, n_pos = caret_count(neg), caret_count(pos)
    if n_neg < n_pos:
        neg = graft_rightmost(neg, right_comb(n_pos - n_neg))
    elif n_pos < n_neg:
        pos = graft_rightmost(pos, right_comb(n_neg - n_pos))
    reduced = reduce_trees(neg, pos)
    if reduced != (neg, pos):
        raise AssertionError(f"built an unreduced pair for {nf.render()!r}")
    return TreePair(neg, pos)


def from_tree_pair(pair: TreePair) -> NormalForm:
    """Read the normal form off a reduced pair's leaf exponents."""
    positive = tuple((i, e) for i, e in enumerate(leaf_exponents(pair.pos)) if e)
    negative = tuple((i, e) for i, e in enumerate(leaf_exponents(pair.neg)) if e)
    return NormalForm(positive, negative)


_LETTER_PAIRS: dict[tuple[int, int], TreePair] = {}


def _letter_pair(index: int, sign: int) -> TreePair:
    key = (index, sign)
    pair = _LETTER_PAIRS.get(key)
    if pair is None:
        pair = to_tree_pair(NormalForm(((index, 1),), ()))
        if sign < 0:
            pair = TreePair(pair.pos, pair.neg)
        _LETTER_PAIRS[key] = pair
    return pair


def normalize(word: Union[InfiniteWord, Iterable[tuple[int, int]]]) -> NormalForm:
    """The normal form of a free word, by folding letter pairs through
    tree pair multiplication."""
    letters = word.letters if isinstance(word, InfiniteWord) else tuple(word)
    pair = TreePair.identity()
    for idx, sign in letters:
        pair = multiply(pair, _letter_pair(idx, sign))
    return from_tree_pair(pair)


def element_of(text: str) -> TreePair:
    """Parse any word and return the reduced tree pair of its element."""
    word = parse(text)
    if isinstance(word, NormalForm):
        return to_tree_pair(word)
    return to_tree_pair(normalize(word))
