"""Paths in the two-generator presentation: an exact construction for
one-sided words and a cheap 4-approximate construction for everything.

Generator words are sequences over x0, x0^-1, x1, x1^-1, rendered either as
whitespace-separated letters a A b B or in the x-style word grammar.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .group_ops import Generator, TreePair, evaluate_word
from .metric import word_length
from .normal_form import NormalForm, to_tree_pair
from .trees import CaretType, Node, classify

GeneratorWord = list[Generator]

_X0 = Generator.X0
_X0_INV = Generator.X0_INV
_X1 = Generator.X1
_X1_INV = Generator.X1_INV


class MixedWordError(ValueError):
    """Operation requires a strictly positive or strictly negative word."""


def evaluate(word: Iterable[Generator]) -> TreePair:
    """The element a generator word spells, read left to right."""
    return evaluate_word(word)


def is_geodesic_word(word: Sequence[Generator]) -> bool:
    return len(word) == word_length(evaluate(word))


def render_letters(word: Iterable[Generator]) -> str:
    return " ".join(g.letter for g in word)


def parse_letters(text: str) -> GeneratorWord:
    return [Generator.from_letter(tok) for tok in text.split()]


def render_x_style(word: Iterable[Generator]) -> str:
    return " ".join(g.word_text for g in word)


def parse_x_style(text: str) -> GeneratorWord:
    from .normal_form import InfiniteWord, parse

    parsed = parse(text)
    letters = parsed.letters if isinstance(parsed, InfiniteWord) else None
    if letters is None:
        letters = []
        for idx, exp in parsed.positive:
            letters.extend((idx, 1) for _ in range(exp))
        for idx, exp in reversed(parsed.negative):
            letters.extend((idx, -1) for _ in range(exp))
    out = []
    for idx, sign in letters:
        if idx > 1:
            raise ValueError(f"x{idx} is not a generator of the finite presentation")
        out.append(Generator((idx << 1) | (sign < 0)))
    return out


def _free_reduce(word: Iterable[Generator]) -> GeneratorWord:
    out: GeneratorWord = []
    for g in word:
        if out and out[-1] is g.inverse:
            out.pop()
        else:
            out.append(g)
    return out


def replacement_word(nf: NormalForm) -> GeneratorWord:
    """Rewrite each x_n as a conjugate of x1 by a power of x0 and freely
    reduce.  Always evaluates to the element; at most 4 times minimal."""
    word: GeneratorWord = []
    for idx, exp in nf.positive:
        word.extend(_conjugate_run(idx, exp))
    for idx, exp in reversed(nf.negative):
        word.extend(_conjugate_run(idx, -exp))
    return _free_reduce(word)


def _conjugate_run(index: int, exponent: int) -> GeneratorWord:
    letter = _X1 if exponent > 0 else _X1_INV
    if index == 0:
        letter = _X0 if exponent > 0 else _X0_INV
        return [letter] * abs(exponent)
    shift = index - 1
    return ([_X0_INV] * shift) + [letter] * abs(exponent) + ([_X0] * shift)


# Letters emitted around each caret of the negative tree, in infix order:
# (before its right subtree, after its right subtree).  Right carets wrap
# the construction of everything below them on the spine; the wrapping cost
# equals the caret's pairing weight against a padding caret.
_EMISSIONS: dict[CaretType, tuple[tuple[Generator, ...], tuple[Generator, ...]]] = {
    CaretType.L0: ((), ()),
    CaretType.LL: ((_X0_INV,), ()),
    CaretType.I0: ((_X1_INV,), ()),
    CaretType.IR: ((_X0_INV,), (_X0, _X1_INV)),
    CaretType.RNI: ((_X0_INV,), (_X0,)),
    CaretType.RI: ((_X0_INV,), (_X0,)),
    CaretType.R0: ((), ()),
}


def nested_traversal_word(nf: NormalForm) -> GeneratorWord:
    """A minimal-length generator word for a one-sided normal form.

    For a negative word, traverse its tree in infix order emitting the
    letters that turn padding carets into carets of the required types; the
    recursion on right subtrees nests the emissions.  A positive word is
    handled through its inverse: reverse the inverse's word and flip every
    letter.
    """
    if nf.positive and nf.negative:
        raise MixedWordError("minimal path construction needs a one-sided word")
    if nf.is_identity():
        return []
    if nf.positive:
        return [g.inverse for g in reversed(nested_traversal_word(nf.inverse()))]
    tree = to_tree_pair(nf).neg
    types = classify(tree)
    word: GeneratorWord = []
    index = [0]

    def walk(node: Node) -> None:
        left, right = node
        if left is not None:
            walk(left)
        before, after = _EMISSIONS[types[index[0]]]
        index[0] += 1
        word.extend(before)
        if right is not None:
            walk(right)
        word.extend(after)

    walk(tree)
    return word
