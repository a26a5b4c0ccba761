"""Dead-end detection and the per-generator length-change charts.

For a reduced pair meeting the applicability condition of a generator,
right multiplication changes the type of exactly one caret of the negative
tree; whether the length goes up or down is decided by the type that caret
is paired with in the positive tree.  The rules below tabulate that, one
chart per generator.  When the applicability condition fails the length
always grows by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_ops import Generator, TreePair, apply_generator
from .metric import word_length
from .trees import CaretType, Node, caret_count, classify

_LL = CaretType.LL
_I0 = CaretType.I0
_IR = CaretType.IR
_RI = CaretType.RI
_RNI = CaretType.RNI
_R0 = CaretType.R0

_ALL = frozenset((_LL, _I0, _IR, _RI, _RNI, _R0))


class ChartMismatchError(RuntimeError):
    """A chart prediction disagreed with the measured length change."""


@dataclass(frozen=True, slots=True)
class GeneratorEffect:
    generator: Generator
    delta: int  # +1 or -1
    rule: str  # chart row that predicted it, or "lemma-violated"


def applicability_condition(neg: Node, g: Generator) -> bool:
    """Whether right multiplication by g leaves the positive tree alone.

    x0 needs a nonempty left subtree of the root of the negative tree,
    x0^-1 a nonempty right subtree, and x1 / x1^-1 a nonempty left / right
    subtree of the root's right child.
    """
    s_l, s_r = neg
    if g is Generator.X0:
        return s_l is not None
    if g is Generator.X0_INV:
        return s_r is not None
    if s_r is None:
        return False
    if g is Generator.X1:
        return s_r[0] is not None
    return s_r[1] is not None


def _changed_caret_index(neg: Node, g: Generator) -> int:
    """Infix index of the one negative-tree caret whose type changes."""
    root_idx = caret_count(neg[0])
    if g is Generator.X0:
        return root_idx
    if g is Generator.X0_INV or g is Generator.X1_INV:
        return root_idx + 1 + caret_count(neg[1][0])  # the root's right child
    return root_idx + 1 + caret_count(neg[1][0][0])  # its left child


def _decrease_set(neg: Node, types_neg: list[CaretType], g: Generator,
                  c_idx: int) -> tuple[str, frozenset[CaretType]]:
    """Chart row id and the pairings that shorten the word.

    Forward generators key their row on the subtrees that decide the changed
    caret's new type; inverse generators key on its current type.  Every row
    partitions the six pairable types between increase and decrease.
    """
    if g is Generator.X0:
        c_r = neg[1]
        if c_r is not None and c_r[0] is not None:
            return "becomes-RI", frozenset({_LL})
        if c_r is not None and c_r[1] is not None:
            return "becomes-RNI", frozenset({_LL, _I0})
        return "becomes-R0", frozenset({_R0, _LL, _I0})

    if g is Generator.X0_INV:
        current = types_neg[c_idx]
        if current is _RI:
            return "from-RI", frozenset({_R0, _RNI, _RI, _I0, _IR})
        if current is _RNI:
            return "from-RNI", frozenset({_R0, _RNI, _RI, _IR})
        return "from-R0", frozenset({_RNI, _RI, _IR})

    if g is Generator.X1:
        c_rl = neg[1][0]
        if c_rl[1] is not None:
            return "becomes-RI", _ALL
        if neg[1][1] is not None:
            return "becomes-RNI", frozenset({_LL, _I0, _IR, _RI})
        return "becomes-R0", frozenset({_LL, _I0, _IR, _RI, _R0})

    current = types_neg[c_idx]
    if current is _RI:
        return "from-RI", frozenset()
    if current is _RNI:
        return "from-RNI", frozenset({_R0, _RNI})
    return "from-R0", frozenset({_RNI})


def predicted_delta(pair: TreePair, g: Generator) -> tuple[int, str]:
    """Structural prediction for the length change of right multiplication.

    Three regimes.  When the applicability condition fails the length grows
    by one.  When it holds but the product loses carets the length drops by
    one: the lost caret means the inverse application, read backwards, fails
    its own condition and therefore lengthens.  Otherwise exactly one caret
    pair changes type and the chart row decides the sign.
    """
    if not applicability_condition(pair.neg, g):
        return 1, "lemma-violated"
    if apply_generator(pair, g).caret_count < pair.caret_count:
        return -1, f"{g.word_text}:cancels-carets"
    types_neg = classify(pair.neg)
    types_pos = classify(pair.pos)
    c_idx = _changed_caret_index(pair.neg, g)
    row, decrease = _decrease_set(pair.neg, types_neg, g, c_idx)
    paired = types_pos[c_idx]
    delta = -1 if paired in decrease else 1
    return delta, f"{g.word_text}:{row}:paired-{paired}"


def measured_deltas(pair: TreePair) -> dict[Generator, int]:
    """Length change of each generator, measured directly."""
    base = word_length(pair)
    return {g: word_length(apply_generator(pair, g)) - base for g in Generator}


def generator_effect(pair: TreePair, g: Generator) -> GeneratorEffect:
    """Measured length change plus the chart row that predicted it.

    Raises ChartMismatchError if the prediction disagrees with the
    measurement; a mismatch means either the chart transcription or the
    group arithmetic is broken, and nothing downstream should run.
    """
    delta = word_length(apply_generator(pair, g)) - word_length(pair)
    expected, rule = predicted_delta(pair, g)
    if delta != expected:
        raise ChartMismatchError(
            f"{rule} predicted {expected:+d} but measured {delta:+d} on {pair!r}")
    return GeneratorEffect(g, delta, rule)


class NotDeadEndError(ValueError):
    """Operation requires a dead-end element."""


def is_dead_end(pair: TreePair) -> bool:
    """Whether every generator shortens the element."""
    if pair.is_identity():
        raise ValueError("the identity is excluded from dead-end analysis")
    return all(d == -1 for d in measured_deltas(pair).values())


def matches_dead_end_form(pair: TreePair) -> bool:
    """Structural dead-end test: all four applicability conditions hold and
    every chart row reports a decrease for its changed caret's pairing.

    This is a pure shape test on the two trees; no lengths are computed.
    Consequences of the conjunction: the left subtree two steps down the
    negative tree's right side is empty (the x1^-1 chart never shortens
    otherwise), the root pairs against LL, and the types at the root's
    right child pair as RNI against RNI, RNI against R0, or R0 against RNI.
    """
    neg, pos = pair.neg, pair.pos
    if not all(applicability_condition(neg, g) for g in Generator):
        return False
    types_neg = classify(neg)
    types_pos = classify(pos)
    for g in Generator:
        c_idx = _changed_caret_index(neg, g)
        _, decrease = _decrease_set(neg, types_neg, g, c_idx)
        if types_pos[c_idx] not in decrease:
            return False
    return True


def escape_word(pair: TreePair) -> list[Generator]:
    """A three-letter extension of a dead end whose endpoint is longer.

    Walking x0^-1 then x1 twice passes through lengths n-1, n, n+1, so no
    neighbourhood of radius three stays inside the ball.
    """
    if not is_dead_end(pair):
        raise NotDeadEndError("escape paths are defined for dead ends only")
    return [Generator.X0_INV, Generator.X1, Generator.X1]
