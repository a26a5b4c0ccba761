"""Exact word length from caret pairings, and length bounds from caret counts.

The two-generator word length of a reduced pair is the sum, over infix
positions, of a fixed weight on the pair of caret types at that position.
The caret-count bounds all derive from scanning that weight table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_ops import TreePair
from .normal_form import NormalForm, side_tree, to_tree_pair
from .trees import CaretType, classify, leaf_exponents

_L0 = CaretType.L0
_LL = CaretType.LL
_I0 = CaretType.I0
_IR = CaretType.IR
_RI = CaretType.RI
_RNI = CaretType.RNI
_R0 = CaretType.R0

# Symmetric weights on pairs of non-L0 caret types; the (L0, L0) pair weighs 0
# and L0 never pairs with anything else.  Stored as data so the CLI can dump
# it for byte comparison against the checked-in transcription.
WEIGHT_TABLE: dict[tuple[CaretType, CaretType], int] = {}


def _fill_weights() -> None:
    rows = (_R0, _RNI, _RI, _LL, _I0, _IR)
    cells = (
        (0, 2, 2, 1, 1, 3),
        (2, 2, 2, 1, 1, 3),
        (2, 2, 2, 1, 3, 3),
        (1, 1, 1, 2, 2, 2),
        (1, 1, 3, 2, 2, 4),
        (3, 3, 3, 2, 4, 4),
    )
    for a, row in zip(rows, cells):
        for b, w in zip(rows, row):
            WEIGHT_TABLE[(a, b)] = w
    WEIGHT_TABLE[(_L0, _L0)] = 0


_fill_weights()

WEIGHT_TABLE_ORDER = (_R0, _RNI, _RI, _LL, _I0, _IR)


def caret_pair_weight(a: CaretType, b: CaretType) -> int:
    """Weight of one caret type pairing.

    Rejects a mixed L0 pairing outright: both trees have their L0 caret at
    infix position 0, so a mixed pairing means a classification bug upstream.
    """
    if (a is _L0) != (b is _L0):
        raise ValueError(f"L0 can only pair with L0, got ({a}, {b})")
    return WEIGHT_TABLE[(a, b)]


def word_length(pair: TreePair) -> int:
    """Exact word length in the two-generator presentation."""
    types_neg = classify(pair.neg)
    types_pos = classify(pair.pos)
    return sum(caret_pair_weight(a, b) for a, b in zip(types_neg, types_pos))


def length_report(pair: TreePair) -> list[tuple[int, CaretType, CaretType, int]]:
    """Per-caret breakdown: (infix index, negative type, positive type, weight)."""
    types_neg = classify(pair.neg)
    types_pos = classify(pair.pos)
    return [(i, a, b, caret_pair_weight(a, b))
            for i, (a, b) in enumerate(zip(types_neg, types_pos))]


def is_one_sided(pair: TreePair) -> bool:
    """True when the element is strictly positive or strictly negative,
    i.e. one side of the pair carries no exponents at all."""
    return (not any(leaf_exponents(pair.neg))
            or not any(leaf_exponents(pair.pos)))


def coarse_bounds(pair: TreePair) -> tuple[int, int]:
    """Caret-count bracket on word length: (N - 2, 4N - 4).

    Every pair has the weight-0 (L0, L0) pairing and at most one weight-0
    (R0, R0) pairing; all other pairings weigh between 1 and 4.
    """
    n = pair.caret_count
    return (n - 2, 4 * n - 4)


def one_sided_caret_bounds(pair: TreePair) -> tuple[int, int]:
    """Tightened caret-count bracket (N - 2, 3N - 3) for strictly positive
    or negative elements, where one tree is an all-right comb and the
    surviving column of the weight table maxes out at 3."""
    if not is_one_sided(pair):
        raise ValueError("bounds apply to strictly positive or negative words")
    n = pair.caret_count
    return (n - 2, 3 * n - 3)


@dataclass(frozen=True, slots=True)
class CaretCensus:
    total: int
    left: int
    interior: int
    right: int

    def __post_init__(self) -> None:
        if self.total != self.left + self.interior + self.right:
            raise ValueError("census parts do not add up")


def _part_numbers(nf: NormalForm, side: str) -> tuple[int, list[tuple[int, int]]]:
    """Split one part into (exponent of x0, remaining terms index >= 1)."""
    part = nf.negative if side == "negative" else nf.positive
    s0 = 0
    rest = []
    for idx, exp in part:
        if idx == 0:
            s0 = exp
        else:
            rest.append((idx, exp))
    return s0, rest


def right_spine_empty(nf: NormalForm, side: str) -> bool:
    """Whether the root caret of the side's tree has an empty right subtree.

    Detectable from the part alone: with x0 exponent s0 and remaining terms
    (j_1, s_1) .. (j_l, s_l), the right subtree is empty exactly when the
    top index j_l stays below s0 + s_1 + ... + s_{l-1}.  Parts that mention
    nothing beyond x0 build a left comb, which always qualifies.  The
    formula is checked against the built tree on every call.
    """
    s0, rest = _part_numbers(nf, side)
    if not rest:
        by_formula = True
    else:
        j_top = rest[-1][0]
        below = s0 + sum(s for _, s in rest[:-1])
        by_formula = j_top < below
    direct = side_tree(nf, side)[1] is None
    if by_formula != direct:
        raise AssertionError(
            f"right-subtree formula disagrees with the built tree for "
            f"{nf.render()!r} ({side})")
    return by_formula


def caret_census(nf: NormalForm, side: str) -> CaretCensus:
    """Caret counts of one side's tree, padding right carets excluded.

    With a nonempty right subtree the tree runs out to leaf j_l + s_l, so it
    has j_l + s_l + 1 carets; otherwise everything fits in the left subtree
    and the count is the exponent sum plus one.  Left carets always number
    s0 + 1 and interior carets carry the remaining exponents.
    """
    s0, rest = _part_numbers(nf, side)
    left = s0 + 1
    interior = sum(s for _, s in rest)
    if right_spine_empty(nf, side):
        total = s0 + interior + 1
    else:
        j_l, s_l = rest[-1]
        total = j_l + s_l + 1
    return CaretCensus(total, left, interior, total - left - interior)


@dataclass(frozen=True, slots=True)
class RefinedBounds:
    lower: int
    upper: int
    swapped: bool  # True when the bounds were computed on the inverse element

    def __iter__(self):
        yield self.lower
        yield self.upper


def refined_bounds(nf: NormalForm) -> RefinedBounds:
    """Census-based bracket on word length, driven by the negative part.

    Assumes the negative tree has at most as many R0 carets as the positive
    tree; when that fails the element is silently replaced by its inverse
    (same length) and the swap is recorded in the result.
    """
    pair = to_tree_pair(nf)
    r0_neg = classify(pair.neg).count(CaretType.R0)
    r0_pos = classify(pair.pos).count(CaretType.R0)
    swapped = r0_neg > r0_pos
    oriented = nf.inverse() if swapped else nf
    s0, rest = _part_numbers(oriented, "negative")
    tail = sum(s for _, s in rest)
    if right_spine_empty(oriented, "negative"):
        lower = s0 + tail - 1
        upper = 2 * s0 + 4 * tail
    else:
        j_l, s_l = rest[-1]
        lower = j_l + s_l - 1
        upper = 3 * (j_l + s_l) + tail + 2 * s0
    return RefinedBounds(lower, upper, swapped)


def one_sided_bounds(nf: NormalForm) -> tuple[int, int]:
    """Sharper census bracket for strictly positive or negative words."""
    if nf.positive and nf.negative:
        raise ValueError("bounds apply to strictly positive or negative words")
    side = "negative" if nf.negative else "positive"
    s0, rest = _part_numbers(nf, side)
    tail = sum(s for _, s in rest)
    if right_spine_empty(nf, side):
        return (s0 + tail, s0 + 3 * tail)
    j_k, s_k = rest[-1]
    return (2 * (j_k + s_k) - (s0 + tail) - 2, 2 * (j_k + s_k) + (s0 + tail) - 2 * s0)
