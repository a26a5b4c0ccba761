"""Group structure on reduced tree pairs.

An element is a reduced pair (negative tree, positive tree) with equal caret
counts.  Products follow word order: ``multiply(f, g)`` is the element whose
generator words are f's followed by g's.  Concretely the negative tree of f
and the positive tree of g are grown to a common refinement; the surviving
outer trees, reduced, form the product.  The orientation of the generator
diagrams below fixes this convention, and the multiplication golden tests
pin it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .trees import Node, caret_count, leaf_count, parse_tree, render_tree


class Generator(enum.IntEnum):
    """The four generators of the two-generator presentation."""

    X0 = 0
    X0_INV = 1
    X1 = 2
    X1_INV = 3

    @property
    def inverse(self) -> "Generator":
        return Generator(self.value ^ 1)

    @property
    def letter(self) -> str:
        return "aAbB"[self.value]

    @property
    def word_text(self) -> str:
        return ("x0", "x0^-1", "x1", "x1^-1")[self.value]

    @classmethod
    def from_letter(cls, letter: str) -> "Generator":
        try:
            return cls("aAbB".index(letter))
        except ValueError:
            raise ValueError(f"unknown generator letter {letter!r}") from None


GENERATORS = tuple(Generator)


@dataclass(frozen=True, slots=True)
class TreePair:
    """A reduced tree pair diagram (negative tree, positive tree)."""

    neg: Node
    pos: Node

    def __post_init__(self) -> None:
        if self.neg is None or self.pos is None:
            raise ValueError("tree pair sides must have at least one caret")
        if caret_count(self.neg) != caret_count(self.pos):
            raise ValueError("tree pair sides must have equal caret counts")
        # The single-caret identity pair is the one irreducible exception.
        if caret_count(self.neg) > 1 and _exposed_pairs(self.neg) & _exposed_pairs(self.pos):
            raise ValueError("tree pair is not reduced")

    @classmethod
    def identity(cls) -> "TreePair":
        return cls((None, None), (None, None))

    @classmethod
    def from_trees(cls, neg: Node, pos: Node) -> "TreePair":
        """Build from possibly unreduced same-size trees, reducing as needed."""
        return cls(*reduce_trees(neg, pos))

    @property
    def caret_count(self) -> int:
        return caret_count(self.neg)

    def is_identity(self) -> bool:
        return self.neg == (None, None) and self.pos == (None, None)

    def __repr__(self) -> str:
        return f"TreePair({render_tree(self.neg)!r}, {render_tree(self.pos)!r})"


_X0_PAIR = (parse_tree("(*(**))"), parse_tree("((**)*)"))
_X1_PAIR = (parse_tree("(*(*(**)))"), parse_tree("(*((**)*))"))


def generator_pair(g: Generator) -> TreePair:
    neg, pos = _X0_PAIR if g in (Generator.X0, Generator.X0_INV) else _X1_PAIR
    if g in (Generator.X0_INV, Generator.X1_INV):
        neg, pos = pos, neg
    return TreePair(neg, pos)


def invert(pair: TreePair) -> TreePair:
    return TreePair(pair.pos, pair.neg)


def refine(a: Node, b: Node) -> Node:
    """The smallest tree containing both arguments as prefixes."""
    if a is None:
        return b
    if b is None:
        return a
    return (refine(a[0], b[0]), refine(a[1], b[1]))


def graft_map(template: Node, refined: Node) -> tuple[Node, ...]:
    """For each leaf of ``template`` (left to right), the subtree that
    ``refined`` hangs below it.  ``refined`` must contain ``template``."""
    out: list[Node] = []

    def walk(t: Node, r: Node) -> None:
        if t is None:
            out.append(r)
            return
        if r is None:
            raise ValueError("refined tree does not contain the template")
        walk(t[0], r[0])
        walk(t[1], r[1])

    walk(template, refined)
    return tuple(out)


def graft_leaves(target: Node, grafts: tuple[Node, ...]) -> Node:
    """Attach ``grafts[k]`` at leaf k of ``target``."""
    it = iter(grafts)

    def walk(node: Node) -> Node:
        if node is None:
            return next(it)
        return (walk(node[0]), walk(node[1]))

    result = walk(target)
    if next(it, _SENTINEL) is not _SENTINEL:
        raise ValueError(f"expected {leaf_count(target)} grafts")
    return result


_SENTINEL = object()


def common_refinement(a: Node, b: Node) -> tuple[Node, tuple[Node, ...], tuple[Node, ...]]:
    """Minimal common expansion of two trees plus the per-leaf additions
    needed to expand each of them (and its pair partner) to it."""
    e = refine(a, b)
    return e, graft_map(a, e), graft_map(b, e)


def _exposed_pairs(node: Node) -> set[int]:
    """Left leaf numbers of carets whose two leaves are both exposed."""
    out: set[int] = set()
    counter = [0]

    def walk(n: Node) -> None:
        if n is None:
            counter[0] += 1
            return
        left, right = n
        if left is None and right is None:
            out.add(counter[0])
        walk(left)
        walk(right)

    walk(node)
    return out


def _remove_exposed(node: Node, targets: set[int]) -> Node:
    counter = [0]

    def walk(n: Node) -> Node:
        if n is None:
            counter[0] += 1
            return None
        left, right = n
        if left is None and right is None and counter[0] in targets:
            counter[0] += 2
            return None
        return (walk(left), walk(right))

    return walk(node)


def reduce_trees(neg: Node, pos: Node) -> tuple[Node, Node]:
    """Remove common exposed caret pairs until none remain.

    Removals can cascade: deleting a caret renumbers later leaves, which can
    expose a new common pair, so this iterates to a fixpoint.
    """
    while True:
        common = _exposed_pairs(neg) & _exposed_pairs(pos)
        if not common or caret_count(neg) == 1:
            return neg, pos
        neg = _remove_exposed(neg, common)
        pos = _remove_exposed(pos, common)


def multiply(f: TreePair, g: TreePair) -> TreePair:
    """The reduced pair of the product: f's word followed by g's."""
    e = refine(f.neg, g.pos)
    pos = graft_leaves(f.pos, graft_map(f.neg, e))
    neg = graft_leaves(g.neg, graft_map(g.pos, e))
    return TreePair.from_trees(neg, pos)


def apply_generator(pair: TreePair, g: Generator) -> TreePair:
    """Right multiplication by one generator."""
    return multiply(pair, generator_pair(g))


def evaluate_word(gens) -> TreePair:
    """Fold a sequence of generators from the identity."""
    pair = TreePair.identity()
    for g in gens:
        pair = apply_generator(pair, g)
    return pair


def distance(f: TreePair, g: TreePair) -> int:
    """Word metric distance: the length of the quotient element."""
    from .metric import word_length

    return word_length(multiply(invert(f), g))
