"""Rooted binary trees of carets: numbering, classification, leaf exponents.

A tree is an immutable nested structure: a caret is a pair ``(left, right)``
and a leaf slot is ``None``.  The empty tree (a bare leaf, zero carets) is
``None``; it may appear as a subtree but never as a side of a tree pair.
All functions here are pure, so values can be shared freely across threads.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator, Optional, Tuple

Node = Optional[Tuple["Node", "Node"]]
Path = Tuple[int, ...]  # steps from the root, 0 = left slot, 1 = right slot


class CaretType(enum.IntEnum):
    """The seven-way classification of carets.

    Left carets sit on the left side of the tree (L0 is the one numbered 0),
    right carets on the right side, interior carets elsewhere.  Interior
    carets split on having a right child; right carets split on what follows
    them in infix order (an interior caret immediately after, an interior
    caret somewhere after, or none at all).
    """

    L0 = 0
    LL = 1
    I0 = 2
    IR = 3
    RI = 4
    RNI = 5
    R0 = 6

    def __str__(self) -> str:
        return self.name


def parse_tree(text: str) -> Node:
    """Parse the text form of a tree: leaf ``*``, caret ``(<left><right>)``."""
    node, end = _parse_node(text, 0)
    if end != len(text):
        raise ValueError(f"trailing characters at position {end}: {text[end:]!r}")
    return node


def _parse_node(text: str, i: int) -> tuple[Node, int]:
    if i >= len(text):
        raise ValueError(f"unexpected end of tree text at position {i}")
    ch = text[i]
    if ch == "*":
        return None, i + 1
    if ch == "(":
        left, i = _parse_node(text, i + 1)
        right, i = _parse_node(text, i)
        if i >= len(text) or text[i] != ")":
            raise ValueError(f"expected ')' at position {i}")
        return (left, right), i + 1
    raise ValueError(f"unexpected character {ch!r} at position {i}")


def render_tree(node: Node) -> str:
    if node is None:
        return "*"
    left, right = node
    return f"({render_tree(left)}{render_tree(right)})"


def caret_count(node: Node) -> int:
    if node is None:
        return 0
    left, right = node
    return 1 + caret_count(left) + caret_count(right)


def leaf_count(node: Node) -> int:
    return caret_count(node) + 1


def subtree_at(node: Node, path: Path) -> Node:
    for step in path:
        if node is None:
            raise ValueError(f"path {path} leaves the tree")
        node = node[step]
    return node


def infix_order(tree: Node) -> list[Path]:
    """Paths of all carets in infix order (left subtree, caret, right subtree).

    Caret 0 is the bottom of the left side and has exposed left leaf 0.
    """
    if tree is None:
        raise ValueError("the empty tree has no carets")
    out: list[Path] = []

    def walk(node: Node, path: Path) -> None:
        left, right = node
        if left is not None:
            walk(left, path + (0,))
        out.append(path)
        if right is not None:
            walk(right, path + (1,))

    walk(tree, ())
    return out


def leaf_numbers(tree: Node) -> list[Path]:
    """Paths of all exposed leaves, numbered left to right from 0."""
    if tree is None:
        raise ValueError("the empty tree has no numbered leaves")
    out: list[Path] = []

    def walk(node: Node, path: Path) -> None:
        if node is None:
            out.append(path)
            return
        left, right = node
        walk(left, path + (0,))
        walk(right, path + (1,))

    walk(tree, ())
    return out


def classify(tree: Node) -> list[CaretType]:
    """Type of every caret, in infix order.

    The root always counts as a left caret.  Exactly one caret (the one
    numbered 0) has type L0.
    """
    if tree is None:
        raise ValueError("the empty tree has no carets")
    families: list[str] = []  # "L" / "I" / "R" in infix order
    has_right_child: list[bool] = []

    def walk(node: Node, on_left: bool, on_right: bool) -> None:
        left, right = node
        if left is not None:
            walk(left, on_left, False)
        families.append("L" if on_left else ("R" if on_right else "I"))
        has_right_child.append(right is not None)
        if right is not None:
            walk(right, False, on_right)

    walk(tree, True, True)

    n = len(families)
    interior_after = [False] * n
    seen = False
    for i in range(n - 1, -1, -1):
        interior_after[i] = seen
        if families[i] == "I":
            seen = True

    out: list[CaretType] = []
    for i, fam in enumerate(families):
        if fam == "L":
            out.append(CaretType.L0 if i == 0 else CaretType.LL)
        elif fam == "I":
            out.append(CaretType.IR if has_right_child[i] else CaretType.I0)
        elif i + 1 < n and families[i + 1] == "I":
            out.append(CaretType.RI)
        elif interior_after[i]:
            out.append(CaretType.RNI)
        else:
            out.append(CaretType.R0)
    return out


def leaf_exponents(tree: Node) -> list[int]:
    """Exponent of every leaf: the length of the maximal chain of left edges
    rising from the leaf that stays off the right side of the tree.

    Leaf exponents are 0 on every right leaf and on the rightmost leaf.
    """
    if tree is None:
        raise ValueError("the empty tree has no numbered leaves")
    left, right = tree
    return _ascents(left) + _hung(right)


def _ascents(node: Node) -> list[int]:
    # Chain lengths measured inside a subtree hanging from a left slot.
    if node is None:
        return [0]
    left, right = node
    out = _ascents(left)
    out[0] += 1
    out.extend(_ascents(right))
    return out


def _hung(node: Node) -> list[int]:
    # Exponents of a subtree whose root sits on the right side of the tree.
    if node is None:
        return [0]
    left, right = node
    return _ascents(left) + _hung(right)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Node, ...]:
    """All trees with exactly n carets (Catalan many)."""
    if n == 0:
        return (None,)
    out: list[Node] = []
    for k in range(n):
        for left in enumerate_trees(k):
            for right in enumerate_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def iter_trees(max_carets: int, min_carets: int = 1) -> Iterator[Node]:
    for n in range(min_carets, max_carets + 1):
        yield from enumerate_trees(n)


def graft_rightmost(node: Node, sub: Node) -> Node:
    """Replace the rightmost leaf with the given subtree."""
    if node is None:
        return sub
    left, right = node
    return (left, graft_rightmost(right, sub))


def right_comb(n: int) -> Node:
    """The all-right comb with n carets (the shape of x1^-k negative trees)."""
    node: Node = None
    for _ in range(n):
        node = (None, node)
    return node


def tree_to_dot(tree: Node, name: str = "tree", prefix: str = "") -> str:
    """DOT text for one tree: carets labelled ``<infix>:<type>``, leaves
    ``<number>(E=<exponent>)``."""
    if tree is None:
        raise ValueError("cannot render the empty tree")
    types = classify(tree)
    exps = leaf_exponents(tree)
    lines = [f"digraph {name} {{"]
    lines.extend(_dot_lines(tree, types, exps, prefix))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_lines(tree: Node, types: list[CaretType], exps: list[int],
               prefix: str) -> list[str]:
    lines: list[str] = []
    counters = {"caret": 0, "leaf": 0}

    def walk(node: Node) -> str:
        if node is None:
            k = counters["leaf"]
            counters["leaf"] += 1
            nid = f"{prefix}l{k}"
            lines.append(f'  {nid} [shape=none, label="{k}(E={exps[k]})"];')
            return nid
        left, right = node
        left_id = walk(left)
        i = counters["caret"]
        counters["caret"] += 1
        nid = f"{prefix}c{i}"
        lines.append(f'  {nid} [shape=circle, label="{i}:{types[i]}"];')
        right_id = walk(right)
        lines.append(f"  {nid} -> {left_id};")
        lines.append(f"  {nid} -> {right_id};")
        return nid

    walk(tree)
    return lines
