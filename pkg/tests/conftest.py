"""Shared fixtures and random generators for the test suite."""

from __future__ import annotations

import random

import pytest

from thompson_f.group_ops import TreePair
from thompson_f.normal_form import NormalForm, from_tree_pair
from thompson_f.trees import Node


def random_tree(rng: random.Random, n: int) -> Node:
    if n == 0:
        return None
    k = rng.randrange(n)
    return (random_tree(rng, k), random_tree(rng, n - 1 - k))


def random_pair(rng: random.Random, max_carets: int, min_carets: int = 1) -> TreePair:
    n = rng.randint(min_carets, max_carets)
    return TreePair.from_trees(random_tree(rng, n), random_tree(rng, n))


def random_normal_form(rng: random.Random, max_carets: int) -> NormalForm:
    return from_tree_pair(random_pair(rng, max_carets))


def random_one_sided(rng: random.Random, max_carets: int,
                     side: str = "negative") -> NormalForm:
    """A strictly negative (or positive) word: exponents of a random tree."""
    from thompson_f.trees import leaf_exponents

    tree = random_tree(rng, rng.randint(1, max_carets))
    terms = tuple((i, e) for i, e in enumerate(leaf_exponents(tree)) if e)
    if side == "negative":
        return NormalForm((), terms)
    return NormalForm(terms, ())


@pytest.fixture(scope="session")
def ball12():
    """One shared radius-12 ball; large enough for every oracle-backed test
    (the smallest dead ends sit at length 11)."""
    from thompson_f.oracle import bfs_ball

    return bfs_ball(12, max_elements=10_000_000)
