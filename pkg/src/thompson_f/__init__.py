"""Thompson's group F as reduced tree pair diagrams.

Exact word length from caret pairings, normal form conversion, dead-end
analysis, minimal path construction for one-sided words, and a
breadth-first Cayley graph oracle that cross-checks all of it.
"""

from .group_ops import (GENERATORS, Generator, TreePair, apply_generator, distance,
                        generator_pair, invert, multiply)
from .metric import (caret_census, caret_pair_weight, coarse_bounds, one_sided_bounds,
                     one_sided_caret_bounds, refined_bounds, right_spine_empty,
                     word_length)
from .normal_form import (InfiniteWord, NormalForm, NotNormalFormError,
                          WordSyntaxError, element_of, from_tree_pair, normalize,
                          parse, parse_normal_form, to_tree_pair)
from .trees import CaretType, classify, infix_order, leaf_exponents, leaf_numbers, parse_tree, render_tree

__version__ = "0.1.0"

__all__ = [
    "CaretType", "GENERATORS", "Generator", "InfiniteWord", "NormalForm",
    "NotNormalFormError", "TreePair", "WordSyntaxError", "apply_generator",
    "caret_census", "caret_pair_weight", "classify", "coarse_bounds", "distance",
    "element_of", "from_tree_pair", "generator_pair", "infix_order", "invert",
    "leaf_exponents", "leaf_numbers", "multiply", "normalize", "one_sided_bounds",
    "one_sided_caret_bounds", "parse", "parse_normal_form", "parse_tree",
    "refined_bounds", "render_tree", "right_spine_empty", "to_tree_pair",
    "word_length",
]
