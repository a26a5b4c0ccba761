"""Pure-Python kernel: the oracle's hot operations on encoded tree pairs.

A tree is encoded in preorder, one byte per node: 1 for a caret followed by
its two children, 0 for a leaf.  A pair is the negative encoding followed by
the positive one (the format is self-delimiting).  This implementation
routes through the regular tree objects; the compiled twin in _kernel_c
works on the byte arrays directly and must produce identical results.
"""

from __future__ import annotations

from .group_ops import Generator, TreePair, apply_generator as _apply, invert as _invert, multiply as _multiply
from .metric import word_length
from .normal_form import from_tree_pair
from .trees import Node

IMPL = "python"


def encode_tree(node: Node) -> bytes:
    out = bytearray()
    _write(node, out)
    return bytes(out)


def _write(node: Node, out: bytearray) -> None:
    if node is None:
        out.append(0)
        return
    out.append(1)
    _write(node[0], out)
    _write(node[1], out)


def decode_tree(buf: bytes, start: int = 0) -> tuple[Node, int]:
    if buf[start] == 0:
        return None, start + 1
    left, i = decode_tree(buf, start + 1)
    right, i = decode_tree(buf, i)
    return (left, right), i


def encode_pair(pair: TreePair) -> bytes:
    return encode_tree(pair.neg) + encode_tree(pair.pos)


def decode_pair(enc: bytes) -> TreePair:
    neg, i = decode_tree(enc, 0)
    pos, i = decode_tree(enc, i)
    if i != len(enc):
        raise ValueError("trailing bytes in encoded pair")
    return TreePair(neg, pos)


IDENTITY = encode_pair(TreePair.identity())


def apply_generator(enc: bytes, g: int) -> bytes:
    return encode_pair(_apply(decode_pair(enc), Generator(g)))


def neighbors(enc: bytes) -> tuple[bytes, bytes, bytes, bytes]:
    pair = decode_pair(enc)
    return tuple(encode_pair(_apply(pair, g)) for g in Generator)


def multiply(a: bytes, b: bytes) -> bytes:
    return encode_pair(_multiply(decode_pair(a), decode_pair(b)))


def invert(enc: bytes) -> bytes:
    return encode_pair(_invert(decode_pair(enc)))


def key(enc: bytes) -> str:
    return from_tree_pair(decode_pair(enc)).render()


def fordham(enc: bytes) -> int:
    return word_length(decode_pair(enc))
