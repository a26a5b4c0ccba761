"""Kernel selection: compiled extension when available, pure Python otherwise.

Set THOMPSON_F_PURE_PYTHON=1 to force the fallback.  Both implementations
share the byte format; encode/decode helpers always come from the pure side.
"""

from __future__ import annotations

import os

from ._kernel_py import decode_pair, decode_tree, encode_pair, encode_tree

if os.environ.get("THOMPSON_F_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]

IMPL = _impl.IMPL
IDENTITY = _impl.IDENTITY
apply_generator = _impl.apply_generator
neighbors = _impl.neighbors
multiply = _impl.multiply
invert = _impl.invert
key = _impl.key
fordham = _impl.fordham

__all__ = [
    "IMPL", "IDENTITY", "apply_generator", "neighbors", "multiply", "invert",
    "key", "fordham", "encode_pair", "encode_tree", "decode_pair", "decode_tree",
]
