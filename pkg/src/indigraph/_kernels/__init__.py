"""Kernel selection: compiled extension when available, pure Python otherwise.

Set INDIGRAPH_PURE=1 to force the pure-Python kernel.  Both kernels expose
prepare / closure / enumerate_minimal_sets / generating_tuples with identical
semantics (see _pure.py for the contract).
"""

import os

from . import _pure

if os.environ.get("INDIGRAPH_PURE"):
    impl = _pure
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _pure

IS_COMPILED = getattr(impl, "IS_COMPILED", False)

prepare = impl.prepare
closure = impl.closure
enumerate_minimal_sets = impl.enumerate_minimal_sets
generating_tuples = impl.generating_tuples

mask_members = _pure.mask_members  # bitmask helper, shared

