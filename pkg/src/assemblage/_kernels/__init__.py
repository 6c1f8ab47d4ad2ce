"""Kernel selection: compiled extension if available, pure Python otherwise.

Set ASSEMBLAGE_NO_EXT=1 to force the pure implementation.
"""

import os

from . import pure

IMPLEMENTATION = "pure"

if not os.environ.get("ASSEMBLAGE_NO_EXT"):
    try:
        from . import _speedups as _impl
        IMPLEMENTATION = "compiled"
    except ImportError:
        _impl = pure
else:
    _impl = pure

associativity_violation = _impl.associativity_violation
mono_flags = _impl.mono_flags
disjoint_pair_matrix = _impl.disjoint_pair_matrix
