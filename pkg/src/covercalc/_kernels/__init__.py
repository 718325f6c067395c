"""Search-kernel backend selection.

The compiled extension (covercalc._kernels._fast) is preferred when it was
built; otherwise the pure-Python kernels are used.  Both expose the same
functions with identical tie-breaking, so every result is bit-identical.
Set COVERCALC_KERNEL=pure to force the fallback.
"""

import os

from . import pure

_impl = pure
if os.environ.get("COVERCALC_KERNEL", "").lower() != "pure":
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

encode = _impl.encode
decode = _impl.decode
translate = _impl.translate
apply_matrix = _impl.apply_matrix
closure = _impl.closure
invariant_core = _impl.invariant_core
min_cover = _impl.min_cover


def load(name: str):
    """Fetch a backend module by name ('pure' or 'c'), for benchmarks/tests."""
    if name == "pure":
        return pure
    if name in ("c", "fast"):
        from . import _fast
        return _fast
    raise ValueError(f"unknown kernel backend {name!r}")
