"""Kernel backend selection.

Imports the compiled kernels (``_ckernels``) when present, falling back to
the pure-Python implementation.  Set ``HYPERHODGE_BACKEND=py`` or ``=c`` to
force a backend; forcing ``c`` on a pure install raises at import.  Both
backends produce bit-identical results (tested), so the choice never changes
any computed value.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCED = os.environ.get("HYPERHODGE_BACKEND", "").strip().lower()
if _FORCED not in ("", "c", "py"):
    raise ImportError(
        f"HYPERHODGE_BACKEND must be 'c' or 'py', not {_FORCED!r}")

if _FORCED == "py":
    _impl = _kernels_py
    BACKEND = "py"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "c"
    except ImportError:
        if _FORCED == "c":
            raise
        _impl = _kernels_py
        BACKEND = "py"

normalize = _impl.normalize
poly_mul = _impl.poly_mul
linear_product = _impl.linear_product


def load_backend(name):
    """Return the named backend module ('py' or 'c'); ImportError if absent."""
    if name == "py":
        return _kernels_py
    if name == "c":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def use_backend(name):
    """Re-bind the kernel functions to the named backend; returns the old name.

    Exists for the benchmark and the backend-parity tests; library code always
    goes through the module-level names above.
    """
    global normalize, poly_mul, linear_product, BACKEND
    module = load_backend(name)
    previous = BACKEND
    normalize = module.normalize
    poly_mul = module.poly_mul
    linear_product = module.linear_product
    BACKEND = name
    return previous
