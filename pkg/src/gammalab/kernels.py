"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``GAMMA_LAB_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("GAMMA_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass

closure_mask = _impl.closure_mask
filter_masks = _impl.filter_masks
compatible = _impl.compatible
search_tables = _impl.search_tables
canonical_form = _impl.canonical_form
structure_forms = _impl.structure_forms
