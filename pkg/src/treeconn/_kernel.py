"""Select the packing kernel: compiled extension if importable, else Python.

Set ``TREECONN_PURE=1`` to force the Python kernel.
"""

from __future__ import annotations

import os

from . import _pack_py

python_pack = _pack_py.pack
compiled_pack = None

try:
    from ._packing_ext import pack as compiled_pack  # type: ignore[no-redef]
except ImportError:  # extension not built
    pass

if compiled_pack is not None and os.environ.get("TREECONN_PURE", "") not in ("1", "true"):
    pack = compiled_pack
    BACKEND = "cython"
else:
    pack = python_pack
    BACKEND = "python"


def get_pack(backend: str | None = None):
    if backend is None:
        return pack
    if backend == "python":
        return python_pack
    if backend == "cython":
        if compiled_pack is None:
            raise ImportError("compiled packing kernel is not built")
        return compiled_pack
    raise ValueError(f"unknown backend {backend!r}")
