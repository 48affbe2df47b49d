"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` is used.  Setting ``TDGRAPH_BACKEND=python`` forces
the fallback.  Both backends expose the same three functions and return
identical results.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

import numpy as np

from . import _pykernels


def _load() -> ModuleType:
    if os.environ.get("TDGRAPH_BACKEND", "").lower() == "python":
        return _pykernels
    try:
        return importlib.import_module("tdgraph._ckernels")
    except ImportError:
        return _pykernels


backend: ModuleType = _load()
BACKEND: str = backend.NAME


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    try:
        out["cython"] = importlib.import_module("tdgraph._ckernels")
    except ImportError:
        pass
    return out


def ints_to_words(rows: list[int], width: int) -> np.ndarray:
    """Pack int bitsets into an ``(len(rows), words)`` uint64 array."""
    words = max(1, (width + 63) >> 6)
    buf = b"".join(r.to_bytes(words * 8, "little") for r in rows)
    return np.frombuffer(buf, dtype=np.uint64).reshape(len(rows), words).copy()


def words_to_ints(arr: np.ndarray) -> list[int]:
    arr = np.ascontiguousarray(arr, dtype=np.uint64)
    return [int.from_bytes(row.tobytes(), "little") for row in arr]


def orthogonality_rows(coords: np.ndarray, add: np.ndarray, mul: np.ndarray, impl: ModuleType | None = None) -> np.ndarray:
    impl = impl or backend
    return impl.orthogonality_rows(
        np.ascontiguousarray(coords, dtype=np.int32),
        np.ascontiguousarray(add, dtype=np.int32),
        np.ascontiguousarray(mul, dtype=np.int32),
    )


def dominating_search(closed: list[int], initial: list[int], impl: ModuleType | None = None) -> tuple[list[int], int]:
    impl = impl or backend
    if impl is _pykernels:
        return impl.dominating_search(closed, initial)
    return impl.dominating_search(ints_to_words(closed, len(closed)), list(initial))


def clique_search(adj: list[int], initial: list[int], impl: ModuleType | None = None) -> tuple[list[int], int]:
    impl = impl or backend
    if impl is _pykernels:
        return impl.clique_search(adj, initial)
    return impl.clique_search(ints_to_words(adj, len(adj)), list(initial))
