"""Hot-path kernels: compiled extension when available, pure Python otherwise.

Set ``GTOUGH_BACKEND=python`` to force the pure backend, or
``GTOUGH_BACKEND=compiled`` to insist on the extension (ImportError if it was
not built).  Graphs with more than 64 vertices, or ratios too large for the
compiled fixed-width arithmetic, route to the pure backend transparently.
"""
from __future__ import annotations

import os

from . import pyref

try:
    from . import _fast
except ImportError:
    _fast = None

_pref = os.environ.get("GTOUGH_BACKEND", "").strip().lower()
if _pref == "python":
    _active = pyref
elif _pref == "compiled":
    if _fast is None:
        raise ImportError(
            "GTOUGH_BACKEND=compiled but the extension is not built; "
            "reinstall the package or unset the variable"
        )
    _active = _fast
elif _pref:
    raise ValueError(f"unknown GTOUGH_BACKEND {_pref!r}; use 'python' or 'compiled'")
else:
    _active = _fast if _fast is not None else pyref

BACKEND = _active.NAME
_COMPILED_MAX_N = 64
_COMPILED_MAX_RATIO = 1 << 31


def has_compiled() -> bool:
    return _fast is not None


def backends() -> dict:
    """Available backend modules by name (for the benchmark and parity tests)."""
    out = {"python": pyref}
    if _fast is not None:
        out["compiled"] = _fast
    return out


def _pick(n: int):
    if _active is not pyref and n > _COMPILED_MAX_N:
        return pyref
    return _active


def component_count(masks, alive: int) -> int:
    return _pick(len(masks)).component_count(masks, alive)


def component_masks(masks, alive: int) -> list:
    return _pick(len(masks)).component_masks(masks, alive)


def min_ratio_cut(masks, n: int) -> tuple:
    return _pick(n).min_ratio_cut(masks, n)


def cuts_of_size(masks, n: int, k: int, required: int = 0) -> list:
    return _pick(n).cuts_of_size(masks, n, k, required)


def certificate_search(masks, n: int, u: int, v: int, p: int, q: int):
    mod = _pick(n)
    if mod is not pyref and (p >= _COMPILED_MAX_RATIO or q >= _COMPILED_MAX_RATIO):
        mod = pyref
    return mod.certificate_search(masks, n, u, v, p, q)
