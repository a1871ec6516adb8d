"""Backend selection for the coloring-search kernel.

The compiled kernel is used when it imported cleanly and the instance fits
in machine words (n <= 64 vertices, colors <= 64); otherwise the pure-Python
kernel runs.  Set LISTCOLOR_PURE=1 to force the fallback, e.g. to compare
behavior or benchmark.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # pure-Python install
    _ckernel = None

if os.environ.get("LISTCOLOR_PURE"):
    _active = _pykernel
else:
    _active = _ckernel if _ckernel is not None else _pykernel

BACKEND = _active.BACKEND

_WORD_MASK_LIMIT = 1 << 64


def backends() -> dict:
    """Importable backends by name (used by the benchmark and parity tests)."""
    out = {"python": _pykernel}
    if _ckernel is not None:
        out["cython"] = _ckernel
    return out


@contextmanager
def use_backend(name: str):
    """Temporarily route all kernel calls through one backend."""
    global _active
    prev = _active
    _active = backends()[name]
    try:
        yield
    finally:
        _active = prev


def solve_colorings(
    adj,
    allowed,
    *,
    cap,
    want=0,
    symmetry=False,
    budget_nodes=0,
    deadline=0.0,
    backend=None,
):
    """Dispatch to the active kernel; see _pykernel.solve_colorings."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    impl = backends()[backend] if backend else _active
    if impl is not _pykernel:
        if len(adj) > 64 or any(a >= _WORD_MASK_LIMIT for a in allowed):
            impl = _pykernel
    return impl.solve_colorings(
        adj, allowed, cap, want, symmetry, budget_nodes, deadline
    )
