"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise the
pure-Python ``_pykernels`` module. Set ``EMBEDCERT_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from contextlib import contextmanager
from types import ModuleType

from . import _pykernels

python_kernels: ModuleType = _pykernels
compiled_kernels: ModuleType | None

try:
    from . import _ckernels as compiled_kernels  # type: ignore[no-redef]
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("EMBEDCERT_PURE_PYTHON"):
    kernels: ModuleType = compiled_kernels
else:
    kernels = python_kernels


def available() -> list[ModuleType]:
    """Every importable backend, fallback first."""
    return [python_kernels] + ([compiled_kernels] if compiled_kernels is not None else [])


@contextmanager
def use(backend: ModuleType) -> Iterator[ModuleType]:
    """Temporarily route every kernel call through ``backend``."""
    global kernels
    saved, kernels = kernels, backend
    try:
        yield backend
    finally:
        kernels = saved
