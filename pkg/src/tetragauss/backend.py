"""Kernel backend selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise the pure-Python twin is used. ``TETRAGAUSS_KERNEL=pure`` or
``=compiled`` forces the choice (the latter raises if the extension is
missing).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py


def _load() -> tuple[ModuleType, str]:
    forced = os.environ.get("TETRAGAUSS_KERNEL")
    if forced not in (None, "", "pure", "compiled"):
        raise RuntimeError(f"TETRAGAUSS_KERNEL must be 'pure' or 'compiled', not {forced!r}")
    if forced == "pure":
        return _kernel_py, "pure"
    try:
        from . import _kernel  # type: ignore[attr-defined]

        return _kernel, "compiled"
    except ImportError:
        if forced == "compiled":
            raise RuntimeError("compiled kernel requested but the extension is not built")
        return _kernel_py, "pure"


kernel, KERNEL_NAME = _load()


def available_kernels() -> dict[str, ModuleType]:
    """Importable kernels keyed by name, for benchmarks and parity tests."""
    found: dict[str, ModuleType] = {"pure": _kernel_py}
    try:
        from . import _kernel  # type: ignore[attr-defined]

        found["compiled"] = _kernel
    except ImportError:
        pass
    return found
