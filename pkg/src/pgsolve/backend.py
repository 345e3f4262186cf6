"""Kernel backend selection.

The fixpoint kernels exist twice: a numba @njit worklist implementation
(default) and a vectorized pure-numpy fallback.  Selection happens through
the PGSOLVE_BACKEND environment variable ("numba" or "numpy") or at
runtime via set_backend(); when numba is not importable the numpy path is
used automatically.
"""

from __future__ import annotations

import os

_ENV_VAR = "PGSOLVE_BACKEND"

try:
    import numba  # noqa: F401
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

_selected: str | None = None


def available_backends() -> tuple:
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def _default() -> str:
    env = os.environ.get(_ENV_VAR, "").strip().lower()
    if env in ("numba", "numpy"):
        if env == "numba" and not _HAVE_NUMBA:
            raise RuntimeError("PGSOLVE_BACKEND=numba but numba is not installed")
        return env
    if env:
        raise RuntimeError(f"unknown {_ENV_VAR} value: {env!r}")
    return "numba" if _HAVE_NUMBA else "numpy"


def current_backend() -> str:
    global _selected
    if _selected is None:
        _selected = _default()
    return _selected


def set_backend(name: str) -> None:
    global _selected
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available "
                         f"(choose from {available_backends()})")
    _selected = name


def kernels():
    """The kernel module for the current backend."""
    if current_backend() == "numba":
        from . import _kernels_numba
        return _kernels_numba
    from . import _kernels_numpy
    return _kernels_numpy
