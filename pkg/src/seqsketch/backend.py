"""Kernel backend selection.

The compiled extension is preferred when its import succeeds; otherwise the
numpy fallback takes over.  Both expose the same ``accumulate_signs``
contract and are tested for integer-exact agreement.
"""

from __future__ import annotations

from seqsketch import _pykernels
from seqsketch.errors import ParameterError

try:
    from seqsketch import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_BACKENDS = {"python": _pykernels}
if _kernels is not None:
    _BACKENDS["cython"] = _kernels

#: Name of the backend used when none is requested explicitly.
DEFAULT_BACKEND = "cython" if _kernels is not None else "python"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return DEFAULT_BACKEND


def get_backend(name: str | None = None):
    """Kernel module for ``name`` (default: the active backend)."""
    if name is None:
        name = DEFAULT_BACKEND
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ParameterError(
            f"unknown backend {name!r}; available: {available_backends()}"
        ) from None
