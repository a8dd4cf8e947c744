"""Batch-kernel backend selection.

The hot path (bulk block encryption for the analysis suites and the
benchmark) has two interchangeable implementations: a numba-jitted loop
and a vectorized pure-numpy fallback.  Both compute bit-identical results.

Selection order:
  1. explicit ``name`` argument to get_backend()
  2. the EFPE_BACKEND environment variable ("numba" or "numpy")
  3. numba if it imports, else numpy
"""

import importlib
import os

ENV_VAR = "EFPE_BACKEND"
_BACKEND_MODULES = {
    "numba": "efpe._numba_backend",
    "numpy": "efpe._numpy_backend",
}
_cache: dict[str, object] = {}


def _import_backend(name: str):
    if name not in _BACKEND_MODULES:
        raise ValueError(f"unknown backend {name!r}; expected one of {sorted(_BACKEND_MODULES)}")
    if name not in _cache:
        _cache[name] = importlib.import_module(_BACKEND_MODULES[name])
    return _cache[name]


def get_backend(name: str | None = None):
    """Resolve a kernel backend module (see module docstring for the order)."""
    if name is None:
        name = os.environ.get(ENV_VAR, "").strip().lower() or None
    if name is not None:
        return _import_backend(name)
    try:
        return _import_backend("numba")
    except ImportError:
        return _import_backend("numpy")


def available_backends() -> list[str]:
    """Names of backends that import cleanly on this machine."""
    out = []
    for name in _BACKEND_MODULES:
        try:
            _import_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out
