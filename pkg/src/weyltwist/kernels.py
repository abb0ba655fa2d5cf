"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Setting ``WEYLTWIST_PURE_PYTHON=1`` forces the fallback.
"""

import importlib
import os

__all__ = ["BACKEND", "twisted_orbit_labels", "class_statistics", "load_backend"]


def load_backend(name):
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "cython":
        return importlib.import_module("weyltwist._ckernels")
    if name == "python":
        return importlib.import_module("weyltwist._pykernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if os.environ.get("WEYLTWIST_PURE_PYTHON", "") not in ("", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()
twisted_orbit_labels = _impl.twisted_orbit_labels
class_statistics = _impl.class_statistics
