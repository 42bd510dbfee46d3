"""Exact s0-level filtration machinery for W(E10).

Thin wrapper over the native _core module: double-coset level store, Salem
radius catalog, primitivity marking, and Hilbert-metric displacements.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    # in-tree layout: _core sits in the build directory on sys.path
    from _core import *  # noqa: F401,F403
