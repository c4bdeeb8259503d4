"""Finite poset toolkit: dimension, breadth, Kuratowski-index bounds, and
free-set search over set mappings."""

try:
    from ._posetlab import *  # noqa: F401,F403
    from . import _posetlab as _core
except ImportError:  # pragma: no cover - build-tree layout
    from _posetlab import *  # noqa: F401,F403
    import _posetlab as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")] + [
    "spencer_exponent",
    "e_value",
]


def spencer_exponent(n, r):
    """Largest admissible realizer exponent, as a Python int."""
    return int(_core.spencer_exponent_str(n, r))


def e_value(n, r):
    """E(n, r) as a Python int (always a power of two)."""
    return int(_core.e_str(n, r))
