# SPDX-License-Identifier: MIT
"""Certified ideal-class-monoid bounds for quadratic and Cappell-Shaneson cubic orders.

The top-level entry points are ``cs_bound(m)`` and ``quad_bound(d, f)``;
``icmbound.oracle`` holds the exact brute force for imaginary quadratic orders.
Both are resolved lazily so ``icmbound --help`` never imports sympy.
"""

from importlib.metadata import PackageNotFoundError, version
from typing import Any

__all__ = ["__version__", "cs_bound", "quad_bound"]

try:
    __version__ = version("icmbound")
except PackageNotFoundError:
    __version__ = "unknown"


def __getattr__(name: str) -> Any:
    if name in ("cs_bound", "quad_bound"):
        from . import bounds

        return getattr(bounds, name)
    raise AttributeError(f"module 'icmbound' has no attribute {name!r}")
