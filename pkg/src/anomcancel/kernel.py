"""Pick the compiled scan kernel when it is importable, else the pure-Python one.

Set ``AC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernel_py

if os.environ.get("AC_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernel as _compiled
    except ImportError:
        _compiled = None

# products m * n' stay below b**(d1+d2); keep clear of int64 overflow
INT64_SAFE = 2**62


def compiled_available() -> bool:
    return _compiled is not None


def implementation() -> str:
    return "cython" if _compiled is not None else "python"


def scan(b, d1, d2, m_lo, m_hi, force=None):
    """Dispatch to a kernel. ``force`` may be ``"python"`` or ``"cython"``."""
    fits = b ** (d1 + d2) < INT64_SAFE
    if force == "python":
        return _kernel_py.scan(b, d1, d2, m_lo, m_hi)
    if force == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        if not fits:
            raise OverflowError("scope too large for the 64-bit kernel")
        return _compiled.scan(b, d1, d2, m_lo, m_hi)
    if _compiled is not None and fits:
        return _compiled.scan(b, d1, d2, m_lo, m_hi)
    return _kernel_py.scan(b, d1, d2, m_lo, m_hi)
