"""Backend selection for the hot kernels.

The compiled extension is used when importable; setting ``FINDUAL_PUREPY=1``
forces the numpy fallback. ``BACKEND`` names the active one.
"""
import os

from . import _purepy

if os.environ.get("FINDUAL_PUREPY") == "1":
    _impl = _purepy
    BACKEND = "purepy"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _purepy
        BACKEND = "purepy"

box_table = _impl.box_table
tables_from_masks = _impl.tables_from_masks
residual_table = _impl.residual_table
residuation_violation = _impl.residuation_violation
distributivity_violation = _impl.distributivity_violation
box_meet_violation = _impl.box_meet_violation
conjugate_violation = _impl.conjugate_violation


def implementations():
    """Both backends that can be loaded, keyed by name (for benchmarks/tests)."""
    out = {"purepy": _purepy}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    return out
