"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module. Set ``CONERING_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("CONERING_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        pass

divides = _impl.divides
mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
normal_form_terms = _impl.normal_form_terms
minimalize = _impl.minimalize
hilbert_numerator = _impl.hilbert_numerator

__all__ = [
    "BACKEND",
    "divides",
    "mono_mul",
    "mono_div",
    "mono_lcm",
    "normal_form_terms",
    "minimalize",
    "hilbert_numerator",
]
