"""Kernel backend selection.

Prefers the compiled extension; set ``CLUSPAT_PURE=1`` to force the
pure-Python kernels.  The compiled tuple arithmetic works on machine words
with overflow checks, so each wrapper falls back to the pure version for
the rare call whose exponents leave that range, so results are identical
either way.
"""

import os

from . import _pure

if os.environ.get("CLUSPAT_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "speedups"


def _with_fallback(name):
    fast = getattr(_impl, name)
    slow = getattr(_pure, name)
    if fast is slow:
        return slow

    def run(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    run.__name__ = name
    return run


tuple_add = _with_fallback("tuple_add")
min_exponents = _with_fallback("min_exponents")
add_terms = _with_fallback("add_terms")
scale_terms = _with_fallback("scale_terms")
shift_terms = _with_fallback("shift_terms")
mul_terms = _with_fallback("mul_terms")
sub_scaled_inplace = _with_fallback("sub_scaled_inplace")
