"""Picks the compiled kernels when the extension was built, otherwise the
pure-Python ones.  Set ``NEUTRA_KERNELS=python`` to force the fallback."""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if os.environ.get("NEUTRA_KERNELS", "").lower() != "python":
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py

# the compiled loops use 64-bit masks; bigger carriers use Python ints
_COMPILED_LIMIT = 63


def _pick(n):
    return _impl if n <= _COMPILED_LIMIT else _kernels_py


def closed_subsets(n, need, bad, add, zero_mask):
    return _pick(n).closed_subsets(n, need, bad, add, zero_mask)


def additive_closure(n, mask, add):
    return _pick(n).additive_closure(n, mask, add)


def min_generating(n, cover, add, forced, candidates, target):
    return _pick(n).min_generating(n, cover, add, forced, candidates, target)


def enumerate_maps(nd, nc, cod_act, cod_add, constraints, fixed):
    # positions and images are indices, never masks, so no size limit
    return _impl.enumerate_maps(nd, nc, cod_act, cod_add, constraints, fixed)
