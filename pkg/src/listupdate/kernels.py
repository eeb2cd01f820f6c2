"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Set ``LISTUPDATE_PURE=1`` to
force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

MTF, TRANS, FC, MFM, MTP = (
    _pykernels.MTF, _pykernels.TRANS, _pykernels.FC, _pykernels.MFM, _pykernels.MTP,
)

_compiled = None
if os.environ.get("LISTUPDATE_PURE", "") in ("", "0"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` ('compiled', 'python' or None)."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def capacity(order, requests, dynamic: bool) -> int:
    cap = len(order)
    if dynamic and len(requests):
        cap = max(cap, max(requests) + 1)
    return cap


def serve(order, requests, rule, q=0, counts=None, dynamic=False, record=False, backend=None):
    """Run the serving loop; see :func:`listupdate._pykernels.serve`.

    ``counts`` (FC only) is grown to the id capacity and updated in place.
    """
    if counts is None:
        counts = []
    cap = capacity(order, requests, dynamic)
    if len(counts) < cap:
        counts.extend([0] * (cap - len(counts)))
    return get_backend(backend).serve(order, requests, rule, q, counts, dynamic, record)


def count_inversions(seq, backend=None) -> int:
    return get_backend(backend).count_inversions(seq)
