"""Backend selection for the search kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is.  ``use_backend`` switches explicitly (tests and the benchmark run
both).
"""

from __future__ import annotations

from contextlib import contextmanager

from esnkit import _pykernels

try:
    from esnkit import _ckernels
except ImportError:  # extension not built
    _ckernels = None

UNDEF = _pykernels.UNDEF
UNKNOWN = _pykernels.UNKNOWN

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["native"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def backend_name() -> str:
    return "native" if _active is _ckernels else "python"


def available() -> list[str]:
    return sorted(BACKENDS)


def set_backend(name: str) -> None:
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available (have {available()})") from None


@contextmanager
def use_backend(name: str):
    previous = backend_name()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def assoc_ok(tab, n):
    return _active.assoc_ok(tab, n)


def search_tables(n, lms=False):
    return _active.search_tables(n, lms)


def unary_ok(tab, u, n, right=False, restriction=False):
    return _active.unary_ok(tab, u, n, right, restriction)


def search_unary(tab, n, right=False, restriction=False):
    return _active.search_unary(tab, n, right, restriction)


def unique_pseudo_inverses(tab, n):
    return _active.unique_pseudo_inverses(tab, n)
