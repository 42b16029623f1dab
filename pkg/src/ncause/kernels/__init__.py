"""Minimal-sufficient-set kernels.

The compiled Cython module is used when it was built; otherwise the
pure-Python implementation is selected at import.  Both expose
``agreement_masks`` and ``minimal_sufficient`` with identical results.
"""

from array import array

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

BACKENDS = {"pure": _pure}
if _fast is not None:
    BACKENDS["fast"] = _fast

MAX_ARITY = _pure.MAX_ARITY

_active = _fast if _fast is not None else _pure


def backend() -> str:
    return "fast" if _active is _fast and _fast is not None else "pure"


def use_backend(name: str) -> None:
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available; have {sorted(BACKENDS)}") from None


def as_table(codes) -> array:
    return codes if isinstance(codes, array) and codes.typecode == "i" else array("i", codes)


def agreement_masks(table, actual, radix, target):
    return _active.agreement_masks(as_table(table), list(actual), radix, target)


def minimal_sufficient(table, actual, radix, target):
    return _active.minimal_sufficient(as_table(table), list(actual), radix, target)
