"""Exact Kantor products, identity checks and classifications over Q.

Algebras are passed as JSON text in the library file format or as
"catalog:NAME"; results come back as parsed JSON or canonical text.
"""

import json

from . import _core
from ._core import KantorkitError

__all__ = [
    "KantorkitError",
    "error_kind",
    "catalog_names",
    "catalog",
    "catalog_selftest",
    "table",
    "kantor_square",
    "kantor_product",
    "identity_names",
    "check",
    "classify",
    "un_table",
    "witt",
]


def _source(algebra):
    if isinstance(algebra, dict):
        return json.dumps(algebra)
    return algebra


def error_kind(exc):
    """Error kind of a KantorkitError, e.g. "ParseError"."""
    return str(exc).split(":", 1)[0]


def catalog_names():
    return _core.catalog_names()


def catalog(name):
    return json.loads(_core.catalog_json(name))


def catalog_selftest(name):
    return _core.catalog_selftest(name)


def table(algebra, slot=""):
    return _core.table(_source(algebra), slot)


def kantor_square(algebra, u=None, right=False):
    """Kantor square as an algebra dict; u defaults to the symbolic vector."""
    return json.loads(_core.kantor_square(_source(algebra), u, right))


def kantor_product(algebra, first, second, u=None):
    return json.loads(_core.kantor_product(_source(algebra), first, second, u))


def identity_names():
    return _core.identity_names()


def check(algebra, identity, slots=()):
    """(holds, obstructions) for a built-in identity."""
    return _core.check(_source(algebra), identity, list(slots))


def classify(kind, algebra, fixed_u=None, max_depth=16):
    """kind is "poisson", "generic-poisson" or "postlie"."""
    return json.loads(_core.classify(kind, _source(algebra), fixed_u, max_depth))


def un_table(n, u=None):
    return json.loads(_core.un_table(n, u))


def witt(op, x, y, u, w, a="0", direct=False):
    """op is "star" or "curly"; elements are written like "L1 + 2*I-3"."""
    return _core.witt(op, x, y, u, w, a, direct)
