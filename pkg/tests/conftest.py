"""Shared helpers: cached algebra construction for the whole suite."""
from __future__ import annotations

from functools import lru_cache

from kuls import GF, FamilySpec, build_table, complete, family


@lru_cache(maxsize=None)
def _table(name, items, p, e):
    spec = FamilySpec(name, dict(items), GF(p, e))
    return build_table(complete(family(spec)))


def make_table(name, gf=(2, 1), **params):
    """A completed AlgebraTable for one family instance, memoized."""
    p, e = gf if isinstance(gf, tuple) else (gf, 1)
    return _table(name, tuple(sorted(params.items())), p, e)
