"""One-way influence, direct products and two-level wreath products.

In a wreath product the top component acts on its coordinate on its own,
while what the bottom component does depends on the top coordinate. Deeper
hierarchies come from applying :func:`wreath_product` repeatedly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeExceeded
from .morphisms import DivisionResult, divides
from .table import CayleyTable, _trusted
from .transformations import ClosureResult, GenSet, Transformation, closure, identity

__all__ = [
    "InfluenceRelation",
    "influence_relation",
    "direct_product",
    "wreath_product",
    "cascade_emulates",
    "DEFAULT_PRODUCT_CAP",
]

DEFAULT_PRODUCT_CAP = 10_000


@dataclass(frozen=True, eq=False)
class InfluenceRelation:
    """``influences[y, x]`` is True when following ``x`` by ``y`` changes it.

    ``one_way`` lists pairs ``(weak, strong)`` where the strong element
    moves the weak one but not the other way round.
    """

    order: int
    influences: np.ndarray
    one_way: tuple


def influence_relation(t: CayleyTable) -> InfluenceRelation:
    T = t.table
    idx = np.arange(t.order)
    moved = T != idx[:, None]          # moved[x, y]: x.y != x
    inf = moved.T.copy()
    inf.setflags(write=False)
    one_way = tuple((int(x), int(y)) for y, x in zip(*np.nonzero(inf)) if not inf[x, y])
    return InfluenceRelation(t.order, inf, tuple(sorted(one_way)))


def direct_product(S: CayleyTable, T: CayleyTable, max_order: int = DEFAULT_PRODUCT_CAP) -> CayleyTable:
    """Componentwise product; element ``(s, t)`` has index ``s * |T| + t``."""
    n, m = S.order, T.order
    if n * m > max_order:
        raise SizeExceeded(max_order)
    s = np.repeat(np.arange(n), m)
    t = np.tile(np.arange(m), n)
    table = S.table[s[:, None], s[None, :]] * m + T.table[t[:, None], t[None, :]]
    labels = [f"({S.labels[a]},{T.labels[b]})" for a, b in zip(s, t)]
    return _trusted(table, labels)


def _monoid_gens(c: ClosureResult):
    gens = [c.elements[i] for i in dict.fromkeys(c.gen_indices)]
    ident = identity(c.degree)
    if ident not in c:
        gens.append(ident)
    return gens


def wreath_product(bottom: ClosureResult, top: ClosureResult, max_size=None,
                   allow_large: bool = False) -> ClosureResult:
    """Cascade of ``bottom`` (on X) under ``top`` (on Y), acting on X x Y.

    Point ``(x, y)`` has index ``x * |Y| + y``. Generators are the top
    generators lifted as ``(x, y) -> (x, t(y))`` and, for every ``y0`` and
    bottom generator ``s``, the map applying ``s`` to ``x`` only where
    ``y == y0``. Identities are adjoined to components that lack one.
    """
    nx, ny = bottom.degree, top.degree
    xs = np.repeat(np.arange(nx), ny)
    ys = np.tile(np.arange(ny), nx)
    gens = []
    for t in _monoid_gens(top):
        gens.append(Transformation(tuple((xs * ny + np.asarray(t.image)[ys]).tolist())))
    for y0 in range(ny):
        for s in _monoid_gens(bottom):
            newx = np.where(ys == y0, np.asarray(s.image)[xs], xs)
            gens.append(Transformation(tuple((newx * ny + ys).tolist())))
    return closure(GenSet(nx * ny, tuple(gens)), max_size=max_size, allow_large=allow_large)


def cascade_emulates(target: CayleyTable, cascade: ClosureResult, budget=None) -> DivisionResult:
    """Does ``target`` divide the semigroup of ``cascade``?"""
    return divides(target, cascade.table, budget=budget)
