"""Composition tables of finite semigroups.

A table of order ``n`` stores the composite of every ordered pair of
elements. ``table[x, y]`` is "x happens, then y happens"; every module in
this package reads products that way.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import ArgError, AssocError, RangeError

__all__ = [
    "CayleyTable",
    "ElementInfo",
    "validate_table",
    "check_associativity",
    "make_flip_flop",
    "make_cyclic",
    "make_trivial",
    "make_left_zero",
    "element_info",
    "identity_element",
    "is_subsemigroup",
    "generated_subsemigroup",
    "generating_set",
    "monogenic",
    "subtable",
    "right_regular_representation",
]


def _default_labels(n):
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """An associative composition table with optional display labels.

    Build instances with :func:`validate_table`; the array is marked
    read-only so a table can be shared freely once constructed.
    """

    table: np.ndarray
    labels: tuple

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @cached_property
    def rows(self) -> list:
        # plain nested lists index much faster than numpy scalars in tight loops
        return self.table.tolist()

    def __call__(self, x, y):
        return int(self.table[x, y])

    def label(self, i) -> str:
        return self.labels[i]

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.table.tobytes(), self.labels))

    def __repr__(self):
        return f"CayleyTable(order={self.order}, labels={list(self.labels)})"

    def pretty(self) -> str:
        w = max(len(s) for s in self.labels)
        head = " " * w + " | " + " ".join(s.rjust(w) for s in self.labels)
        lines = [head, "-" * len(head)]
        for x, row in enumerate(self.rows):
            lines.append(self.labels[x].rjust(w) + " | "
                         + " ".join(self.labels[v].rjust(w) for v in row))
        return "\n".join(lines)


def _check_labels(labels, n):
    if labels is None:
        return _default_labels(n)
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise ArgError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ArgError("labels must be pairwise distinct")
    return labels


def _as_square(order, entries):
    if order < 1:
        raise ArgError("order must be positive")
    arr = np.asarray(entries, dtype=np.int64)
    if arr.size != order * order:
        raise ArgError(f"expected {order * order} entries, got {arr.size}")
    arr = arr.reshape(order, order)
    bad = (arr < 0) | (arr >= order)
    if bad.any():
        r, c = map(int, np.argwhere(bad)[0])
        raise RangeError(r, c, int(arr[r, c]), order)
    return arr


def _freeze(arr, labels) -> CayleyTable:
    arr = np.array(arr, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return CayleyTable(arr, labels)


def _trusted(arr, labels=None) -> CayleyTable:
    """Wrap a table that is associative by construction (closures, products)."""
    arr = np.asarray(arr, dtype=np.int64)
    return _freeze(arr, _check_labels(labels, arr.shape[0]))


def validate_table(order: int, entries, labels=None, method: str = "naive") -> CayleyTable:
    """Check range and associativity of a row-major table and freeze it.

    Raises :class:`RangeError` for the first out-of-range entry and
    :class:`AssocError` for the lexicographically first violating triple.
    """
    arr = _as_square(order, entries)
    labels = _check_labels(labels, order)
    witness = check_associativity(arr, method=method)
    if witness is not None:
        if method != "naive":
            witness = check_associativity(arr, method="naive")
        raise AssocError(*witness)
    return _freeze(arr, labels)


def _array(table):
    if isinstance(table, CayleyTable):
        return table.table
    return np.asarray(table, dtype=np.int64)


def _naive_witness(T):
    n = T.shape[0]
    if n ** 3 <= 1 << 22:
        left = T[T]                                   # left[x,y,z] = (xy)z
        right = T[np.arange(n)[:, None, None], T[None, :, :]]  # x(yz)
        bad = left != right
        if not bad.any():
            return None
        x, y, z = np.unravel_index(int(np.argmax(bad)), bad.shape)
        return int(x), int(y), int(z)
    for x in range(n):
        bad = T[T[x]] != T[x][T]
        if bad.any():
            y, z = divmod(int(np.argmax(bad)), n)
            return x, y, z
    return None


def _light_witness(T, generators=None):
    # Light's test: checking (xg)z = x(gz) for g in a generating set suffices
    if generators is None:
        generators = generating_set(T)
    best = None
    for g in generators:
        bad = T[T[:, g], :] != T[:, T[g, :]]
        if bad.any():
            x, z = divmod(int(np.argmax(bad)), T.shape[0])
            w = (x, int(g), z)
            if best is None or w < best:
                best = w
    return best


def check_associativity(table, method: str = "naive", generators=None):
    """Return ``None`` if associative, else a violating triple ``(x, y, z)``.

    ``method="naive"`` scans all n**3 triples and returns the lexicographic
    minimum. ``method="light"`` runs Light's test over a generating set;
    its verdict matches the naive scan but the witness may differ.
    """
    T = _array(table)
    if method == "naive":
        return _naive_witness(T)
    if method == "light":
        return _light_witness(T, generators)
    raise ArgError(f"unknown associativity method {method!r}")


def make_flip_flop() -> CayleyTable:
    """The 1-bit memory: ``r`` reads, ``s0``/``s1`` overwrite the bit."""
    return validate_table(3, [0, 1, 2,
                              1, 1, 2,
                              2, 1, 2], labels=("r", "s0", "s1"))


def make_cyclic(n: int) -> CayleyTable:
    """Addition modulo ``n`` (an ``n``-position counter)."""
    if n < 1:
        raise ArgError("cyclic order must be positive")
    i = np.arange(n)
    return _trusted((i[:, None] + i[None, :]) % n, [f"+{k}" for k in range(n)])


def make_trivial() -> CayleyTable:
    return _trusted([[0]], ["1"])


def make_left_zero(n: int = 2) -> CayleyTable:
    """``xy = x`` for all x, y."""
    if n < 1:
        raise ArgError("order must be positive")
    return _trusted(np.repeat(np.arange(n)[:, None], n, axis=1))


@dataclass(frozen=True)
class ElementInfo:
    index: int
    is_idempotent: bool
    is_left_identity: bool
    is_right_identity: bool

    @property
    def is_identity(self) -> bool:
        return self.is_left_identity and self.is_right_identity


def element_info(table: CayleyTable) -> list:
    T = _array(table)
    n = T.shape[0]
    idx = np.arange(n)
    diag = T[idx, idx] == idx
    left = (T == idx[None, :]).all(axis=1)    # x.y = y for all y
    right = (T == idx[:, None]).all(axis=0)   # y.x = y for all y
    return [ElementInfo(i, bool(diag[i]), bool(left[i]), bool(right[i])) for i in range(n)]


def identity_element(table):
    """Index of the two-sided identity, or ``None``."""
    for info in element_info(table):
        if info.is_identity:
            return info.index
    return None


def is_subsemigroup(table, subset) -> bool:
    T = _array(table)
    sub = np.fromiter(set(subset), dtype=np.int64)
    if sub.size == 0:
        return True
    mask = np.zeros(T.shape[0], dtype=bool)
    mask[sub] = True
    return bool(mask[T[np.ix_(sub, sub)]].all())


def _close_mask(T, mask):
    count = int(mask.sum())
    while True:
        idx = np.flatnonzero(mask)
        mask = mask.copy()
        mask[T[np.ix_(idx, idx)].ravel()] = True
        new = int(mask.sum())
        if new == count:
            return mask
        count = new


def generated_subsemigroup(table, seeds: Iterable[int]) -> tuple:
    """Sorted element indices of the subsemigroup generated by ``seeds``."""
    T = _array(table)
    mask = np.zeros(T.shape[0], dtype=bool)
    mask[list(seeds)] = True
    if not mask.any():
        return ()
    return tuple(int(i) for i in np.flatnonzero(_close_mask(T, mask)))


def generating_set(table) -> tuple:
    """A small generating sequence found greedily.

    Each step adds the element whose inclusion grows the generated
    subsemigroup the most (lowest index on ties), so every generator lies
    outside the subsemigroup generated by its predecessors.
    """
    T = _array(table)
    n = T.shape[0]
    covered = np.zeros(n, dtype=bool)
    gens = []
    while not covered.all():
        best, best_size, best_mask = -1, -1, None
        for c in np.flatnonzero(~covered):
            trial = covered.copy()
            trial[c] = True
            trial = _close_mask(T, trial)
            size = int(trial.sum())
            if size > best_size:
                best, best_size, best_mask = int(c), size, trial
                if size == n:
                    break
        gens.append(best)
        covered = best_mask
    return tuple(gens)


def monogenic(table, x: int) -> tuple:
    """``(index, period)`` of the element: smallest i, p with x^(i+p) = x^i."""
    if isinstance(table, CayleyTable):
        rows = table.rows
    elif isinstance(table, list):
        rows = table
    else:
        rows = _array(table).tolist()
    seen = {}
    p, k = x, 1
    while p not in seen:
        seen[p] = k
        p = rows[p][x]
        k += 1
    i = seen[p]
    return i, k - i


def subtable(table: CayleyTable, subset) -> tuple:
    """Restrict ``table`` to a closed subset.

    Returns ``(sub, elements)`` where ``elements[i]`` is the index in the
    parent table of element ``i`` of ``sub``.
    """
    elements = tuple(sorted(set(int(s) for s in subset)))
    if not is_subsemigroup(table, elements):
        raise ArgError("subset is not closed under composition")
    T = _array(table)
    pos = np.full(T.shape[0], -1, dtype=np.int64)
    pos[list(elements)] = np.arange(len(elements))
    sub = pos[T[np.ix_(elements, elements)]]
    labels = [table.labels[e] for e in elements] if isinstance(table, CayleyTable) else None
    return _trusted(sub, labels), elements


def right_regular_representation(table: CayleyTable, adjoin_identity=None):
    """Represent each element ``y`` as the map ``p -> p.y`` on the elements.

    With an adjoined identity an extra point ``n`` stands for the ground
    state and ``y`` sends it to ``y``, which makes the representation
    faithful. ``adjoin_identity=None`` adjoins only when the table has no
    two-sided identity; ``False`` never adjoins (and may collapse
    elements), ``True`` always does.

    Returns ``(genset, images)`` where ``images[y]`` is the transformation
    of element ``y`` (``genset.gens`` lists the same transformations).
    """
    from .transformations import GenSet, Transformation

    T = _array(table)
    n = T.shape[0]
    if adjoin_identity is None:
        adjoin = identity_element(table) is None
    else:
        adjoin = bool(adjoin_identity)
    images = []
    for y in range(n):
        col = T[:, y].tolist()
        if adjoin:
            col.append(y)
        images.append(Transformation(tuple(col)))
    images = tuple(images)
    return GenSet(len(images[0].image), images), images
