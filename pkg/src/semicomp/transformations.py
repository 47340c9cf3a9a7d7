"""Transformations of a finite point set and closure of generator sets.

A transformation of degree ``p`` is stored as its image sequence: point
``i`` goes to ``image[i]``. Composition follows the package convention,
``compose(x, y)`` is "apply x, then y".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ArgError, DegreeMismatch, SizeExceeded
from .table import CayleyTable, _trusted

__all__ = [
    "Transformation",
    "GenSet",
    "ClosureResult",
    "compose",
    "closure",
    "make_Tn_generators",
    "full_transformation_monoid",
    "is_permutation",
    "identity",
    "transposition",
    "cycle",
    "collapsing",
    "constant",
    "MAX_DEGREE",
]

MAX_DEGREE = 8


@dataclass(frozen=True)
class Transformation:
    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        p = len(image)
        if p < 1:
            raise ArgError("transformation degree must be positive")
        for i, v in enumerate(image):
            if not 0 <= v < p:
                raise ArgError(f"point {i} sent to {v}, outside [0, {p})")

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        return self.image[point]

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        return "[" + ",".join(map(str, self.image)) + "]"


def identity(p: int) -> Transformation:
    return Transformation(tuple(range(p)))


def transposition(p: int, a: int = 0, b: int = 1) -> Transformation:
    img = list(range(p))
    img[a], img[b] = img[b], img[a]
    return Transformation(tuple(img))


def cycle(p: int) -> Transformation:
    """The full cycle ``i -> i+1 mod p``."""
    return Transformation(tuple((i + 1) % p for i in range(p)))


def collapsing(p: int, src: int = 0, dst: int = 1) -> Transformation:
    """Send ``src`` to ``dst`` and fix every other point."""
    img = list(range(p))
    img[src] = dst
    return Transformation(tuple(img))


def constant(p: int, value: int) -> Transformation:
    return Transformation((value,) * p)


def compose(x: Transformation, y: Transformation) -> Transformation:
    """Apply ``x`` first, then ``y``."""
    if x.degree != y.degree:
        raise DegreeMismatch(f"degrees {x.degree} and {y.degree} differ")
    yi = y.image
    return Transformation(tuple(yi[v] for v in x.image))


def is_permutation(t: Transformation) -> bool:
    return len(set(t.image)) == t.degree


@dataclass(frozen=True)
class GenSet:
    """Transformations of a common degree, in a fixed order."""

    degree: int
    gens: tuple

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Transformation) else Transformation(g)
                     for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ArgError("a generator set needs at least one transformation")
        for g in gens:
            if g.degree != self.degree:
                raise DegreeMismatch(f"generator {g} does not have degree {self.degree}")

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.gens)) != len(self.gens)

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True, eq=False)
class ClosureResult:
    """Elements reachable from a generator set, with their composition table.

    ``elements`` lists the generators first (in input order, duplicates
    dropped), then everything else in breadth-first discovery order.
    ``gen_indices[k]`` is the element index of input generator ``k``.
    """

    elements: tuple
    table: CayleyTable
    gen_indices: tuple
    images: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return self.images.shape[1]

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, t: Transformation) -> int:
        return self._index[t.image]

    def __contains__(self, t):
        return isinstance(t, Transformation) and t.image in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {e.image: i for i, e in enumerate(self.elements)}
            self.__dict__["_idx"] = idx
        return idx

    def generators(self) -> GenSet:
        return GenSet(self.degree, tuple(self.elements[i] for i in self.gen_indices))


class _KeyIndex:
    """Exact map from image rows to element indices."""

    def __init__(self, p):
        self.p = p
        self.int_keys = p ** p < 2 ** 62
        if self.int_keys:
            self.powers = np.array([p ** k for k in range(p)], dtype=np.int64)
        self.lookup = {}

    def keys(self, rows):
        if self.int_keys:
            return (rows @ self.powers).tolist()
        rows = np.ascontiguousarray(rows, dtype=np.int64)
        return [r.tobytes() for r in rows]


def _row_label(row):
    return "[" + ",".join(map(str, row)) + "]"


def closure(g: GenSet, max_size: Optional[int] = None, allow_large: bool = False) -> ClosureResult:
    """Breadth-first closure of a generator set under composition.

    Elements are processed in discovery order and multiplied on the right
    by every generator; the full table is then filled from all pairwise
    products. Raises :class:`SizeExceeded` once more than ``max_size``
    elements appear (default ``degree**degree``). Degrees above
    ``MAX_DEGREE`` need ``allow_large=True``.
    """
    p = g.degree
    if p > MAX_DEGREE and not allow_large:
        raise ArgError(f"degree {p} exceeds {MAX_DEGREE}; pass allow_large=True")
    cap = max_size if max_size is not None else p ** p

    G = np.array([t.image for t in g.gens], dtype=np.int64)
    index = _KeyIndex(p)
    rows = []
    gen_indices = []
    for key, row in zip(index.keys(G), G):
        if key not in index.lookup:
            index.lookup[key] = len(rows)
            rows.append(row)
        gen_indices.append(index.lookup[key])
    if len(rows) > cap:
        raise SizeExceeded(cap)

    k = len(G)
    frontier = np.array(rows)
    kk = np.arange(k)[None, :, None]
    while len(frontier):
        # prods[i, j] = frontier[i] then G[j]
        prods = G[kk, frontier[:, None, :]].reshape(-1, p)
        start = len(rows)
        for key, row in zip(index.keys(prods), prods):
            if key not in index.lookup:
                index.lookup[key] = len(rows)
                rows.append(row)
                if len(rows) > cap:
                    raise SizeExceeded(cap)
        frontier = np.array(rows[start:]).reshape(-1, p)

    E = np.array(rows, dtype=np.int64).reshape(-1, p)
    m = len(E)
    table = np.empty((m, m), dtype=np.int64)
    lookup = index.lookup
    if index.int_keys:
        ekeys = E @ index.powers
        order = np.argsort(ekeys)
        sorted_keys = ekeys[order]
    chunk = max(1, (1 << 22) // max(1, m * p))
    mm = np.arange(m)[None, :, None]
    for lo in range(0, m, chunk):
        hi = min(m, lo + chunk)
        # block[a, j] = E[lo + a] then E[j]
        block = E[mm, E[lo:hi][:, None, :]].reshape(-1, p)
        if index.int_keys:
            bk = block @ index.powers
            table[lo:hi] = order[np.searchsorted(sorted_keys, bk)].reshape(hi - lo, m)
        else:
            table[lo:hi] = np.array([lookup[key] for key in index.keys(block)]).reshape(hi - lo, m)

    E.setflags(write=False)
    elements = tuple(Transformation(tuple(r)) for r in E.tolist())
    labels = [_row_label(r) for r in E.tolist()]
    return ClosureResult(elements, _trusted(table, labels), tuple(gen_indices), E)


def make_Tn_generators(n: int) -> GenSet:
    """Transposition, full cycle and one collapsing map on ``n`` points."""
    if n < 1:
        raise ArgError("n must be positive")
    if n == 1:
        return GenSet(1, (identity(1),))
    if n == 2:
        return GenSet(2, (transposition(2), collapsing(2)))
    return GenSet(n, (transposition(n), cycle(n), collapsing(n)))


def full_transformation_monoid(n: int, allow_large: bool = False) -> ClosureResult:
    """All ``n**n`` self-maps of ``n`` points."""
    return closure(make_Tn_generators(n), allow_large=allow_large)
