"""Structure-preserving maps between composition tables.

A map ``phi`` from ``S`` to ``T`` is a morphism when
``phi[S(x, y)] == T(phi[x], phi[y])`` for every pair. The searches here
fix images for a small generating sequence of the source and let the
equation force everything else, backtracking on the first clash.

Every search draws from a :class:`SearchBudget`. Running out yields
``Verdict.UNKNOWN``; a ``NO`` is only ever reported after the whole
search space was covered.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import ArgError, RangeError
from .table import CayleyTable, generated_subsemigroup, generating_set, monogenic, subtable

__all__ = [
    "Verdict",
    "UNKNOWN",
    "SearchBudget",
    "Morphism",
    "MorphismClass",
    "DivisionResult",
    "InterpretationResult",
    "check_morphism",
    "find_embeddings",
    "find_morphisms",
    "divides",
    "find_interpretation",
    "DEFAULT_MAX_NODES",
]

DEFAULT_MAX_NODES = 10_000_000
INTERPRET_MAX_DOMAIN = 6
INTERPRET_MAX_ORDER = 12


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


UNKNOWN = Verdict.UNKNOWN


@dataclass
class SearchBudget:
    """Node allowance shared by every search it is passed to.

    One node is one attempted extension of a partial assignment. ``used``
    accumulates across calls, so a single budget can cap a whole pipeline.
    """

    max_nodes: int = DEFAULT_MAX_NODES
    used: int = 0

    @property
    def remaining(self) -> int:
        return max(0, self.max_nodes - self.used)


def _budget(budget) -> SearchBudget:
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(int(budget))


@dataclass(frozen=True, eq=False)
class Morphism:
    source: CayleyTable
    target: CayleyTable
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.source.order:
            raise ArgError(f"map has {len(self.map)} entries, source has order {self.source.order}")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.map == other.map and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.map)

    def then(self, other: "Morphism") -> "Morphism":
        """Apply ``self`` first, then ``other``."""
        return Morphism(self.source, other.target, tuple(other.map[v] for v in self.map))

    def describe(self) -> list:
        s, t = self.source.labels, self.target.labels
        return [f"{s[x]}->{t[v]}" for x, v in enumerate(self.map)]


@dataclass(frozen=True)
class MorphismClass:
    is_morphism: bool
    violation: Optional[tuple]
    injective: bool
    surjective: bool

    @property
    def is_embedding(self) -> bool:
        return self.is_morphism and self.injective

    @property
    def is_isomorphism(self) -> bool:
        return self.is_morphism and self.injective and self.surjective


def check_morphism(m: Morphism) -> MorphismClass:
    """Classify a map; ``violation`` is the first failing pair in (x, y) order."""
    n, k = m.source.order, m.target.order
    for x, v in enumerate(m.map):
        if not 0 <= v < k:
            raise RangeError(x, 0, v, k)
    phi = np.asarray(m.map, dtype=np.int64)
    lhs = phi[m.source.table]
    rhs = m.target.table[phi[:, None], phi[None, :]]
    bad = lhs != rhs
    violation = None
    if bad.any():
        violation = tuple(int(i) for i in divmod(int(np.argmax(bad)), n))
    images = set(m.map)
    return MorphismClass(violation is None, violation, len(images) == n, len(images) == k)


class _Exhausted(Exception):
    pass


class _Engine:
    """Depth-first assignment of generator images with product propagation."""

    def __init__(self, S_rows, T_rows, gens, injective, surjective, limit):
        self.S = S_rows
        self.T = T_rows
        self.n = len(S_rows)
        self.m = len(T_rows)
        self.gens = list(gens)
        self.injective = injective
        self.surjective = surjective
        self.limit = limit
        self.tsig = [monogenic(T_rows, c) for c in range(self.m)]
        self.cands = [self._candidates(g) for g in self.gens]

    def _candidates(self, g):
        gi, gp = monogenic(self.S, g)
        out = []
        for c, (ci, cp) in enumerate(self.tsig):
            if self.injective:
                ok = (ci, cp) == (gi, gp)
            else:
                # g^(gi+gp) = g^gi must survive in the image
                ok = ci <= gi and gp % cp == 0
            if ok:
                out.append(c)
        return out

    def _reset(self, max_nodes):
        self.phi = [-1] * self.n
        self.owner = [-1] * self.m
        self.trail = []
        self.used = 0
        self.max_nodes = max_nodes
        self.found = []

    def _undo(self, mark):
        phi, owner, trail = self.phi, self.owner, self.trail
        while len(trail) > mark:
            z = trail.pop()
            owner[phi[z]] = -1
            phi[z] = -1

    def _assign(self, a, img):
        S, T, phi, owner, trail = self.S, self.T, self.phi, self.owner, self.trail
        inj = self.injective
        if inj and owner[img] != -1:
            return False
        phi[a] = img
        owner[img] = a
        trail.append(a)
        queue = [a]
        while queue:
            x = queue.pop()
            px = phi[x]
            Sx, Tpx = S[x], T[px]
            # elements appended during this loop are queued and will pair with x later
            for i in range(len(trail)):
                y = trail[i]
                py = phi[y]
                for z, v in ((Sx[y], Tpx[py]), (S[y][x], T[py][px])):
                    cur = phi[z]
                    if cur == -1:
                        if inj and owner[v] != -1:
                            return False
                        phi[z] = v
                        owner[v] = z
                        trail.append(z)
                        queue.append(z)
                    elif cur != v:
                        return False
        return True

    def _try(self, depth, c):
        """Attempt generator ``depth`` -> ``c``; True when the limit is reached."""
        if self.used >= self.max_nodes:
            raise _Exhausted
        self.used += 1
        mark = len(self.trail)
        if self._assign(self.gens[depth], c) and self._dfs(depth + 1):
            return True
        self._undo(mark)
        return False

    def _dfs(self, depth):
        if depth == len(self.gens):
            if self.surjective and len(set(self.phi)) != self.m:
                return False
            self.found.append((tuple(self.phi), self.used))
            return self.limit is not None and len(self.found) >= self.limit
        if self.phi[self.gens[depth]] != -1:
            return self._dfs(depth + 1)
        owner = self.owner
        for c in self.cands[depth]:
            if self.injective and owner[c] != -1:
                continue
            if self._try(depth, c):
                return True
        return False

    def run(self, max_nodes):
        """Whole search. Returns ``(found, used, exhausted)``."""
        self._reset(max_nodes)
        try:
            self._dfs(0)
        except _Exhausted:
            return self.found, self.used, True
        return self.found, self.used, False

    def run_partition(self, c, max_nodes):
        """Subtree where the first generator maps to ``c``."""
        self._reset(max_nodes)
        try:
            self._try(0, c)
        except _Exhausted:
            return self.found, self.used, True
        return self.found, self.used, False


def _partition_job(args):
    engine, c, max_nodes = args
    return engine.run_partition(c, max_nodes)


def _merge_partitions(parts, max_nodes, limit):
    """Replay partition results in sequential order.

    Each partition ran alone with the whole allowance; offsetting its node
    stamps by the nodes spent on earlier partitions reproduces exactly what
    a single sequential run would have found and where it would have
    stopped.
    """
    found, cum = [], 0
    for part_found, part_used, part_exhausted in parts:
        for phi, stamp in part_found:
            if cum + stamp > max_nodes:
                return found, max_nodes, True
            found.append((phi, cum + stamp))
            if limit is not None and len(found) >= limit:
                return found, cum + stamp, False
        if part_exhausted or cum + part_used > max_nodes:
            return found, max_nodes, True
        cum += part_used
    return found, cum, False


def _search(S, T, *, injective, surjective, limit, budget, workers, generators):
    budget = _budget(budget)
    if limit is not None and limit < 1:
        raise ArgError("limit must be positive")
    if injective and S.order > T.order:
        return []
    if surjective and S.order < T.order:
        return []
    gens = tuple(generators) if generators is not None else generating_set(S)
    engine = _Engine(S.rows, T.rows, gens, injective, surjective, limit)
    allowance = budget.remaining
    if workers is None or workers <= 1 or len(engine.cands[0]) < 2:
        found, used, exhausted = engine.run(allowance)
    else:
        jobs = [(engine, c, allowance) for c in engine.cands[0]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_partition_job, jobs))
        found, used, exhausted = _merge_partitions(parts, allowance, limit)
    budget.used += used
    if exhausted:
        return UNKNOWN
    maps = sorted(phi for phi, _ in found)
    return [Morphism(S, T, phi) for phi in maps]


def find_embeddings(S: CayleyTable, T: CayleyTable, limit: Optional[int] = None,
                    budget=None, workers: int = 1, generators=None):
    """All injective morphisms ``S -> T`` (up to ``limit``), sorted by map.

    Returns a list of :class:`Morphism`, or ``UNKNOWN`` if the budget ran
    out first. With ``workers > 1`` the subtrees under each image of the
    first generator run in separate processes; the output is identical.
    """
    return _search(S, T, injective=True, surjective=False, limit=limit,
                   budget=budget, workers=workers, generators=generators)


def find_morphisms(S: CayleyTable, T: CayleyTable, require_surjective: bool = False,
                   limit: Optional[int] = None, budget=None, workers: int = 1,
                   generators=None):
    """Like :func:`find_embeddings` without injectivity."""
    return _search(S, T, injective=False, surjective=require_surjective, limit=limit,
                   budget=budget, workers=workers, generators=generators)


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of a division test.

    On ``YES``, ``subsemigroup`` lists the elements of the dividing table
    (in its own indexing) and ``morphism`` maps the restricted table onto
    the divided one.
    """

    verdict: Verdict
    subsemigroup: Optional[tuple] = None
    morphism: Optional[Morphism] = None

    def __bool__(self):
        return self.verdict is Verdict.YES


def divides(S: CayleyTable, T: CayleyTable, budget=None) -> DivisionResult:
    """Is ``S`` a homomorphic image of a subsemigroup of ``T``?

    If a subsemigroup maps onto ``S``, so does the subsemigroup generated
    by preimages of any generating sequence of ``S``; only subsets of
    ``T`` up to that size are therefore closed and tried, smallest first,
    each distinct subsemigroup once.
    """
    budget = _budget(budget)
    if S.order > T.order:
        return DivisionResult(Verdict.NO)
    if np.array_equal(S.table, T.table):
        ident = Morphism(S, S, range(S.order))
        return DivisionResult(Verdict.YES, tuple(range(T.order)), ident)

    emb = find_embeddings(S, T, limit=1, budget=budget)
    if emb is UNKNOWN:
        return DivisionResult(UNKNOWN)
    if emb:
        image = tuple(sorted(emb[0].map))
        sub, elements = subtable(T, image)
        pos = {e: i for i, e in enumerate(elements)}
        inverse = [0] * len(elements)
        for x, v in enumerate(emb[0].map):
            inverse[pos[v]] = x
        return DivisionResult(Verdict.YES, elements, Morphism(sub, S, inverse))

    rank = len(generating_set(S))
    seen = set()
    for size in range(1, rank + 1):
        for seeds in combinations(range(T.order), size):
            if budget.used >= budget.max_nodes:
                return DivisionResult(UNKNOWN)
            budget.used += 1
            U = generated_subsemigroup(T, seeds)
            if len(U) < S.order or U in seen:
                continue
            seen.add(U)
            sub, elements = subtable(T, U)
            pos = {e: i for i, e in enumerate(elements)}
            res = find_morphisms(sub, S, require_surjective=True, limit=1, budget=budget,
                                 generators=[pos[s] for s in seeds])
            if res is UNKNOWN:
                return DivisionResult(UNKNOWN)
            if res:
                return DivisionResult(Verdict.YES, elements, res[0])
    return DivisionResult(Verdict.NO)


@dataclass(frozen=True)
class InterpretationResult:
    """``decode[S(encode[x], encode[y])] == g[x][y]`` for all x, y on ``YES``."""

    verdict: Verdict
    encode: Optional[tuple] = None
    decode: Optional[tuple] = None

    def __bool__(self):
        return self.verdict is Verdict.YES


def find_interpretation(g, S: CayleyTable, budget=None) -> InterpretationResult:
    """Search an output encoding that makes ``S`` compute the operation ``g``.

    ``g`` is any binary operation on ``{0..a-1}`` given as an ``a x a``
    table; it need not be associative and ``encode`` need not be a
    morphism. Unconstrained decode entries are set to 0.
    """
    budget = _budget(budget)
    g = np.asarray(g, dtype=np.int64)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 1:
        raise ArgError("operation table must be square and nonempty")
    a, k = g.shape[0], S.order
    if a > INTERPRET_MAX_DOMAIN or k > INTERPRET_MAX_ORDER:
        raise ArgError(f"interpretation search is capped at |A| <= {INTERPRET_MAX_DOMAIN}"
                       f" and order <= {INTERPRET_MAX_ORDER}")
    bad = (g < 0) | (g >= a)
    if bad.any():
        r, c = map(int, np.argwhere(bad)[0])
        raise RangeError(r, c, int(g[r, c]), a)

    G, rows = g.tolist(), S.rows
    enc = [-1] * a
    dec = [-1] * k
    trail = []

    def constrain(x, y):
        z = rows[enc[x]][enc[y]]
        want = G[x][y]
        if dec[z] == -1:
            dec[z] = want
            trail.append(z)
            return True
        return dec[z] == want

    def dfs(i):
        if i == a:
            return True
        for s in range(k):
            if budget.used >= budget.max_nodes:
                raise _Exhausted
            budget.used += 1
            enc[i] = s
            mark = len(trail)
            ok = constrain(i, i) and all(constrain(x, i) and constrain(i, x) for x in range(i))
            if ok and dfs(i + 1):
                return True
            while len(trail) > mark:
                dec[trail.pop()] = -1
        enc[i] = -1
        return False

    try:
        found = dfs(0)
    except _Exhausted:
        return InterpretationResult(UNKNOWN)
    if not found:
        return InterpretationResult(Verdict.NO)
    return InterpretationResult(Verdict.YES, tuple(enc), tuple(max(d, 0) for d in dec))
