"""Brute-force reference implementations.

Nothing here imports the package: every function works on plain nested
lists and enumerates its whole search space.
"""
from itertools import combinations, permutations, product  # noqa: F401


def assoc_witness(rows):
    """First (x, y, z) in lexicographic order with (xy)z != x(yz), else None."""
    n = len(rows)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                    return (x, y, z)
    return None


def all_tables(n):
    """Every binary operation on n points as nested lists."""
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def associative_tables(n):
    return [t for t in all_tables(n) if assoc_witness(t) is None]


def then(f, g):
    """Apply image tuple f first, then g."""
    return tuple(g[v] for v in f)


def self_maps(n):
    return set(product(range(n), repeat=n))


def naive_closure(gens):
    """All products of generators, by repeated pairwise composition."""
    elems = set(map(tuple, gens))
    while True:
        new = {then(a, b) for a in elems for b in elems} - elems
        if not new:
            return elems
        elems |= new


def is_hom(phi, S, T):
    n = len(S)
    return all(phi[S[x][y]] == T[phi[x]][phi[y]] for x in range(n) for y in range(n))


def first_violation(phi, S, T):
    n = len(S)
    for x in range(n):
        for y in range(n):
            if phi[S[x][y]] != T[phi[x]][phi[y]]:
                return (x, y)
    return None


def injective_homs(S, T):
    return sorted(p for p in permutations(range(len(T)), len(S)) if is_hom(p, S, T))


def all_homs(S, T, surjective=False):
    out = []
    for p in product(range(len(T)), repeat=len(S)):
        if surjective and len(set(p)) != len(T):
            continue
        if is_hom(p, S, T):
            out.append(p)
    return out


def closed_subsets(T):
    n = len(T)
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            s = set(sub)
            if all(T[a][b] in s for a in sub for b in sub):
                yield sub


def restrict(T, sub):
    pos = {e: i for i, e in enumerate(sub)}
    return [[pos[T[a][b]] for b in sub] for a in sub]


def brute_divides(S, T):
    """Is S the image of some subsemigroup of T under a surjective homomorphism?"""
    for sub in closed_subsets(T):
        if len(sub) < len(S):
            continue
        U = restrict(T, sub)
        for p in product(range(len(S)), repeat=len(U)):
            if len(set(p)) == len(S) and is_hom(p, U, S):
                return True
    return False


def interpretations(g, S):
    """All (encode, decode) pairs with decode[encode[x] encode[y]] == g[x][y]."""
    a, k = len(g), len(S)
    out = []
    for enc in product(range(k), repeat=a):
        for dec in product(range(a), repeat=k):
            if all(dec[S[enc[x]][enc[y]]] == g[x][y] for x in range(a) for y in range(a)):
                out.append((enc, dec))
    return out


def element_power_count(T, x):
    """Number of distinct powers x, x^2, ..."""
    seen, p = [], x
    while p not in seen:
        seen.append(p)
        p = T[p][x]
    return len(seen)


def compose_table(elems):
    """Table of a list of image tuples under 'first then second'."""
    pos = {e: i for i, e in enumerate(elems)}
    return [[pos[then(a, b)] for b in elems] for a in elems]


def direct_product_rows(S, T):
    n, m = len(S), len(T)
    return [[S[a // m][b // m] * m + T[a % m][b % m] for b in range(n * m)] for a in range(n * m)]
