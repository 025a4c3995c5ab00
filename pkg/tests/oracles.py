"""Independent brute-force oracles.

These work on plain Python sets of pairs and frozensets of points and
share no code with the package, so they can check it.
"""

import itertools
from fractions import Fraction

INF = None  # the oracles model infinity as None


def pairs_of(rel):
    return {(x, y) for x in range(rel.n) for y in range(rel.n) if (x, y) in rel}


def compose_pairs(r, s):
    return {(x, z) for (x, y1) in r for (y2, z) in s if y1 == y2}


def transitive_triple_loop(pairs, n):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (x, y) in pairs and (y, z) in pairs and (x, z) not in pairs:
                    return False
    return True


def shortest_paths_by_enumeration(matrix):
    """Minimum over all simple paths; ``None`` entries are infinite."""
    n = len(matrix)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                out[i][j] = Fraction(0)
                continue
            best = None
            others = [k for k in range(n) if k not in (i, j)]
            for size in range(len(others) + 1):
                for mid in itertools.permutations(others, size):
                    path = (i,) + mid + (j,)
                    total = Fraction(0)
                    for a, b in zip(path, path[1:]):
                        if matrix[a][b] is None:
                            total = None
                            break
                        total += matrix[a][b]
                    if total is not None and (best is None or total < best):
                        best = total
            out[i][j] = best
    return out


def topologies_bruteforce(n):
    """All topologies on range(n) as frozensets of frozensets."""
    X = frozenset(range(n))
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    middle = [s for s in subsets if s and s != X]
    out = []
    for k in range(len(middle) + 1):
        for chosen in itertools.combinations(middle, k):
            fam = {frozenset(), X, *chosen}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                out.append(frozenset(fam))
    return out


def preorders_bruteforce(n):
    cells = [(x, y) for x in range(n) for y in range(n) if x != y]
    diag = {(x, x) for x in range(n)}
    out = []
    for k in range(len(cells) + 1):
        for chosen in itertools.combinations(cells, k):
            p = diag | set(chosen)
            if transitive_triple_loop(p, n):
                out.append(frozenset(p))
    return out


def induced_opens(n, members, use_rows=True):
    """Opens from neighborhoods {y : (x,y) in U} (or columns) over the members."""
    out = set()
    for k in range(n + 1):
        for c in itertools.combinations(range(n), k):
            o = set(c)
            ok = True
            for x in o:
                nbhds = []
                for u in members:
                    if use_rows:
                        nbhds.append({y for (a, y) in u if a == x})
                    else:
                        nbhds.append({a for (a, y) in u if y == x})
                if not any(nb <= o for nb in nbhds):
                    ok = False
                    break
            if ok:
                out.add(frozenset(o))
    return out


def opens_as_sets(topology):
    return {frozenset(i for i in range(topology.n) if m >> i & 1) for m in topology.opens}
