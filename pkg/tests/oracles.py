"""Independent reference implementations used to cross-check the package.

Everything here recomputes answers from first principles: simple-path
enumeration for constrained distances and weights, subset enumeration for
domination, raw injections for induced pattern matching, and labeled
enumeration plus permutation canonicalization for isomorphism-class
counts.  Slow on purpose, and deliberately free of the package's own
search machinery.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

from expodom.graphs import Graph


def adjacency(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def simple_paths(adj: dict[int, set[int]], start: int, goal: int):
    """Yield every simple path from start to goal as a vertex tuple."""
    stack = [(start, (start,), {start})]
    while stack:
        here, path, seen = stack.pop()
        if here == goal:
            yield path
            continue
        for nxt in adj[here]:
            if nxt not in seen:
                stack.append((nxt, path + (nxt,), seen | {nxt}))


def dist_constrained_oracle(g: Graph, dset: set[int], u: int, v: int):
    """Minimum length of a u-v path with exactly one endvertex in the set
    (namely v) and no internal vertex in the set; inf when none exists."""
    if v not in dset:
        raise ValueError("second endpoint must lie in the set")
    if u == v:
        return 0
    if u in dset:
        return math.inf
    adj = adjacency(g)
    best = math.inf
    for path in simple_paths(adj, u, v):
        if any(w in dset for w in path[1:-1]):
            continue
        best = min(best, len(path) - 1)
    return best


def weight_oracle(g: Graph, dset: set[int], u: int) -> Fraction:
    total = Fraction(0)
    for v in dset:
        d = dist_constrained_oracle(g, dset, u, v)
        if d != math.inf:
            total += Fraction(1, 2) ** (d - 1)
    return total


def plain_distance_oracle(g: Graph, u: int, v: int):
    if u == v:
        return 0
    adj = adjacency(g)
    best = math.inf
    for path in simple_paths(adj, u, v):
        best = min(best, len(path) - 1)
    return best


def porous_weight_oracle(g: Graph, dset: set[int], u: int) -> Fraction:
    total = Fraction(0)
    for v in dset:
        d = plain_distance_oracle(g, u, v)
        if d != math.inf:
            total += Fraction(1, 2) ** (d - 1)
    return total


def is_dominating_oracle(g: Graph, dset: set[int]) -> bool:
    adj = adjacency(g)
    return all(u in dset or adj[u] & dset for u in range(g.n))


def gamma_oracle(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(value, lexicographically smallest optimal set) by subset search."""
    for k in range(1, g.n + 1):
        for cand in combinations(range(g.n), k):
            if is_dominating_oracle(g, set(cand)):
                return k, cand
    raise AssertionError("unreachable for n >= 1")


def gamma_e_oracle(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for cand in combinations(range(g.n), k):
            dset = set(cand)
            if all(weight_oracle(g, dset, u) >= 1 for u in range(g.n)):
                return k
    raise AssertionError("unreachable for n >= 1")


def gamma_e_star_oracle(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for cand in combinations(range(g.n), k):
            dset = set(cand)
            if all(porous_weight_oracle(g, dset, u) >= 1
                   for u in range(g.n)):
                return k
    raise AssertionError("unreachable for n >= 1")


def find_induced_oracle(g: Graph, p: Graph):
    """First injection (in index order) embedding p induced into g."""
    if p.n > g.n:
        return None
    p_edges = {(a, b) for a, b in p.edges()}
    for cand in permutations(range(g.n), p.n):
        ok = True
        for a in range(p.n):
            for b in range(a + 1, p.n):
                want = (a, b) in p_edges
                if g.has_edge(cand[a], cand[b]) != want:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    return None


def connected_oracle(g: Graph) -> bool:
    if g.n == 0:
        return False
    adj = adjacency(g)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def _labeled_bits(n: int):
    import numpy as np

    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    count = 1 << m
    bits = ((np.arange(count)[:, None] >> np.arange(m)[None, :]) & 1)
    return pairs, bits.astype(np.int64)


def class_count_oracle(n: int, trees: bool = False) -> int:
    """Connected isomorphism classes of order n by labeled enumeration.

    Canonicalizes each labeled graph as the minimum edge-bitmask over all
    n! vertex permutations; numpy keeps the n=6 case (32,768 graphs times
    720 permutations) well under a second.
    """
    import numpy as np

    if n == 1:
        return 1
    pairs, bits = _labeled_bits(n)
    m = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}

    keep = []
    for row in range(bits.shape[0]):
        edges = [pairs[i] for i in range(m) if bits[row, i]]
        if trees and len(edges) != n - 1:
            continue
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) == n:
            keep.append(row)
    kept = bits[keep]

    weights = (np.int64(1) << np.arange(m, dtype=np.int64))
    best = None
    for perm in permutations(range(n)):
        pm = np.array([index[tuple(sorted((perm[a], perm[b])))]
                       for a, b in pairs])
        keys = kept[:, pm] @ weights
        best = keys if best is None else np.minimum(best, keys)
    return int(np.unique(best).size)
