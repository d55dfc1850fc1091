"""Immutable graphs on at most 64 vertices with bitmask adjacency.

Vertices are 0..n-1.  Adjacency is a tuple of n ints; bit v of row u is set
iff uv is an edge.  Vertex sets are plain ints used as bitmasks throughout,
which keeps neighborhood unions, BFS frontiers and induced-subgraph masks to
single integer operations.

Also provides the graph6 codec (read/write), distances, components, girth,
and a canonical form used for isomorphism dedup everywhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64

#: Sentinel for "no path"; compares correctly against int distances.
INFINITY = math.inf


class Graph6Error(ValueError):
    """Malformed graph6 input (bad header, bad byte, truncation, garbage)."""


class SizeCapError(ValueError):
    """Input exceeds a documented size cap."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_list(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; rows must be symmetric and irreflexive."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 0 <= n <= MAX_VERTICES:
            raise SizeCapError(f"order {n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != n:
            raise ValueError("adjacency length != n")
        for u, row in enumerate(self.adj):
            if row >> n:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at {u}")
            # symmetry: check the upper half only
            rest = row >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric pair {u},{v}")

    # ------------------------------------------------------------------
    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def closed_neighborhood(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={tuple(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph; duplicate edges collapse, self-loops are rejected."""
    if not 0 <= n <= MAX_VERTICES:
        raise SizeCapError(f"order {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def relabel(g: Graph, order: Iterable[int]) -> Graph:
    """Relabeled copy; position i of `order` holds the old vertex renamed i."""
    order = tuple(order)
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * n
    for i, v in enumerate(order):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << pos[w]
        rows[i] = row
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Induced subgraph; kept vertices are renumbered in ascending order."""
    mask = vertices if isinstance(vertices, int) else mask_from(vertices)
    if mask >> g.n:
        raise ValueError("vertex mask outside the graph")
    kept = bits_list(mask)
    pos = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for i, v in enumerate(kept):
        row = 0
        for w in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        rows[i] = row
    return Graph(len(kept), tuple(rows))


def without_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask ^ (1 << v))


# ----------------------------------------------------------------------
# Distances and components
# ----------------------------------------------------------------------

def bfs_levels(g: Graph, sources: int, allowed: int | None = None) -> list[int]:
    """BFS level per vertex (-1 = unreachable), expanding inside `allowed`.

    Sources outside `allowed` are dropped before the walk starts.
    """
    n = g.n
    if allowed is None:
        allowed = g.vertex_mask
    levels = [-1] * n
    frontier = sources & allowed
    seen = frontier
    d = 0
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            levels[v] = d
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
        d += 1
    return levels


def set_distance(g: Graph, xs: int | Iterable[int], ys: int | Iterable[int]):
    """Minimum distance between the two vertex sets; 0 if they intersect."""
    xm = xs if isinstance(xs, int) else mask_from(xs)
    ym = ys if isinstance(ys, int) else mask_from(ys)
    if xm == 0 or ym == 0:
        raise ValueError("set_distance needs two nonempty sets")
    if (xm | ym) >> g.n:
        raise ValueError("vertex mask outside the graph")
    if xm & ym:
        return 0
    levels = bfs_levels(g, xm)
    best = INFINITY
    for v in iter_bits(ym):
        if levels[v] >= 0 and levels[v] < best:
            best = levels[v]
    return best


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the components, ordered by least member."""
    comps = []
    todo = g.vertex_mask
    while todo:
        start = todo & -todo
        levels = bfs_levels(g, start, todo)
        comp = 0
        for v, d in enumerate(levels):
            if d >= 0:
                comp |= 1 << v
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def girth(g: Graph):
    """Length of a shortest cycle, INFINITY for forests.

    For each edge uv, the shortest cycle through uv has length
    dist(u,v) in g-uv plus one; minimizing over edges is exact and keeps
    the correctness argument one line long.
    """
    best = INFINITY
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        cut = Graph(g.n, tuple(rows))
        levels = bfs_levels(cut, 1 << u)
        if levels[v] >= 0 and levels[v] + 1 < best:
            best = levels[v] + 1
    return best


# ----------------------------------------------------------------------
# graph6 codec
# ----------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    """Standard graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    out = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return head + "".join(out)


def decode_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 line; strict about length and padding."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 input")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
    if line[0] == "~":
        if len(line) >= 2 and line[1] == "~":
            raise SizeCapError("order beyond 258047 exceeds the 64-vertex cap")
        if len(line) < 4:
            raise Graph6Error("truncated long-form order")
        n = ((ord(line[1]) - 63) << 12) | ((ord(line[2]) - 63) << 6) | (ord(line[3]) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n > MAX_VERTICES:
        raise SizeCapError(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated graph6 bit stream")
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph6 bit stream")
    rows = [0] * n
    bit = 0
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (val >> k) & 1:
                    raise Graph6Error("nonzero padding bits")
                continue
            if (val >> k) & 1:
                # column-major upper triangle: bit index -> pair (i, j)
                i, j = _PAIR_CACHE.pair(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


class _PairCache:
    """bit index -> (i, j) of the upper-triangle, column-major order."""

    def __init__(self) -> None:
        self._pairs: list[tuple[int, int]] = []
        self._next_j = 1

    def pair(self, idx: int) -> tuple[int, int]:
        while idx >= len(self._pairs):
            j = self._next_j
            self._pairs.extend((i, j) for i in range(j))
            self._next_j += 1
        return self._pairs[idx]


_PAIR_CACHE = _PairCache()


# ----------------------------------------------------------------------
# Canonical form
# ----------------------------------------------------------------------
#
# Refined-partition backtracking: refine the ordered partition by neighbor
# counts until equitable, then individualize each vertex of the first
# non-singleton cell and recurse.  Every discrete leaf is an ordering; the
# canonical ordering is the one whose adjacency bits, read in graph6 column
# order, form the lexicographically smallest string.  Prefix pruning against
# the best string so far keeps the tree small; a transposition-automorphism
# (twin) skip inside the branch cell stops K_n-like cells exploding.

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    changed = True
    while changed:
        changed = False
        for idx, cell in enumerate(cells):
            if cell & (cell - 1) == 0:
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                av = adj[v]
                sig = tuple((av & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) > 1:
                cells[idx:idx + 1] = [groups[s] for s in sorted(groups)]
                changed = True
                break
    return cells


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    best_rows: list[int] | None = None
    best_order: list[int] | None = None

    def dfs(cells: list[int]) -> None:
        nonlocal best_rows, best_order
        order = []
        for c in cells:
            if c & (c - 1) == 0:
                order.append(c.bit_length() - 1)
            else:
                break
        p = len(order)
        rows = []
        for i in range(1, p):
            ai = adj[order[i]]
            r = 0
            for j in range(i):
                r = (r << 1) | ((ai >> order[j]) & 1)
            rows.append(r)
        if best_rows is not None and rows > best_rows[: len(rows)]:
            return
        if p == n:
            if best_rows is None or rows < best_rows:
                best_rows = rows
                best_order = order
            return
        target = cells[p]
        tried: list[int] = []
        for v in iter_bits(target):
            vb = 1 << v
            skip = False
            for u in tried:
                # transposition (u v) is an automorphism: branches coincide
                if (adj[u] & ~vb) == (adj[v] & ~(1 << u)):
                    skip = True
                    break
            if skip:
                continue
            tried.append(v)
            dfs(_refine(adj, cells[:p] + [vb, target ^ vb] + cells[p + 1:]))

    dfs(_refine(adj, [g.vertex_mask]))
    assert best_order is not None
    return tuple(best_order)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return relabel(g, canonical_permutation(g))


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical representative; equal iff isomorphic."""
    return encode_graph6(canonical_graph(g)).encode("ascii")
