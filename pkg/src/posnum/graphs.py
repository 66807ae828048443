"""Immutable bitmask-adjacency simple graphs and their standard invariants.

Vertices are labelled 0..n-1 and adjacency is stored as one integer bitmask
per vertex.  Every operation needed here fits comfortably in n <= 64; Python
integers degrade gracefully beyond that (only ever exercised when ingesting
external graph streams), just more slowly.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations

INFINITE = math.inf


def bits(mask: int):
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; immutable by convention, hashable.

    Equality is labelled equality (same order, same adjacency), not
    isomorphism; use :mod:`posnum.canon` for isomorphism classes.
    """

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        if n < 1:
            raise ValueError("graph order must be >= 1")
        if len(rows) != n:
            raise ValueError("adjacency row count differs from order")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(n):
            for v in bits(rows[u]):
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self.m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self):
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            for d in bits(row):
                yield (u, u + 1 + d)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs ----------------------------------------------------

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """New graph with an extra vertex n adjacent to ``neighbor_mask``."""
        n = self.n
        if neighbor_mask & ~self.full_mask:
            raise ValueError("neighbor mask out of range")
        rows = [r | (((neighbor_mask >> v) & 1) << n) for v, r in enumerate(self.rows)]
        rows.append(neighbor_mask)
        return Graph(n + 1, rows)

    def delete_vertices(self, vertices) -> "Graph":
        """Induced subgraph on the remaining vertices, labels compacted."""
        drop = 0
        for v in vertices:
            drop |= 1 << v
        keep = [v for v in range(self.n) if not (drop >> v) & 1]
        return self.subgraph(keep)

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph; new label i corresponds to ``vertices[i]``."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vs), rows)

    def relabel(self, perm) -> "Graph":
        """Relabel: old vertex v becomes ``perm[v]``."""
        perm = tuple(perm)
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in bits(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, rows)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, [(~r & full) & ~(1 << v) for v, r in enumerate(self.rows)])

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("no self-loops")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    # -- connectivity -------------------------------------------------------

    def reachable_mask(self, start: int, allowed: int | None = None) -> int:
        """Mask of vertices reachable from ``start`` inside ``allowed``."""
        if allowed is None:
            allowed = self.full_mask
        reach = (1 << start) & allowed
        frontier = reach
        rows = self.rows
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        return reach

    def is_connected(self) -> bool:
        return self.reachable_mask(0) == self.full_mask

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        out = []
        left = self.full_mask
        while left:
            start = (left & -left).bit_length() - 1
            comp = self.reachable_mask(start, left)
            out.append(comp)
            left &= ~comp
        return out

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- constructors ------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite_graph(sizes) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    part_mask = []
    start = 0
    for s in sizes:
        part_mask.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    rows = []
    for p in part_mask:
        for _ in range(p.bit_count()):
            rows.append(full & ~p)
    return Graph(n, rows)


# -- metric invariants ---------------------------------------------------------


@lru_cache(maxsize=4096)
def distance_matrix(g: Graph) -> tuple[tuple[float, ...], ...]:
    """All-pairs hop distances; ``INFINITE`` marks disconnected pairs."""
    n, rows = g.n, g.rows
    out = []
    for src in range(n):
        dist = [INFINITE] * n
        dist[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            d += 1
            for v in bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        out.append(tuple(dist))
    return tuple(out)


def diameter(g: Graph):
    """Largest finite distance; ``INFINITE`` when disconnected, 0 for n=1."""
    if not g.is_connected():
        return INFINITE
    dm = distance_matrix(g)
    return max((dm[u][v] for u in range(g.n) for v in range(u + 1, g.n)), default=0)


def leaf_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and g.is_connected()


# -- clique-type invariants ----------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact clique number via branch and bound with a greedy colour bound."""
    n, rows = g.n, g.rows
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    best = 0

    def color_bound(cand: int) -> int:
        colors = 0
        while cand:
            colors += 1
            avail = cand
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                cand &= ~(1 << v)
        return colors

    def expand(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        if not cand:
            return
        if size + cand.bit_count() <= best:
            return
        if size + color_bound(cand) <= best:
            return
        sub = [v for v in order if (cand >> v) & 1]
        for v in sub:
            if size + cand.bit_count() <= best:
                return
            cand &= ~(1 << v)
            expand(size + 1, cand & rows[v])

    expand(0, g.full_mask)
    return best


def independent_clique_number(g: Graph) -> int:
    """Largest induced subgraph all of whose components are cliques.

    A vertex may join the current selection only when its selected
    neighbourhood is empty or exactly one whole existing clique component.
    """
    n, rows = g.n, g.rows
    order = sorted(range(n), key=lambda v: (rows[v].bit_count(), v))
    best = 0

    def rec(idx: int, comps: tuple[int, ...], size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (n - idx) <= best:
            return
        if idx == n:
            return
        v = order[idx]
        nb = rows[v]
        hit = [c for c in comps if c & nb]
        if not hit:
            rec(idx + 1, comps + (1 << v,), size + 1)
        elif len(hit) == 1 and hit[0] & ~nb == 0:
            merged = tuple(c for c in comps if c != hit[0]) + (hit[0] | (1 << v),)
            rec(idx + 1, merged, size + 1)
        rec(idx + 1, comps, size)

    rec(0, (), 0)
    return best


def extreme_vertices(g: Graph) -> tuple[int, ...]:
    """Simplicial vertices: neighbourhood induces a clique."""
    out = []
    rows = g.rows
    for v in range(g.n):
        nb = rows[v]
        if all(nb & ~(rows[u] | (1 << u)) == 0 for u in bits(nb)):
            out.append(v)
    return tuple(out)


# -- graph operations -----------------------------------------------------------


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between; h is relabelled above g."""
    ng, nh = g.n, h.n
    hmask_all = ((1 << nh) - 1) << ng
    gmask_all = (1 << ng) - 1
    rows = [r | hmask_all for r in g.rows]
    rows += [(r << ng) | gmask_all for r in h.rows]
    return Graph(ng + nh, rows)


def blow_up(h: Graph, sizes) -> Graph:
    """Replace vertex i of h by an independent set of ``sizes[i]`` vertices."""
    sizes = list(sizes)
    if len(sizes) != h.n:
        raise ValueError("need one size per vertex of the pattern graph")
    if any(s < 1 for s in sizes):
        raise ValueError("blow-up sizes must be positive")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    block = [((1 << sizes[i]) - 1) << starts[i] for i in range(h.n)]
    rows = []
    for i in range(h.n):
        nb = 0
        for j in bits(h.rows[i]):
            nb |= block[j]
        rows.extend([nb] * sizes[i])
    return Graph(n, rows)


def add_pendant(g: Graph, v: int) -> Graph:
    """Attach one new leaf to vertex v; the leaf gets label n."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.add_vertex(1 << v)


def articulation_points(g: Graph) -> tuple[int, ...]:
    """Cut vertices of a connected graph (empty result for n <= 2)."""
    if g.n <= 2:
        return ()
    out = []
    full = g.full_mask
    for v in range(g.n):
        allowed = full & ~(1 << v)
        start = (allowed & -allowed).bit_length() - 1
        if g.reachable_mask(start, allowed) != allowed:
            out.append(v)
    return tuple(out)
