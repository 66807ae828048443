"""Canonical labelling for small graphs.

Colour refinement plus backtracking individualisation; the canonical form is
the relabelling whose adjacency rows compare least, and the canonical code is
the graph6 string of that form (as ascii bytes).  Exact but exponential on
highly symmetric inputs, which is fine at the orders used here.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .graph6 import serialize_graph6
from .graphs import Graph, bits


def _rank(keys) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(rows, n: int, colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            nb = tuple(sorted(colors[u] for u in bits(rows[v])))
            sigs.append((colors[v], nb))
        new = _rank(sigs)
        if new == colors:
            return colors
        colors = new


def _leaf_rows(rows, n: int, pos: list[int]) -> tuple[int, ...]:
    out = [0] * n
    for v in range(n):
        r = 0
        for u in bits(rows[v]):
            r |= 1 << pos[u]
        out[pos[v]] = r
    return tuple(out)


@lru_cache(maxsize=65536)
def canonical_perm(g: Graph) -> tuple[int, ...]:
    """Permutation mapping each vertex to its canonical position."""
    n, rows = g.n, g.rows
    if n == 1 or g.m == 0 or g.m == n * (n - 1) // 2:
        return tuple(range(n))
    best_rows: tuple[int, ...] | None = None
    best_pos: tuple[int, ...] | None = None

    def rec(colors: list[int]):
        nonlocal best_rows, best_pos
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            cand = _leaf_rows(rows, n, colors)
            if best_rows is None or cand < best_rows:
                best_rows = cand
                best_pos = tuple(colors)
            return
        members = [v for v in range(n) if colors[v] == target]
        for v in members:
            keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
            rec(_refine(rows, n, _rank(keys)))

    rec(_refine(rows, n, [0] * n))
    assert best_pos is not None
    return best_pos


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    return g.relabel(canonical_perm(g))


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code: graph6 of the canonical form."""
    return serialize_graph6(canonical_form(g)).encode("ascii")


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test by permutation search; independent of canonical_code."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    hrows = h.rows
    for perm in permutations(range(g.n)):
        ok = True
        for v in range(g.n):
            img = 0
            for u in bits(g.rows[v]):
                img |= 1 << perm[u]
            if img != hrows[perm[v]]:
                ok = False
                break
        if ok:
            return True
    return False
