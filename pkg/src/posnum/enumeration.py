"""Isomorphism-free generation of small graphs plus graph6 stream ingestion.

Connected graphs are generated by vertex augmentation with a canonical-parent
acceptance test: a child produced from parent P by attaching a new vertex is
kept only if deleting the child's canonical deletion vertex (the non-cut
vertex of least canonical position) lands back on P's isomorphism class, with
children of one parent deduplicated by canonical code.  Each class is thus
produced exactly once, and shards over parents partition the output.
"""

from __future__ import annotations

import os
import sqlite3
import tempfile
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .canon import canonical_code, canonical_perm
from .graph6 import Graph6Error, parse_graph6
from .graphs import Graph, articulation_points, bits, empty_graph

NATIVE_MAX_ORDER = 9


def _canonical_deletion_parent(child: Graph, *, connected: bool) -> Graph:
    perm = canonical_perm(child)
    if connected:
        cut = set(articulation_points(child))
        delete = min((v for v in range(child.n) if v not in cut), key=lambda v: perm[v])
    else:
        delete = min(range(child.n), key=lambda v: perm[v])
    return child.delete_vertices([delete])


def _expand_connected(parent: Graph, parent_code: bytes) -> list[tuple[Graph, bytes]]:
    """Accepted children of one connected parent, in generation order."""
    out = []
    seen: set[bytes] = set()
    k = parent.n
    for nb_mask in range(1, 1 << k):
        child = parent.add_vertex(nb_mask)
        code = canonical_code(child)
        if code in seen:
            continue
        seen.add(code)
        if canonical_code(_canonical_deletion_parent(child, connected=True)) == parent_code:
            out.append((child, code))
    return out


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[tuple[Graph, bytes], ...]:
    if n == 1:
        g = empty_graph(1)
        return ((g, canonical_code(g)),)
    out = []
    for parent, pcode in _connected_level(n - 1):
        out.extend(_expand_connected(parent, pcode))
    return tuple(out)


def enumerate_connected(n: int, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    """One representative per connected isomorphism class of order n (n <= 9).

    ``shard=(i, k)`` restricts to children of every k-th parent; shards
    partition the classes and are individually deterministic.
    """
    if not 1 <= n <= NATIVE_MAX_ORDER:
        raise ValueError(f"native enumeration covers 1 <= n <= {NATIVE_MAX_ORDER}")
    if shard is not None:
        i, k = shard
        if not (k >= 1 and 0 <= i < k):
            raise ValueError(f"bad shard {shard}")
        if n == 1:
            if i == 0:
                yield empty_graph(1)
            return
        parents = _connected_level(n - 1)[i::k]
        for parent, pcode in parents:
            for child, _ in _expand_connected(parent, pcode):
                yield child
        return
    for g, _ in _connected_level(n):
        yield g


def connected_count(n: int) -> int:
    return len(_connected_level(n))


def enumerate_graphs(n: int, predicate: Callable[[Graph], bool] | None = None) -> list[Graph]:
    """All graphs of order n up to isomorphism, disconnected included.

    ``predicate`` must be hereditary (closed under induced subgraphs); it is
    applied as a pruning filter at every level, so e.g. triangle-freeness
    restricts the whole search tree, not just the final output.
    """
    if not 1 <= n <= NATIVE_MAX_ORDER:
        raise ValueError(f"native enumeration covers 1 <= n <= {NATIVE_MAX_ORDER}")
    k1 = empty_graph(1)
    if predicate is not None and not predicate(k1):
        return []
    level: list[tuple[Graph, bytes]] = [(k1, canonical_code(k1))]
    for k in range(2, n + 1):
        nxt: list[tuple[Graph, bytes]] = []
        for parent, pcode in level:
            seen: set[bytes] = set()
            for nb_mask in range(1 << (k - 1)):
                child = parent.add_vertex(nb_mask)
                if predicate is not None and not predicate(child):
                    continue
                code = canonical_code(child)
                if code in seen:
                    continue
                seen.add(code)
                if canonical_code(_canonical_deletion_parent(child, connected=False)) == pcode:
                    nxt.append((child, code))
        level = nxt
    return [g for g, _ in level]


def clear_enumeration_cache():
    _connected_level.cache_clear()


# -- graph6 streams ---------------------------------------------------------------


class GraphStream:
    """Iterator over graphs with provenance and a lenient-parse warning count."""

    def __init__(self, source: str, graphs: Iterable[Graph]):
        self.source = source
        self.warnings = 0
        self._graphs = graphs

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._graphs)

    def filter_connected(self) -> "GraphStream":
        out = GraphStream(self.source + "|connected", (g for g in self if g.is_connected()))
        out.warnings = self.warnings
        return out

    def filter_order(self, lo: int, hi: int) -> "GraphStream":
        out = GraphStream(f"{self.source}|order[{lo},{hi}]",
                          (g for g in self if lo <= g.n <= hi))
        out.warnings = self.warnings
        return out

    def filter_size(self, lo: int, hi: int) -> "GraphStream":
        out = GraphStream(f"{self.source}|size[{lo},{hi}]",
                          (g for g in self if lo <= g.m <= hi))
        out.warnings = self.warnings
        return out


class _DiskCodeSet:
    """Seen-code set backed by a throwaway sqlite file, so memory stays flat."""

    def __init__(self):
        fd, self.path = tempfile.mkstemp(prefix="posnum-codes-", suffix=".sqlite")
        os.close(fd)
        self.con = sqlite3.connect(self.path)
        self.con.execute("CREATE TABLE codes (code BLOB PRIMARY KEY)")

    def add(self, code: bytes) -> bool:
        """Insert; False when the code was already present."""
        try:
            with self.con:
                self.con.execute("INSERT INTO codes VALUES (?)", (code,))
            return True
        except sqlite3.IntegrityError:
            return False

    def close(self):
        self.con.close()
        try:
            os.unlink(self.path)
        except OSError:
            pass


def ingest_graph6(path, *, lenient: bool = False, dedupe: bool = False) -> GraphStream:
    """Stream a file of graph6 lines.

    In lenient mode malformed lines are skipped and counted on
    ``stream.warnings``; otherwise parsing aborts with the line number.
    With ``dedupe`` canonically repeated graphs are dropped.
    """
    stream: GraphStream

    def lines():
        codes = _DiskCodeSet() if dedupe else None
        try:
            with open(path, "r", encoding="ascii") as fh:
                for lineno, raw in enumerate(fh, start=1):
                    line = raw.strip()
                    if not line:
                        continue
                    try:
                        g = parse_graph6(line)
                    except Graph6Error as exc:
                        if lenient:
                            stream.warnings += 1
                            continue
                        raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
                    if codes is not None and not codes.add(canonical_code(g)):
                        continue
                    yield g
        finally:
            if codes is not None:
                codes.close()

    stream = GraphStream(f"file:{path}", lines())
    return stream


def write_graph6(path, graphs: Iterable[Graph]) -> int:
    from .graph6 import serialize_graph6

    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(serialize_graph6(g) + "\n")
            count += 1
    return count
