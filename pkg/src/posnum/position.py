"""Monophonic and general position: checks, certificates, exact solvers.

Both path kinds reduce to a pairwise betweenness relation: w lies between u
and v when some path of the kind runs from u to v through w.  A vertex set S
is in position iff no pair of S has a third member of S between them, so the
solver is a backtracking maximum-set search over betweenness masks.

The brute-force oracle deliberately avoids that reduction: it enumerates the
actual paths (all geodesics, or all chordless paths) and screens subsets
against them, so the two routes are independent implementations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import Graph, bits, distance_matrix

MAX_SOLVER_ORDER = 64
MAX_BRUTE_ORDER = 16


class DisconnectedGraphError(ValueError):
    """Raised when a position computation gets a disconnected graph."""


class PositionKind(enum.Enum):
    GEODESIC = "gp"
    MONOPHONIC = "mp"

    @classmethod
    def coerce(cls, value) -> "PositionKind":
        if isinstance(value, cls):
            return value
        for kind in cls:
            if value in (kind.value, kind.name.lower()):
                return kind
        raise ValueError(f"unknown position kind: {value!r}")


@dataclass(frozen=True)
class Violation:
    """A path of the relevant kind carrying >= 3 members of the tested set."""

    path: tuple[int, ...]
    hits: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """An optimal position set together with its size."""

    members: frozenset[int]
    value: int


def _require_connected(g: Graph, allow_disconnected: bool):
    if not allow_disconnected and not g.is_connected():
        raise DisconnectedGraphError(
            "graph is disconnected; pass allow_disconnected=True for "
            "per-component path semantics"
        )


def _smask(g: Graph, members) -> int:
    mask = 0
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"set member {v} out of range for order {g.n}")
        mask |= 1 << v
    return mask


# -- chordless path machinery ---------------------------------------------------


@lru_cache(maxsize=65536)
def _chordless_interiors(g: Graph, u: int, v: int) -> int:
    """Mask of vertices lying strictly inside some chordless u-v path."""
    rows, n = g.rows, g.n
    full = (1 << n) - 1
    if (rows[u] >> v) & 1:
        return 0  # longer u-v walks would carry the chord uv
    goal = full & ~(1 << u) & ~(1 << v)
    vbit = 1 << v
    found = 0

    def search(tip: int, path_mask: int, banned: int):
        nonlocal found
        if found == goal:
            return
        allowed = ~banned & full
        if not allowed & vbit:
            return
        reach = 1 << tip
        frontier = reach
        while frontier and not reach & vbit:
            nxt = 0
            for x in bits(frontier):
                nxt |= rows[x]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        if not reach & vbit:
            return
        nexts = rows[tip] & allowed
        if nexts & vbit:
            found |= path_mask & ~(1 << u)
        for c in bits(nexts & ~vbit):
            search(c, path_mask | (1 << c), banned | rows[tip] | (1 << c))

    search(u, 1 << u, 1 << u)
    return found


@lru_cache(maxsize=65536)
def _induced_path_through(g: Graph, u: int, w: int, v: int):
    """One chordless u-v path containing w, or None."""
    rows, n = g.rows, g.n
    full = (1 << n) - 1
    vbit, wbit = 1 << v, 1 << w

    def search(tip: int, path: tuple[int, ...], path_mask: int, banned: int):
        allowed = ~banned & full
        if not allowed & vbit:
            return None
        if not (path_mask & wbit or allowed & wbit):
            return None
        reach = 1 << tip
        frontier = reach
        want = vbit | (0 if path_mask & wbit else wbit)
        while frontier and (reach & want) != want:
            nxt = 0
            for x in bits(frontier):
                nxt |= rows[x]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        if (reach & want) != want:
            return None
        nexts = rows[tip] & allowed
        if nexts & vbit and path_mask & wbit:
            return path + (v,)
        for c in bits(nexts & ~vbit):
            hit = search(c, path + (c,), path_mask | (1 << c), banned | rows[tip] | (1 << c))
            if hit is not None:
                return hit
        return None

    return search(u, (u,), 1 << u, 1 << u)


def exists_induced_path_through(g: Graph, u: int, w: int, v: int) -> bool:
    """True iff some chordless u-v path of g passes through w."""
    if len({u, w, v}) != 3:
        raise ValueError("u, w, v must be three distinct vertices")
    for x in (u, w, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    return _induced_path_through(g, u, w, v) is not None


def find_induced_path_through(g: Graph, u: int, w: int, v: int):
    """A witnessing chordless u-v path through w, or None."""
    if len({u, w, v}) != 3:
        raise ValueError("u, w, v must be three distinct vertices")
    return _induced_path_through(g, u, w, v)


# -- betweenness tables ----------------------------------------------------------


@lru_cache(maxsize=4096)
def _between_table(g: Graph, kind: PositionKind) -> tuple[int, ...]:
    """Flattened n*n table; entry u*n+v is the mask of vertices between u and v."""
    n = g.n
    table = [0] * (n * n)
    if kind is PositionKind.GEODESIC:
        dm = distance_matrix(g)
        for u in range(n):
            du = dm[u]
            for v in range(u + 1, n):
                duv = du[v]
                if duv == 0 or duv == float("inf") or duv == 1:
                    continue
                mask = 0
                dv = dm[v]
                for w in range(n):
                    if w != u and w != v and du[w] + dv[w] == duv:
                        mask |= 1 << w
                table[u * n + v] = mask
                table[v * n + u] = mask
    else:
        for u in range(n):
            for v in range(u + 1, n):
                mask = _chordless_interiors(g, u, v)
                table[u * n + v] = mask
                table[v * n + u] = mask
    return tuple(table)


def _bfs_path(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """One shortest a-b path, deterministic (least-label parents)."""
    if a == b:
        return (a,)
    rows = g.rows
    parent = {a: None}
    frontier = [a]
    while frontier and b not in parent:
        nxt = []
        for x in frontier:
            for y in bits(rows[x]):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in parent:
        raise ValueError(f"no path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


# -- position checks --------------------------------------------------------------


def position_violation(g: Graph, members, kind, *, allow_disconnected: bool = False):
    """None when the set is in position, else a re-checkable Violation."""
    kind = PositionKind.coerce(kind)
    _require_connected(g, allow_disconnected)
    smask = _smask(g, members)
    sel = sorted(bits(smask))
    if len(sel) <= 2:
        return None
    if kind is PositionKind.GEODESIC:
        dm = distance_matrix(g)
        for u, v in combinations(sel, 2):
            duv = dm[u][v]
            if duv == float("inf"):
                continue
            for w in sel:
                if w in (u, v):
                    continue
                if dm[u][w] + dm[w][v] == duv:
                    path = _bfs_path(g, u, w) + _bfs_path(g, w, v)[1:]
                    hits = tuple(x for x in path if (smask >> x) & 1)
                    return Violation(path=path, hits=hits)
        return None
    for u, v in combinations(sel, 2):
        inside = _chordless_interiors(g, u, v) & smask
        if inside:
            w = (inside & -inside).bit_length() - 1
            path = _induced_path_through(g, u, w, v)
            hits = tuple(x for x in path if (smask >> x) & 1)
            return Violation(path=path, hits=hits)
    return None


def in_position(g: Graph, members, kind, *, allow_disconnected: bool = False) -> bool:
    return position_violation(g, members, kind, allow_disconnected=allow_disconnected) is None


def verify_violation(g: Graph, members, kind, cert: Violation) -> bool:
    """Independently re-check a violation certificate."""
    kind = PositionKind.coerce(kind)
    path = cert.path
    smask = _smask(g, members)
    if len(set(path)) != len(path) or len(cert.hits) < 3:
        return False
    if any(not (smask >> x) & 1 for x in cert.hits):
        return False
    if any(x not in path for x in cert.hits):
        return False
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    if kind is PositionKind.GEODESIC:
        dm = distance_matrix(g)
        return len(path) - 1 == dm[path[0]][path[-1]]
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if g.has_edge(path[i], path[j]):
                return False
    return True


# -- exact solver -------------------------------------------------------------------


def position_number(g: Graph, kind, *, allow_disconnected: bool = False) -> Witness:
    """Exact maximum position set, deterministic for a fixed input labelling."""
    kind = PositionKind.coerce(kind)
    if g.n > MAX_SOLVER_ORDER:
        raise ValueError(f"solver handles n <= {MAX_SOLVER_ORDER}, got {g.n}")
    _require_connected(g, allow_disconnected)
    n = g.n
    if n == 1:
        return Witness(members=frozenset({0}), value=1)
    table = _between_table(g, kind)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    best = 0
    best_members: tuple[int, ...] = ()

    def rec(cands: list[int], chosen: list[int], chosen_mask: int, blocked: int):
        nonlocal best, best_members
        if len(chosen) > best:
            best = len(chosen)
            best_members = tuple(chosen)
        if not cands or len(chosen) + len(cands) <= best:
            return
        v = cands[0]
        rest = cands[1:]
        if not (blocked >> v) & 1:
            new_block = 0
            ok = True
            for u in chosen:
                buv = table[u * n + v]
                if buv & chosen_mask:
                    ok = False
                    break
                new_block |= buv
            if ok:
                vmask = chosen_mask | (1 << v)
                vblocked = blocked | new_block
                vrow = v * n
                filtered = []
                for w in rest:
                    if (vblocked >> w) & 1:
                        continue
                    if table[vrow + w] & vmask:
                        continue
                    if any(table[u * n + w] & vmask for u in chosen):
                        continue
                    filtered.append(w)
                rec(filtered, chosen + [v], vmask, vblocked)
        rec(rest, chosen, chosen_mask, blocked)

    rec(order, [], 0, 0)
    return Witness(members=frozenset(best_members), value=best)


def mp(g: Graph) -> int:
    return position_number(g, PositionKind.MONOPHONIC).value


def gp(g: Graph) -> int:
    return position_number(g, PositionKind.GEODESIC).value


# -- independent brute-force oracle ---------------------------------------------------


def _geodesic_masks(g: Graph) -> tuple[int, ...]:
    """Vertex masks of every geodesic on >= 3 vertices."""
    dm = distance_matrix(g)
    rows, n = g.rows, g.n
    masks: set[int] = set()

    def go(cur: int, mask: int, v: int):
        if cur == v:
            masks.add(mask)
            return
        dcv = dm[cur][v]
        for x in bits(rows[cur]):
            if dm[x][v] == dcv - 1:
                go(x, mask | (1 << x), v)

    for u in range(n):
        for v in range(u + 1, n):
            if 2 <= dm[u][v] != float("inf"):
                go(u, 1 << u, v)
    return tuple(masks)


def _chordless_masks(g: Graph) -> tuple[int, ...]:
    """Vertex masks of every chordless path on >= 3 vertices."""
    rows, n = g.rows, g.n
    full = (1 << n) - 1
    masks: set[int] = set()

    def search(start: int, tip: int, path_mask: int, banned: int, length: int):
        for c in bits(rows[tip] & ~banned & full):
            pm = path_mask | (1 << c)
            if length + 1 >= 3 and c > start:
                masks.add(pm)
            search(start, c, pm, banned | rows[tip] | (1 << c), length + 1)

    for start in range(n):
        search(start, start, 1 << start, 1 << start, 1)
    return tuple(masks)


def _oracle_masks(g: Graph, kind: PositionKind) -> tuple[int, ...]:
    if kind is PositionKind.GEODESIC:
        return _geodesic_masks(g)
    return _chordless_masks(g)


def brute_force_position_number(g: Graph, kind, *, allow_disconnected: bool = False) -> int:
    """Subset enumeration in decreasing size against explicitly listed paths."""
    kind = PositionKind.coerce(kind)
    if g.n > MAX_BRUTE_ORDER:
        raise ValueError(f"brute force handles n <= {MAX_BRUTE_ORDER}, got {g.n}")
    _require_connected(g, allow_disconnected)
    n = g.n
    masks = _oracle_masks(g, kind)
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if all((p & smask).bit_count() <= 2 for p in masks):
                return size
    return 0


def optimal_position_sets(g: Graph, kind, *, allow_disconnected: bool = False) -> list[frozenset[int]]:
    """Every maximum position set, via the brute-force route (n <= 16)."""
    kind = PositionKind.coerce(kind)
    if g.n > MAX_BRUTE_ORDER:
        raise ValueError(f"set enumeration handles n <= {MAX_BRUTE_ORDER}, got {g.n}")
    _require_connected(g, allow_disconnected)
    n = g.n
    masks = _oracle_masks(g, kind)
    value = brute_force_position_number(g, kind, allow_disconnected=allow_disconnected)
    out = []
    for combo in combinations(range(n), value):
        smask = 0
        for v in combo:
            smask |= 1 << v
        if all((p & smask).bit_count() <= 2 for p in masks):
            out.append(frozenset(combo))
    return out
