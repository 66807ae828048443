"""Deterministic generators for the constructed graph families.

Every generator fixes an explicit labelling so tests and certificates can
name vertices, and ships a claims record (expected order / mp / gp /
diameter, where a closed form is known) that the engine verifies on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graphs import (
    Graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    join,
    blow_up,
    path_graph,
    add_pendant,
)


class FamilyParameterError(ValueError):
    """Parameters outside a generator's stated range."""


class FamilyPreconditionError(ValueError):
    """A runtime-checked hypothesis on an input graph failed."""


@dataclass(frozen=True)
class FamilyClaims:
    """Closed-form expectations attached to a generated graph."""

    order: int | None = None
    mp: int | None = None
    gp: int | None = None
    diameter: int | None = None

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def _need(cond: bool, msg: str):
    if not cond:
        raise FamilyParameterError(msg)


# -- pagoda -----------------------------------------------------------------


def pagoda(r: int) -> Graph:
    """Three r-layers A, B, C plus an apex; b_i meets a_j and c_j for j != i.

    Labels: a_i = i-1, b_i = r+i-1, c_i = 2r+i-1, apex = 3r.
    """
    _need(r >= 3, "pagoda needs r >= 3")
    n = 3 * r + 1
    edges = []
    for i in range(r):
        for j in range(r):
            if i != j:
                edges.append((r + i, j))          # b_i ~ a_j
                edges.append((r + i, 2 * r + j))  # b_i ~ c_j
    for i in range(r):
        edges.append((2 * r + i, 3 * r))          # c_i ~ apex
    return Graph.from_edges(n, edges)


def pagoda_claims(r: int) -> FamilyClaims:
    return FamilyClaims(order=3 * r + 1, mp=2, gp=2 * r)


def pagoda_prime(r: int) -> Graph:
    """pagoda(r) minus the last A-vertex, labels compacted."""
    _need(r >= 3, "pagoda_prime needs r >= 3")
    return pagoda(r).delete_vertices([r - 1])


def pagoda_prime_claims(r: int) -> FamilyClaims:
    return FamilyClaims(order=3 * r, mp=2, gp=2 * r - 1)


# -- starlike trees and chalices -----------------------------------------------


def starlike_tree(r: int, s: int, t: int) -> Graph:
    """Centre 0 with r branches of length 1, s of length 2, one of length t."""
    _need(r >= 0 and s >= 0 and t >= 0, "parameters must be nonnegative")
    _need(r + s + t >= 1, "tree needs at least one branch")
    edges = []
    nxt = 1
    for _ in range(r):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(s):
        edges.append((0, nxt))
        edges.append((nxt, nxt + 1))
        nxt += 2
    prev = 0
    for _ in range(t):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return Graph.from_edges(nxt, edges)


def starlike_tree_claims(r: int, s: int, t: int) -> FamilyClaims:
    order = r + 2 * s + t + 1
    leaves = None
    if t >= 1 and r + s >= 1:
        leaves = r + s + 1
    elif t == 0 and r + s >= 2:
        leaves = r + s
    return FamilyClaims(order=order, mp=leaves, gp=leaves)


def chalice(r: int, s: int, t: int) -> Graph:
    """Starlike tree joined with one universal vertex (label r+2s+t+1)."""
    ok = (t >= 1 and r + s >= 2) or (t == 0 and r + s >= 3)
    _need(r >= 0 and s >= 0 and t >= 0 and ok,
          "chalice needs t >= 1 with r+s >= 2, or t = 0 with r+s >= 3")
    return join(starlike_tree(r, s, t), complete_graph(1))


def chalice_claims(r: int, s: int, t: int) -> FamilyClaims:
    if t >= 1:
        return FamilyClaims(order=r + 2 * s + t + 2, mp=r + s + 1,
                            gp=r + 2 * s + t - t // 3)
    return FamilyClaims(order=r + 2 * s + 2, mp=r + s, gp=r + 2 * s)


# -- mast --------------------------------------------------------------------


def mas(r: int, s: int) -> Graph:
    """Clique R split into halves, independent set S, two hubs x and y.

    Labels: R = 0..r-1 (first ceil(r/2) form R'), S = r..r+s-1,
    x = r+s, y = r+s+1; x meets S and R', y meets S and R''.
    """
    _need(r >= 2, "mas needs r >= 2")
    _need(s >= r // 2, "mas needs s >= floor(r/2)")
    half = (r + 1) // 2
    x = r + s
    y = r + s + 1
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for i in range(s):
        edges.append((x, r + i))
        edges.append((y, r + i))
    for i in range(half):
        edges.append((x, i))
    for i in range(half, r):
        edges.append((y, i))
    return Graph.from_edges(r + s + 2, edges)


def mas_claims(r: int, s: int) -> FamilyClaims:
    return FamilyClaims(order=r + s + 2, mp=s + (r + 1) // 2, gp=r + s)


# -- Turan-type graphs -----------------------------------------------------------


def turan_part_sizes(n: int, a: int) -> list[int]:
    _need(2 <= a <= n, "need 2 <= a <= n")
    q, rem = divmod(n, a)
    return [q + 1] * rem + [q] * (a - rem)


def turan(n: int, a: int) -> Graph:
    """Complete a-partite graph with near-equal parts, largest part first."""
    return complete_multipartite_graph(turan_part_sizes(n, a))


def turan_size(n: int, a: int) -> int:
    sizes = turan_part_sizes(n, a)
    return (n * (n - 1) - sum(s * (s - 1) for s in sizes)) // 2


def turan_claims(n: int, a: int) -> FamilyClaims:
    q = -(-n // a)
    return FamilyClaims(order=n, mp=max(q, a), gp=max(q, a))


def turan_star(n: int, a: int) -> Graph:
    """Turan graph minus the floor(n/a) transversal cliques on j-th vertices."""
    g = turan(n, a)
    sizes = turan_part_sizes(n, a)
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    for j in range(n // a):
        for i1 in range(a):
            for i2 in range(i1 + 1, a):
                g = g.without_edge(starts[i1] + j, starts[i2] + j)
    return g


def turan_star_size(n: int, a: int) -> int:
    return turan_size(n, a) - (n // a) * a * (a - 1) // 2


def turan_star_claims(n: int, a: int) -> FamilyClaims:
    if n >= a * a + 1:
        return FamilyClaims(order=n, mp=a)
    return FamilyClaims(order=n)


# -- half-wheel -------------------------------------------------------------------


def half_wheel(n: int, b: int) -> Graph:
    """Cycle on 0..n-2 plus hub n-1 adjacent to 0, 2, ..., 2(b-1)."""
    _need(b >= 3, "half_wheel needs b >= 3")
    _need(n >= 2 * b + 1, "half_wheel needs n >= 2b+1")
    edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    edges += [(n - 1, 2 * k) for k in range(b)]
    return Graph.from_edges(n, edges)


def half_wheel_claims(n: int, b: int) -> FamilyClaims:
    half = -(-n // 2)
    diam = half - 1 if b == 3 else 3 + half - b
    return FamilyClaims(order=n, mp=2, gp=b if b >= 4 else None, diameter=diam)


# -- flagella and caterpillars ------------------------------------------------------


def flagellum(n: int, a: int, D: int) -> Graph:
    """Wheel on one end of a path, pendants on the other.

    Labels: path x_0..x_{D-2} = 0..D-2, cycle = D-1..D-2+s with
    s = n-D-a+3, pendants = the rest; the wheel hub is x_0.
    """
    _need(a >= 3, "flagellum needs a >= 3")
    _need(2 <= D <= n - a - 1, "flagellum needs 2 <= D <= n-a-1")
    s = n - D - a + 3
    edges = [(i, i + 1) for i in range(D - 2)]
    c0 = D - 1
    edges += [(c0 + i, c0 + (i + 1) % s) for i in range(s)]
    edges += [(0, c0 + i) for i in range(s)]
    p0 = c0 + s
    edges += [(D - 2, p0 + i) for i in range(a - 2)]
    return Graph.from_edges(n, edges)


def flagellum_claims(n: int, a: int, D: int) -> FamilyClaims:
    return FamilyClaims(order=n, mp=a, diameter=D)


def flagellum_long(n: int, a: int) -> Graph:
    """Path u_0..u_{n-a} with a-1 extra vertices adjacent to u_0 and u_1."""
    _need(a >= 3, "flagellum_long needs a >= 3")
    _need(n >= a + 2, "flagellum_long needs n >= a+2")
    L = n - a
    edges = [(i, i + 1) for i in range(L)]
    edges += [(L + 1 + i, 0) for i in range(a - 1)]
    edges += [(L + 1 + i, 1) for i in range(a - 1)]
    return Graph.from_edges(n, edges)


def flagellum_long_claims(n: int, a: int) -> FamilyClaims:
    return FamilyClaims(order=n, mp=a, diameter=n - a)


def caterpillar(n: int, a: int) -> Graph:
    """Path of length n-a+1 with a-2 extra leaves round-robin on its interior."""
    _need(3 <= a <= n - 2, "caterpillar needs 3 <= a <= n-2")
    L = n - a + 1
    edges = [(i, i + 1) for i in range(L)]
    interior = L - 1
    for k in range(a - 2):
        edges.append((1 + (k % interior), L + 1 + k))
    return Graph.from_edges(n, edges)


def caterpillar_claims(n: int, a: int) -> FamilyClaims:
    return FamilyClaims(order=n, mp=a, gp=a, diameter=n - a + 1)


# -- chorded cycle with pendants ------------------------------------------------------


def srt(r: int, t: int) -> Graph:
    """Cycle of length 5r+1 with chords 0-(3+5s) and t pendants on 0."""
    _need(r >= 2, "srt needs r >= 2")
    _need(t >= 0, "srt needs t >= 0")
    c = 5 * r + 1
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(0, 3 + 5 * s) for s in range(r)]
    edges += [(0, c + i) for i in range(t)]
    return Graph.from_edges(c + t, edges)


def srt_claims(r: int, t: int) -> FamilyClaims:
    return FamilyClaims(order=5 * r + 1 + t, mp=t + 2, gp=2 * r + t)


def srt_adjusted(r: int, t: int, delta: int) -> Graph:
    """srt with the final length-5 cycle section changed by delta vertices.

    Claims are intentionally absent: the variant is checked empirically.
    """
    _need(r >= 2, "srt_adjusted needs r >= 2")
    _need(t >= 0, "srt_adjusted needs t >= 0")
    _need(delta >= -1, "srt_adjusted supports delta >= -1")
    c = 5 * r + 1 + delta
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(0, 3 + 5 * s) for s in range(r - 1)]
    edges.append((0, 5 * r - 2 + delta))
    edges += [(0, c + i) for i in range(t)]
    return Graph.from_edges(c + t, edges)


def srt_with_tail(r: int, t: int, delta: int, tail: int) -> Graph:
    """srt_adjusted extended by a pendant path of ``tail`` extra vertices.

    The path hangs off the first pendant when t >= 1, else off cycle vertex 1.
    """
    _need(tail >= 0, "tail must be nonnegative")
    g = srt_adjusted(r, t, delta)
    attach = 5 * r + 1 + delta if t >= 1 else 1
    for _ in range(tail):
        g = add_pendant(g, attach)
        attach = g.n - 1
    return g


# -- diameter-2 tripling ---------------------------------------------------------------


def _check_tripling_base(h: Graph):
    from .position import mp as _mp  # local import to avoid a cycle
    from .graphs import diameter as _diameter

    if h.n < 4:
        raise FamilyPreconditionError("base graph needs order >= 4")
    if _diameter(h) != 2:
        raise FamilyPreconditionError("base graph must have diameter 2")
    if _mp(h) != 2:
        raise FamilyPreconditionError("base graph must have mp-number 2")


def g_of_h(h: Graph) -> Graph:
    """Tripled graph on 3r+2 vertices from an order-r base with mp 2, diam 2.

    Labels: base copy 0..r-1, X = r..2r-1, Y = 2r..3r-1, z1 = 3r, z2 = 3r+1.
    X-Y is complete bipartite minus the matching x_i y_i; x_i and y_i meet
    h_i; z1 meets X and z2; z2 meets Y.
    """
    _check_tripling_base(h)
    r = h.n
    edges = list(h.edges())
    for i in range(r):
        for j in range(r):
            if i != j:
                edges.append((r + i, 2 * r + j))
        edges.append((r + i, i))
        edges.append((2 * r + i, i))
        edges.append((3 * r, r + i))
        edges.append((3 * r + 1, 2 * r + i))
    edges.append((3 * r, 3 * r + 1))
    return Graph.from_edges(3 * r + 2, sorted(set(edges)))


def g_prime_of_h(h: Graph) -> Graph:
    """g_of_h minus z2 (order 3r+1)."""
    g = g_of_h(h)
    return g.delete_vertices([g.n - 1])


def g_double_prime_of_h(h: Graph) -> Graph:
    """g_of_h minus z1 and z2 (order 3r)."""
    g = g_of_h(h)
    return g.delete_vertices([g.n - 2, g.n - 1])


def tripling_claims(h: Graph, drop: int = 0) -> FamilyClaims:
    return FamilyClaims(order=3 * h.n + 2 - drop, mp=2, diameter=2)


# -- miscellaneous families ---------------------------------------------------------------


def circulant(n: int, connections) -> Graph:
    """Vertices Z_n; i ~ j iff the cyclic distance |i-j| is a connection."""
    _need(n >= 3, "circulant needs n >= 3")
    conns = sorted(set(connections))
    for c in conns:
        _need(1 <= c <= n // 2, f"connection {c} outside 1..{n // 2}")
    edges = []
    for i in range(n):
        for c in conns:
            edges.append((i, (i + c) % n))
    return Graph.from_edges(n, sorted({(min(u, v), max(u, v)) for u, v in edges}))


def cycle_claims(n: int) -> FamilyClaims:
    if n == 3:
        return FamilyClaims(order=3, mp=3, gp=3, diameter=1)
    if n == 4:
        return FamilyClaims(order=4, mp=2, gp=2, diameter=2)
    return FamilyClaims(order=n, mp=2, gp=3, diameter=n // 2)


def path_claims(n: int) -> FamilyClaims:
    if n == 1:
        return FamilyClaims(order=1, mp=1, gp=1, diameter=0)
    return FamilyClaims(order=n, mp=2, gp=2, diameter=n - 1)


def complete_claims(n: int) -> FamilyClaims:
    return FamilyClaims(order=n, mp=n, gp=n, diameter=0 if n == 1 else 1)


def complete_multipartite_claims(sizes) -> FamilyClaims:
    sizes = sorted(sizes, reverse=True)
    val = max(sizes[0], len(sizes)) if len(sizes) >= 2 else None
    return FamilyClaims(order=sum(sizes), mp=val, gp=val)


def c5_blowup(sizes) -> Graph:
    sizes = list(sizes)
    _need(len(sizes) == 5, "c5_blowup takes exactly five sizes")
    return blow_up(cycle_graph(5), sizes)


# -- registry -----------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyDef:
    name: str
    build: Callable[..., Graph]
    claims: Callable[..., FamilyClaims] | None
    params_doc: str
    takes_graph: bool = False
    takes_list: bool = False


FAMILIES: dict[str, FamilyDef] = {}


def _register(name, build, claims, params_doc, **kw):
    FAMILIES[name] = FamilyDef(name, build, claims, params_doc, **kw)


_register("pagoda", pagoda, pagoda_claims, "r")
_register("pagoda_prime", pagoda_prime, pagoda_prime_claims, "r")
_register("starlike_tree", starlike_tree, starlike_tree_claims, "r s t")
_register("chalice", chalice, chalice_claims, "r s t")
_register("mas", mas, mas_claims, "r s")
_register("turan", turan, turan_claims, "n a")
_register("turan_star", turan_star, turan_star_claims, "n a")
_register("half_wheel", half_wheel, half_wheel_claims, "n b")
_register("flagellum", flagellum, flagellum_claims, "n a D")
_register("flagellum_long", flagellum_long, flagellum_long_claims, "n a")
_register("caterpillar", caterpillar, caterpillar_claims, "n a")
_register("srt", srt, srt_claims, "r t")
_register("srt_adjusted", srt_adjusted, None, "r t delta")
_register("g_of_h", g_of_h, lambda h: tripling_claims(h, 0), "h:graph6", takes_graph=True)
_register("g_prime_of_h", g_prime_of_h, lambda h: tripling_claims(h, 1), "h:graph6",
          takes_graph=True)
_register("g_double_prime_of_h", g_double_prime_of_h, lambda h: tripling_claims(h, 2),
          "h:graph6", takes_graph=True)
_register("c5_blowup", c5_blowup, None, "n1 n2 n3 n4 n5", takes_list=True)
_register("cycle", cycle_graph, cycle_claims, "n")
_register("path", path_graph, path_claims, "n")
_register("complete", complete_graph, complete_claims, "n")
_register("complete_multipartite", complete_multipartite_graph,
          complete_multipartite_claims, "s1 s2 ...", takes_list=True)
_register("circulant", lambda n, conns: circulant(n, conns), None, "n c1,c2,...")


def build_family(name: str, params, h: Graph | None = None) -> Graph:
    fam = FAMILIES.get(name)
    if fam is None:
        raise FamilyParameterError(f"unknown family {name!r}")
    if fam.takes_graph:
        if h is None:
            raise FamilyParameterError(f"family {name} needs a base graph")
        return fam.build(h)
    if fam.takes_list:
        return fam.build(list(params))
    if name == "circulant":
        return fam.build(params[0], params[1])
    return fam.build(*params)


def family_claims(name: str, params, h: Graph | None = None) -> FamilyClaims | None:
    fam = FAMILIES.get(name)
    if fam is None:
        raise FamilyParameterError(f"unknown family {name!r}")
    if fam.claims is None:
        return None
    if fam.takes_graph:
        return fam.claims(h)
    if fam.takes_list:
        return fam.claims(list(params))
    return fam.claims(*params)
