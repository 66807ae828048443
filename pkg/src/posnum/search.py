"""Exhaustive and constructive searches over small graphs.

The workhorse is a per-order classification pass (mp, gp, size, diameter for
every isomorphism class), cached as JSON lines and shared by all the table
queries.  Records carry graph6 witnesses that re-verify from scratch.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from random import Random

from .canon import canonical_code, canonical_form
from .enumeration import (
    NATIVE_MAX_ORDER,
    _connected_level,
    _expand_connected,
    enumerate_connected,
    enumerate_graphs,
    ingest_graph6,
)
from .families import (
    FAMILIES,
    FamilyClaims,
    build_family,
    c5_blowup,
    caterpillar,
    chalice,
    chalice_claims,
    circulant,
    family_claims,
    flagellum,
    flagellum_claims,
    flagellum_long,
    flagellum_long_claims,
    caterpillar_claims,
    g_double_prime_of_h,
    g_of_h,
    g_prime_of_h,
    half_wheel,
    half_wheel_claims,
    mas,
    mas_claims,
    pagoda,
    pagoda_claims,
    pagoda_prime,
    pagoda_prime_claims,
    srt,
    srt_claims,
    srt_adjusted,
    srt_with_tail,
    starlike_tree,
    tripling_claims,
    turan,
    turan_claims,
    turan_size,
    turan_star,
    turan_star_claims,
    turan_star_size,
)
from .graph6 import parse_graph6, serialize_graph6
from .graphs import (
    Graph,
    add_pendant,
    clique_number,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    diameter,
    extreme_vertices,
    independent_clique_number,
    join,
    leaf_count,
    path_graph,
    star_graph,
)
from .position import (
    PositionKind,
    brute_force_position_number,
    in_position,
    optimal_position_sets,
    position_number,
)
from .records import (
    WITNESS_CAP,
    BoundsRecord,
    SearchRecord,
)

RESULTS_ENV = "POSNUM_RESULTS"
CLASSIFY_SCHEMA = 1


def results_dir(override=None) -> str | None:
    return override if override is not None else os.environ.get(RESULTS_ENV)


# -- per-order classification -------------------------------------------------------


def _classify_one(g: Graph) -> dict:
    mono = position_number(g, PositionKind.MONOPHONIC, allow_disconnected=True).value
    geo = position_number(g, PositionKind.GEODESIC, allow_disconnected=True).value
    d = diameter(g)
    return {
        "g6": serialize_graph6(canonical_form(g)),
        "n": g.n,
        "m": g.m,
        "mp": mono,
        "gp": geo,
        "diam": None if d == float("inf") else int(d),
    }


def _classify_parent_shard(args) -> list[dict]:
    parents = args
    out = []
    for rows_tuple, pcode in parents:
        parent = Graph(len(rows_tuple), rows_tuple)
        for child, _ in _expand_connected(parent, pcode):
            out.append(_classify_one(child))
    return out


def _classify_connected_native(n: int, shards: int = 1, jobs: int = 1) -> list[dict]:
    if n == 1:
        rows = [_classify_one(next(enumerate_connected(1)))]
    else:
        parents = [(g.rows, code) for g, code in _connected_level(n - 1)]
        parts = [parents[i::shards] for i in range(shards)] if shards > 1 else [parents]
        if jobs > 1 and n >= 6:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(_classify_parent_shard, parts))
        else:
            chunks = [_classify_parent_shard(p) for p in parts]
        rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: r["g6"])
    return rows


def _cache_path(cache_dir: str, space: str, n: int) -> str:
    return os.path.join(cache_dir, f"classify-{space}-n{n}.jsonl")


_CLASSIFY_MEMO: dict[tuple[int, str], list[dict]] = {}


def clear_classification_memo():
    _CLASSIFY_MEMO.clear()


def classify_order(
    n: int,
    *,
    space: str = "connected",
    source: str | None = None,
    cache_dir: str | None = None,
    shards: int = 1,
    jobs: int = 1,
) -> list[dict]:
    """Classify every order-n isomorphism class: g6, size, mp, gp, diameter.

    ``space`` is "connected" (default) or "all"; ``source`` reads an external
    graph6 file instead of native generation (mandatory for n > 9).
    """
    cache_dir = results_dir(cache_dir)
    if source is None and cache_dir:
        path = _cache_path(cache_dir, space, n)
        if os.path.exists(path):
            with open(path, "r", encoding="ascii") as fh:
                header = json.loads(fh.readline())
                if header.get("schema") == CLASSIFY_SCHEMA:
                    return [json.loads(line) for line in fh if line.strip()]
    if source is not None:
        stream = ingest_graph6(source).filter_order(n, n)
        if space == "connected":
            stream = stream.filter_connected()
        rows = sorted((_classify_one(g) for g in stream), key=lambda r: r["g6"])
        deduped = []
        for row in rows:
            if not deduped or deduped[-1]["g6"] != row["g6"]:
                deduped.append(row)
        return deduped
    if n > NATIVE_MAX_ORDER:
        raise ValueError(
            f"native classification covers n <= {NATIVE_MAX_ORDER}; "
            f"supply an external graph6 stream for n = {n}"
        )
    if space == "all":
        rows = sorted((_classify_one(g) for g in enumerate_graphs(n)), key=lambda r: r["g6"])
    else:
        rows = _classify_connected_native(n, shards=shards, jobs=jobs)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = _cache_path(cache_dir, space, n)
        with open(path, "w", encoding="ascii") as fh:
            fh.write(json.dumps({"schema": CLASSIFY_SCHEMA, "space": space, "n": n}) + "\n")
            for row in rows:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    return rows


def _space_descriptor(space: str, lo: int, hi: int, source: str | None) -> str:
    base = f"file:{source}" if source else "native"
    return f"{base}:{space}:n={lo}..{hi}"


# -- smallest order with both position numbers ----------------------------------------


def mu(
    a: int,
    b: int,
    n_cap: int = 8,
    *,
    source: str | None = None,
    space: str = "connected",
    cache_dir: str | None = None,
    shards: int = 1,
    jobs: int = 1,
) -> SearchRecord:
    """Smallest order of a graph with mp-number a and gp-number b, with count."""
    if not 2 <= a <= b:
        raise ValueError("need 2 <= a <= b")
    start = a if a == b else b
    params = {"a": a, "b": b, "cap": n_cap}
    anomalies: list[str] = []
    for n in range(start, n_cap + 1):
        rows = classify_order(n, space=space, source=source, cache_dir=cache_dir,
                              shards=shards, jobs=jobs)
        hits = [r for r in rows if r["mp"] == a and r["gp"] == b]
        if hits and a < b and n < b + 2:
            anomalies.append(f"witness of order {n} < b+2 contradicts the lower bound")
        if hits:
            witnesses = [r["g6"] for r in hits]
            return SearchRecord(
                kind="mu", params=params, value=n, status="exact",
                witness_count=len(hits), witnesses=witnesses[:WITNESS_CAP],
                search_space=_space_descriptor(space, start, n, source),
                anomalies=anomalies,
            )
    return SearchRecord(
        kind="mu", params=params, value=None, status=f"unknown>={n_cap + 1}",
        witness_count=0, witnesses=[],
        search_space=_space_descriptor(space, start, n_cap, source),
        anomalies=anomalies,
        notes="no witness up to the scanned cap",
    )


def mu_upper_bound(a: int, b: int) -> tuple[int, str] | None:
    """Constructive upper bound on the smallest order, with its source family."""
    if a == b:
        return a, "complete"
    if a == 2:
        if b == 3:
            return 5, "cycle"
        return -(-3 * b // 2) + 1, "pagoda"
    if 2 * a >= b:
        return b + 2, "chalice"
    return b - a + 2 + -(-b // 2), "chalice"


# -- extremal sizes ----------------------------------------------------------------------


def _exhaustive_size_record(kind: str, n: int, a: int, b: int | None, *, maximize: bool,
                            source, space, cache_dir) -> BoundsRecord:
    rows = classify_order(n, space=space, source=source, cache_dir=cache_dir)

    def match(r):
        if r["mp" if kind != "gex" else "gp"] != a:
            return False
        if b is not None and r["gp"] != b:
            return False
        return True

    sizes = [r["m"] for r in rows if match(r)]
    params = {"n": n, "a": a} | ({"b": b} if b is not None else {})
    space_desc = _space_descriptor(space, n, n, source)
    if not sizes:
        return BoundsRecord(kind=kind, params=params, lower=None, upper=None,
                            exact=False, status="unrealizable",
                            search_space=space_desc,
                            notes="no graph at this order has the requested numbers")
    best = max(sizes) if maximize else min(sizes)
    winners = [r["g6"] for r in rows if match(r) and r["m"] == best]
    return BoundsRecord(
        kind=kind, params=params, lower=best, upper=best, exact=True, value=best,
        witness_count=len(winners), witnesses=winners[:WITNESS_CAP],
        search_space=space_desc,
    )


def mex(n: int, a: int, mode: str = "exhaustive", *, source=None, space="connected",
        cache_dir=None) -> BoundsRecord:
    """Largest size of an order-n graph with mp-number a."""
    if not 2 <= a <= n:
        raise ValueError("need 2 <= a <= n")
    if mode == "exhaustive":
        return _exhaustive_size_record("mex", n, a, None, maximize=True,
                                       source=source, space=space, cache_dir=cache_dir)
    upper = turan_size(n, a) if n <= a * a else turan_size(n, a) - 1
    upper_source = "turan-size" if n <= a * a else "turan-size-minus-one"
    lower = None
    lower_source = ""
    witnesses: list[str] = []
    if n <= a * a:
        g = turan(n, a)
        if g.n <= 64 and position_number(g, "mp").value == a:
            lower = g.m
            lower_source = f"family:turan({n},{a})"
            witnesses = [serialize_graph6(canonical_form(g))]
    else:
        g = turan_star(n, a)
        if g.is_connected() and g.n <= 64 and position_number(g, "mp").value == a:
            lower = g.m
            lower_source = f"family:turan_star({n},{a})"
            witnesses = [serialize_graph6(canonical_form(g))]
    return BoundsRecord(
        kind="mex", params={"n": n, "a": a}, lower=lower, upper=upper,
        exact=(lower is not None and lower == upper), value=lower if lower == upper else None,
        lower_source=lower_source, upper_source=upper_source,
        witness_count=len(witnesses), witnesses=witnesses,
        search_space="bounds",
    )


RAMSEY_TABLE = {(3, 4): 9}


@lru_cache(maxsize=1)
def ramsey_r34_verified() -> bool:
    """Re-derive R(3,4) = 9 by exhausting triangle-free graphs with
    independence number at most 3 (none exist on 9 vertices, some on 8)."""

    def good(g: Graph) -> bool:
        return clique_number(g) <= 2 and clique_number(g.complement()) <= 3

    return bool(enumerate_graphs(8, good)) and not enumerate_graphs(9, good)


def gex(n: int, a: int, mode: str = "exhaustive", *, source=None, space="connected",
        cache_dir=None) -> BoundsRecord:
    """Largest size of an order-n graph with gp-number a."""
    if not 2 <= a <= n:
        raise ValueError("need 2 <= a <= n")
    if mode == "exhaustive":
        return _exhaustive_size_record("gex", n, a, None, maximize=True,
                                       source=source, space=space, cache_dir=cache_dir)
    upper = None
    upper_source = ""
    if (a, a + 1) in RAMSEY_TABLE and ramsey_r34_verified():
        upper = n * (RAMSEY_TABLE[(a, a + 1)] - 1) // 2
        upper_source = f"ramsey:R({a},{a + 1})={RAMSEY_TABLE[(a, a + 1)]}"
    lower = None
    lower_source = ""
    witnesses: list[str] = []
    if n <= a * a:
        g = turan(n, a)
        if g.n <= 64 and position_number(g, "gp").value == a:
            lower, lower_source = g.m, f"family:turan({n},{a})"
            witnesses = [serialize_graph6(canonical_form(g))]
    elif a == 2:
        g = cycle_graph(4) if n == 4 else path_graph(n)
        if position_number(g, "gp").value == 2:
            lower, lower_source = g.m, "family:path" if n != 4 else "family:cycle"
            witnesses = [serialize_graph6(canonical_form(g))]
    else:
        g = turan_star(n, a)
        if g.is_connected() and g.n <= 64 and position_number(g, "gp").value == a:
            lower, lower_source = g.m, f"family:turan_star({n},{a})"
            witnesses = [serialize_graph6(canonical_form(g))]
    return BoundsRecord(
        kind="gex", params={"n": n, "a": a}, lower=lower, upper=upper,
        exact=(lower is not None and lower == upper), value=lower if lower == upper else None,
        lower_source=lower_source, upper_source=upper_source,
        witness_count=len(witnesses), witnesses=witnesses,
        search_space="bounds",
        notes="" if upper is not None else "no verified Ramsey bound for this a",
    )


def realizable(n: int, a: int, b: int) -> str:
    """Whether some order-n graph has mp-number a and gp-number b: yes/no/unknown."""
    if a == b:
        return "yes" if (a == n == 1) or 2 <= a <= n else "no"
    if not 2 <= a < b:
        return "no"
    if n <= b + 1:
        return "no"
    if a >= 3 and 2 * a >= b:
        return "yes"  # n >= b+2 established above
    if a >= 3:
        return "yes" if n >= b - a + 2 + -(-b // 2) else "unknown"
    if b == 3:
        return "yes" if n >= 5 else "no"
    return "yes" if n >= 2 * b + 1 else ("no" if n <= b + 1 else "unknown")


def _verified_construction(g: Graph, a: int, b: int) -> bool:
    return (g.n <= 64 and position_number(g, "mp").value == a
            and position_number(g, "gp").value == b)


def ex_minus(n: int, a: int, b: int, mode: str = "exhaustive", *, source=None,
             space="connected", cache_dir=None) -> BoundsRecord:
    """Smallest size of an order-n graph with mp-number a and gp-number b."""
    if not (2 <= a <= b):
        raise ValueError("need 2 <= a <= b")
    feasible = realizable(n, a, b)
    params = {"n": n, "a": a, "b": b}
    if feasible == "no":
        return BoundsRecord(kind="exminus", params=params, lower=None, upper=None,
                            exact=False, status="unrealizable",
                            notes="parameters not realizable at this order")
    if mode == "exhaustive":
        return _exhaustive_size_record("exminus", n, a, b, maximize=False,
                                       source=source, space=space, cache_dir=cache_dir)
    lower = n - 1 if a == b else n  # any graph with a < b has a cycle
    witnesses: list[str] = []
    upper = None
    upper_source = ""
    g = _ex_minus_construction(n, a, b)
    if g is not None and _verified_construction(g, a, b):
        upper = g.m
        upper_source = "construction"
        witnesses = [serialize_graph6(canonical_form(g))]
    return BoundsRecord(
        kind="exminus", params=params, lower=lower, upper=upper,
        exact=(upper is not None and lower == upper), value=upper if lower == upper else None,
        lower_source="spanning-connectivity" if a == b else "cycle-needed",
        upper_source=upper_source,
        witness_count=len(witnesses), witnesses=witnesses,
        search_space="bounds",
        status="ok" if feasible == "yes" else "unknown",
    )


def _ex_minus_construction(n: int, a: int, b: int) -> Graph | None:
    """A candidate smallest-size graph; callers re-verify its numbers."""
    if a == b:
        if n == a:
            return complete_graph(a)
        if a == 2:
            return path_graph(n)
        if a <= n - 2:
            return caterpillar(n, a)
        return star_graph(n - 1) if a == n - 1 else None
    if a == 2 and b == 3:
        return cycle_graph(n) if n >= 5 else None
    if b <= a + 1:
        return None
    t = a - 2
    if (b - a) % 2 == 0:
        r = (b - a) // 2 + 1
        base = 5 * r + 1 + t
        delta0 = 0
    else:
        r = (b - a + 3) // 2
        base = 5 * r + t
        delta0 = -1
    if n < base or r < 2:
        return None
    extra = n - base
    if t >= 1:
        return srt_with_tail(r, t, delta0, extra)
    return srt_adjusted(r, t, delta0 + extra)


# -- diameters ------------------------------------------------------------------------


def claimed_diameters(n: int, a: int) -> set[int]:
    """The diameter set realizable with order n and mp-number a."""
    if not 2 <= a <= n - 1:
        raise ValueError("need 2 <= a <= n-1")
    if a >= 3:
        return set(range(2, n - a + 2))
    out = set(range(3, n // 2 + 1))
    out.add(n - 1)
    if n in (3, 4, 5, 8) or n >= 11:
        out.add(2)
    return out


def _diameter_witness(n: int, a: int, D: int, *, cache_dir=None) -> Graph | None:
    if a >= 3:
        if D == n - a + 1 and a <= n - 2:
            return caterpillar(n, a)
        if a == n - 1 and D == 2:
            return starlike_tree(n - 1, 0, 0)
        if D == n - a:
            return flagellum_long(n, a)
        if 2 <= D <= n - a - 1:
            return flagellum(n, a, D)
        return None
    if D == n - 1:
        return path_graph(n)
    if D == 2:
        rec = diameter2_mp2_exists(n, cache_dir=cache_dir)
        if rec.witnesses:
            return parse_graph6(rec.witnesses[0])
        return None
    if n % 2 == 0 and D == n // 2:
        return cycle_graph(n)
    if D == 3 and n >= 5:
        return turan_star(n, 2)
    r = 3 + -(-n // 2) - D
    if 4 <= r and n >= 2 * r + 1:
        return half_wheel(n, r)
    if D == -(-n // 2) - 1 and n >= 7:
        return half_wheel(n, 3)
    return None


def achievable_diameters(n: int, a: int, mode: str = "exhaustive", *, source=None,
                         cache_dir=None) -> set[int]:
    """Diameters realized by order-n graphs with mp-number a."""
    if not 2 <= a <= n - 1:
        raise ValueError("need 2 <= a <= n-1")
    if mode == "exhaustive":
        rows = classify_order(n, source=source, cache_dir=cache_dir)
        return {r["diam"] for r in rows if r["mp"] == a and r["diam"] is not None}
    out = set()
    for D in claimed_diameters(n, a):
        g = _diameter_witness(n, a, D, cache_dir=cache_dir)
        if g is not None and position_number(g, "mp").value == a and diameter(g) == D:
            out.add(D)
    return out


def search_diameters(n: int, a: int, mode: str = "exhaustive", *, source=None,
                     cache_dir=None) -> SearchRecord:
    params = {"n": n, "a": a, "mode": mode}
    if mode == "exhaustive":
        rows = classify_order(n, source=source, cache_dir=cache_dir)
        by_d: dict[int, str] = {}
        for r in rows:
            if r["mp"] == a and r["diam"] is not None and r["diam"] not in by_d:
                by_d[r["diam"]] = r["g6"]
        value = sorted(by_d)
        witnesses = [{"D": d, "g6": by_d[d]} for d in value]
        return SearchRecord(kind="diam", params=params, value=value, status="exact",
                            witness_count=len(witnesses), witnesses=witnesses,
                            search_space=_space_descriptor("connected", n, n, source))
    witnesses = []
    for D in sorted(claimed_diameters(n, a)):
        g = _diameter_witness(n, a, D, cache_dir=cache_dir)
        if g is not None and position_number(g, "mp").value == a and diameter(g) == D:
            witnesses.append({"D": D, "g6": serialize_graph6(canonical_form(g))})
    return SearchRecord(kind="diam", params=params,
                        value=[w["D"] for w in witnesses], status="claimed",
                        witness_count=len(witnesses), witnesses=witnesses,
                        search_space="constructive")


def _diameter2_mp2_seed(r: int, *, cache_dir=None) -> Graph | None:
    if r <= NATIVE_MAX_ORDER:
        rows = classify_order(r, cache_dir=cache_dir)
        for row in rows:
            if row["mp"] == 2 and row["diam"] == 2:
                return parse_graph6(row["g6"])
        return None
    rec = circulant_diameter2_mp2(r)
    if rec.witnesses:
        return parse_graph6(rec.witnesses[0])
    if r >= 12:
        seed = _diameter2_mp2_seed(r // 3, cache_dir=cache_dir)
        if seed is not None:
            return _triple(seed, r)
    return None


def _triple(seed: Graph, n: int) -> Graph | None:
    r = seed.n
    if n == 3 * r:
        return g_double_prime_of_h(seed)
    if n == 3 * r + 1:
        return g_prime_of_h(seed)
    if n == 3 * r + 2:
        return g_of_h(seed)
    return None


def diameter2_mp2_exists(n: int, *, source=None, cache_dir=None) -> SearchRecord:
    """Is there an order-n graph with mp-number 2 and diameter 2?"""
    if n < 3:
        raise ValueError("need n >= 3")
    params = {"n": n}
    if n <= NATIVE_MAX_ORDER or source is not None:
        rows = classify_order(n, source=source, cache_dir=cache_dir)
        hits = [r["g6"] for r in rows if r["mp"] == 2 and r["diam"] == 2]
        return SearchRecord(kind="diam2", params=params,
                            value=int(bool(hits)),
                            status="exists" if hits else "not-exists",
                            witness_count=len(hits), witnesses=hits[:WITNESS_CAP],
                            search_space=_space_descriptor("connected", n, n, source))
    rec = circulant_diameter2_mp2(n)
    if rec.witnesses:
        return SearchRecord(kind="diam2", params=params, value=1, status="exists",
                            witness_count=rec.witness_count, witnesses=rec.witnesses,
                            search_space="circulant-search")
    seed = _diameter2_mp2_seed(n // 3, cache_dir=cache_dir) if n >= 12 else None
    g = _triple(seed, n) if seed is not None else None
    if g is not None and position_number(g, "mp").value == 2 and diameter(g) == 2:
        return SearchRecord(kind="diam2", params=params, value=1, status="exists",
                            witness_count=1,
                            witnesses=[serialize_graph6(canonical_form(g))],
                            search_space="tripling-construction")
    return SearchRecord(kind="diam2", params=params, value=None, status="unknown",
                        witness_count=0, witnesses=[],
                        search_space="native-cap-exceeded",
                        notes="supply an external stream to settle this order")


def circulant_diameter2_mp2(n: int) -> SearchRecord:
    """Scan every circulant of order n for diameter 2 with mp-number 2."""
    if n < 3:
        raise ValueError("need n >= 3")
    half = n // 2
    seen: set[bytes] = set()
    hits: list[str] = []
    scanned = 0
    for k in range(1, half + 1):
        for conns in combinations(range(1, half + 1), k):
            g = circulant(n, conns)
            code = canonical_code(g)
            if code in seen:
                continue
            seen.add(code)
            scanned += 1
            if not g.is_connected() or diameter(g) != 2:
                continue
            if clique_number(g) > 2:
                continue  # a triangle forces mp >= 3
            if position_number(g, "mp").value == 2:
                hits.append(code.decode("ascii"))
    hits.sort()
    return SearchRecord(
        kind="circulant", params={"n": n}, value=int(bool(hits)),
        status="exists" if hits else "not-exists",
        witness_count=len(hits), witnesses=hits[:WITNESS_CAP],
        search_space=f"circulant:n={n}:classes={scanned}",
    )


# -- record re-verification ---------------------------------------------------------


def verify_record(rec) -> list[str]:
    """Recompute every stored witness's numbers; return failure descriptions."""
    fails: list[str] = []

    def num(g, kind):
        return position_number(g, kind).value

    if rec.kind == "mu":
        a, b = rec.params["a"], rec.params["b"]
        for w in rec.witnesses:
            g = parse_graph6(w)
            if g.n != rec.value or num(g, "mp") != a or num(g, "gp") != b:
                fails.append(f"mu witness {w} fails")
    elif rec.kind in ("mex", "gex"):
        if rec.exact:
            a = rec.params["a"]
            kind = "mp" if rec.kind == "mex" else "gp"
            for w in rec.witnesses:
                g = parse_graph6(w)
                if g.m != rec.value or num(g, kind) != a:
                    fails.append(f"{rec.kind} witness {w} fails")
    elif rec.kind == "exminus":
        if getattr(rec, "exact", False):
            a, b = rec.params["a"], rec.params["b"]
            for w in rec.witnesses:
                g = parse_graph6(w)
                if g.m != rec.value or num(g, "mp") != a or num(g, "gp") != b:
                    fails.append(f"exminus witness {w} fails")
    elif rec.kind == "diam":
        a = rec.params["a"]
        for w in rec.witnesses:
            g = parse_graph6(w["g6"])
            if num(g, "mp") != a or diameter(g) != w["D"]:
                fails.append(f"diameter witness {w['g6']} fails for D={w['D']}")
    elif rec.kind in ("diam2", "circulant"):
        for w in rec.witnesses:
            g = parse_graph6(w)
            if num(g, "mp") != 2 or diameter(g) != 2:
                fails.append(f"{rec.kind} witness {w} fails")
    return fails


# -- family claims checking -----------------------------------------------------------


def check_family_claims(g: Graph, claims: FamilyClaims, *, label: str = "") -> list[str]:
    """Verify a claims record against the engine; failures carry certificates."""
    fails = []
    tag = f"{label}: " if label else ""
    g6 = serialize_graph6(canonical_form(g))
    if claims.order is not None and g.n != claims.order:
        fails.append(f"{tag}order {g.n} != {claims.order} [{g6}]")
    if claims.mp is not None:
        w = position_number(g, "mp")
        if w.value != claims.mp:
            members = ",".join(map(str, sorted(w.members)))
            fails.append(f"{tag}mp {w.value} != {claims.mp} (witness set {members}) [{g6}]")
    if claims.gp is not None:
        w = position_number(g, "gp")
        if w.value != claims.gp:
            members = ",".join(map(str, sorted(w.members)))
            fails.append(f"{tag}gp {w.value} != {claims.gp} (witness set {members}) [{g6}]")
    if claims.diameter is not None:
        d = diameter(g)
        if d != claims.diameter:
            fails.append(f"{tag}diameter {d} != {claims.diameter} [{g6}]")
    return fails


def verify_family(name: str, params, h: Graph | None = None) -> list[str]:
    g = build_family(name, params, h=h)
    claims = family_claims(name, params, h=h)
    if claims is None:
        return []
    return check_family_claims(g, claims, label=f"{name}{tuple(params)}")


# -- theorem suites ----------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    profile: str
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)


def _random_tree(rng: Random, n: int) -> Graph:
    if n == 1:
        return complete_graph(1)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def _random_connected(rng: Random, n: int) -> Graph:
    g = _random_tree(rng, n)
    extra = rng.randrange(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            g = g.with_edge(u, v)
    return g


def _suite_tree_leaf_number(full: bool) -> tuple[int, list[str]]:
    rng = Random(20240901)
    cases = 500 if full else 120
    fails = []
    for _ in range(cases):
        t = _random_tree(rng, rng.randint(2, 10))
        expect = leaf_count(t)
        got_mp = position_number(t, "mp").value
        got_gp = position_number(t, "gp").value
        if got_mp != expect or got_gp != expect:
            fails.append(f"tree {serialize_graph6(t)}: mp={got_mp} gp={got_gp} leaves={expect}")
    return cases, fails


def _suite_pagoda(full: bool, fault: str | None = None) -> tuple[int, list[str]]:
    fails = []
    grid = (3, 4, 5) if full else (3,)
    for r in grid:
        g = pagoda(r)
        if fault == "pagoda":
            g = g.with_edge(0, r)  # corrupt one layer edge
        fails += check_family_claims(g, pagoda_claims(r), label=f"pagoda({r})")
        fails += check_family_claims(pagoda_prime(r), pagoda_prime_claims(r),
                                     label=f"pagoda_prime({r})")
    uniq = (3, 4) if full else (3,)
    for r in uniq:
        g = pagoda(r)
        if fault == "pagoda":
            g = g.with_edge(0, r)
        sets = optimal_position_sets(g, "gp")
        expect = frozenset(range(r)) | frozenset(range(2 * r, 3 * r))
        if sets != [expect]:
            fails.append(f"pagoda({r}): optimal gp-sets {len(sets)}, expected unique A+C")
    return len(grid) * 2 + len(uniq), fails


def _suite_join_formula(full: bool) -> tuple[int, list[str]]:
    rng = Random(20240902)
    cases = 500 if full else 80
    fails = []
    for _ in range(cases):
        g = _random_connected(rng, rng.randint(1, 6))
        h = _random_connected(rng, rng.randint(1, 6))
        jg = join(g, h)
        wg, wh = clique_number(g), clique_number(h)
        want_mp = max(wg + wh, position_number(g, "mp").value, position_number(h, "mp").value)
        want_gp = max(wg + wh, independent_clique_number(g), independent_clique_number(h))
        got_mp = position_number(jg, "mp").value
        got_gp = position_number(jg, "gp").value
        if got_mp != want_mp or got_gp != want_gp:
            fails.append(f"join {serialize_graph6(g)} v {serialize_graph6(h)}: "
                         f"mp {got_mp}/{want_mp} gp {got_gp}/{want_gp}")
    return cases, fails


def _chalice_grid(max_order: int):
    for r in range(0, max_order):
        for s in range(0, max_order):
            for t in range(0, max_order):
                order = r + 2 * s + t + 2
                if order > max_order:
                    continue
                if (t >= 1 and r + s >= 2) or (t == 0 and r + s >= 3):
                    yield r, s, t


def _suite_chalice(full: bool) -> tuple[int, list[str]]:
    cap = 16 if full else 12
    fails = []
    cases = 0
    for r, s, t in _chalice_grid(cap):
        cases += 1
        fails += check_family_claims(chalice(r, s, t), chalice_claims(r, s, t),
                                     label=f"chalice({r},{s},{t})")
    return cases, fails


def _suite_mas(full: bool) -> tuple[int, list[str]]:
    cap = 14 if full else 11
    fails = []
    cases = 0
    for r in range(2, cap):
        for s in range(r // 2, cap):
            if r + s + 2 > cap:
                continue
            cases += 1
            fails += check_family_claims(mas(r, s), mas_claims(r, s), label=f"mas({r},{s})")
    return cases, fails


def _suite_mu_lower_bound(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    cap = 8 if full else 6
    fails = []
    cases = 0
    for n in range(2, cap + 1):
        for row in classify_order(n, cache_dir=cache_dir):
            if row["mp"] < row["gp"]:
                cases += 1
                if n < row["gp"] + 2:
                    fails.append(f"{row['g6']}: mp<gp at order {n} < gp+2")
    return cases, fails


def _suite_mu_upper_bounds(full: bool) -> tuple[int, list[str]]:
    fails = []
    cases = 0
    bcap = 8 if full else 6
    for a in range(2, bcap + 1):
        g = complete_graph(a)
        cases += 1
        if position_number(g, "mp").value != a or position_number(g, "gp").value != a:
            fails.append(f"K_{a} position numbers off")
    for b in range(4, bcap + 1):
        for a in range(3, b):
            if 2 * a < b:
                continue
            cases += 1
            g = chalice(2 * a - b, b - a, 0)
            fails += check_family_claims(
                g, FamilyClaims(order=b + 2, mp=a, gp=b), label=f"chalice-order-b+2({a},{b})")
    return cases, fails


def _suite_pendant_preservation(full: bool) -> tuple[int, list[str]]:
    rng = Random(20240903)
    target = 500 if full else 60
    fails = []
    cases = 0
    attempts = 0
    while cases < target and attempts < target * 60:
        attempts += 1
        g = _random_connected(rng, rng.randint(3, 8))
        ext = extreme_vertices(g)
        if not ext:
            continue
        mp_sets = optimal_position_sets(g, "mp")
        gp_sets = optimal_position_sets(g, "gp")
        pick = None
        for v in ext:
            if any(v in s for s in mp_sets) and any(v in s for s in gp_sets):
                pick = v
                break
        if pick is None:
            continue
        cases += 1
        g2 = add_pendant(g, pick)
        if (position_number(g2, "mp").value != len(mp_sets[0])
                or position_number(g2, "gp").value != len(gp_sets[0])):
            fails.append(f"pendant at {pick} on {serialize_graph6(g)} changed a number")
    if cases < target:
        fails.append(f"only {cases} qualifying instances generated")
    return cases, fails


def _suite_half_wheel(full: bool) -> tuple[int, list[str]]:
    cap = 17 if full else 13
    fails = []
    cases = 0
    for b in range(3, cap // 2 + 1):
        for n in range(2 * b + 1, cap + 1):
            cases += 1
            fails += check_family_claims(half_wheel(n, b), half_wheel_claims(n, b),
                                         label=f"half_wheel({n},{b})")
    return cases, fails


def _suite_multipartite(full: bool) -> tuple[int, list[str]]:
    rng = Random(20240904)
    cases = 500 if full else 60
    fails = []
    for _ in range(cases):
        parts = rng.randint(2, 5)
        sizes = sorted((rng.randint(1, 5) for _ in range(parts)), reverse=True)
        while sum(sizes) > 10:
            sizes[0] -= 1
            sizes.sort(reverse=True)
        g = complete_multipartite_graph(sizes)
        want = max(sizes[0], len(sizes))
        if (position_number(g, "mp").value != want
                or position_number(g, "gp").value != want):
            fails.append(f"multipartite {sizes}: expected {want}")
    return cases, fails


def _suite_turan_star(full: bool) -> tuple[int, list[str]]:
    cap = 14 if full else 10
    fails = []
    cases = 0
    for n in range(4, cap + 1):
        for a in range(2, n + 1):
            g = turan_star(n, a)
            cases += 1
            if g.m != turan_star_size(n, a):
                fails.append(f"turan_star({n},{a}): size {g.m} != {turan_star_size(n, a)}")
            if n >= a * a + 1:
                fails += check_family_claims(g, turan_star_claims(n, a),
                                             label=f"turan_star({n},{a})")
            tg = turan(n, a)
            if tg.m != turan_size(n, a):
                fails.append(f"turan({n},{a}): size {tg.m} != {turan_size(n, a)}")
            fails += check_family_claims(tg, turan_claims(n, a), label=f"turan({n},{a})")
    return cases, fails


def _suite_mex_mp2(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    ns = (6, 7, 8) if full else (6, 7)
    fails = []
    for n in ns:
        want = -(-((n - 1) ** 2) // 4)
        rec = mex(n, 2, cache_dir=cache_dir)
        if rec.value != want:
            fails.append(f"mex({n};2) = {rec.value}, expected {want}")
    return len(ns), fails


def _suite_gex_bound(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    cap = 8 if full else 7
    fails = []
    cases = 0
    for n in range(4, cap + 1):
        for row in classify_order(n, cache_dir=cache_dir):
            if row["gp"] == 3:
                cases += 1
                if row["m"] > 4 * n:
                    fails.append(f"{row['g6']}: size {row['m']} above 4n")
    if full and not ramsey_r34_verified():
        fails.append("R(3,4)=9 re-verification failed")
        cases += 1
    return cases, fails


def _suite_srt(full: bool) -> tuple[int, list[str]]:
    grid = [(r, t) for r in (2, 3) for t in range(4)] if full else [(2, 0), (2, 1)]
    fails = []
    for r, t in grid:
        fails += check_family_claims(srt(r, t), srt_claims(r, t), label=f"srt({r},{t})")
    return len(grid), fails


def _suite_diameters_large_mp(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    cap = 8 if full else 7
    fails = []
    cases = 0
    for n in range(4, cap + 1):
        for a in range(3, n):
            cases += 1
            got = achievable_diameters(n, a, cache_dir=cache_dir)
            want = claimed_diameters(n, a)
            if got != want:
                fails.append(f"diameters n={n} a={a}: exhaustive {sorted(got)} "
                             f"!= claimed {sorted(want)}")
            built = achievable_diameters(n, a, mode="constructive", cache_dir=cache_dir)
            if built != want:
                fails.append(f"diameters n={n} a={a}: constructive {sorted(built)} incomplete")
    return cases, fails


def _suite_diameters_mp2(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    cap = 9 if full else 7
    fails = []
    cases = 0
    for n in range(3, cap + 1):
        cases += 1
        got = achievable_diameters(n, 2, cache_dir=cache_dir)
        want = claimed_diameters(n, 2)
        if got != want:
            fails.append(f"diameters n={n} a=2: exhaustive {sorted(got)} != {sorted(want)}")
    return cases, fails


def _suite_tripling(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    fails = []
    seeds = [cycle_graph(4)]
    if full:
        rows = classify_order(5, cache_dir=cache_dir)
        seeds += [parse_graph6(r["g6"]) for r in rows if r["mp"] == 2 and r["diam"] == 2]
    cases = 0
    for h in seeds:
        for builder, drop in ((g_of_h, 0), (g_prime_of_h, 1), (g_double_prime_of_h, 2)):
            cases += 1
            fails += check_family_claims(builder(h), tripling_claims(h, drop),
                                         label=f"tripling(order {h.n}, drop {drop})")
    return cases, fails


def _suite_diameter2_existence(full: bool, cache_dir=None) -> tuple[int, list[str]]:
    cap = 9 if full else 7
    fails = []
    cases = 0
    for n in range(3, cap + 1):
        cases += 1
        rec = diameter2_mp2_exists(n, cache_dir=cache_dir)
        want = "exists" if n in (3, 4, 5, 8) else "not-exists"
        if rec.status != want:
            fails.append(f"diameter-2 existence at n={n}: {rec.status} != {want}")
    return cases, fails


def _suite_circulant(full: bool) -> tuple[int, list[str]]:
    hi = 20 if full else 13
    fails = []
    cases = 0
    for n in range(11, hi + 1):
        cases += 1
        rec = circulant_diameter2_mp2(n)
        if rec.status != "exists":
            fails.append(f"no circulant witness at n={n}")
        else:
            bad = verify_record(rec)
            fails += bad
    return cases, fails


def _suite_flagella(full: bool) -> tuple[int, list[str]]:
    cap = 14 if full else 10
    fails = []
    cases = 0
    for n in range(5, cap + 1):
        for a in range(3, n - 1):
            if a <= n - 2:
                cases += 1
                fails += check_family_claims(caterpillar(n, a), caterpillar_claims(n, a),
                                             label=f"caterpillar({n},{a})")
            if n >= a + 2:
                cases += 1
                fails += check_family_claims(flagellum_long(n, a), flagellum_long_claims(n, a),
                                             label=f"flagellum_long({n},{a})")
            for D in range(2, n - a):
                cases += 1
                fails += check_family_claims(flagellum(n, a, D), flagellum_claims(n, a, D),
                                             label=f"flagellum({n},{a},{D})")
    return cases, fails


_SUITES = [
    ("tree-leaf-number", _suite_tree_leaf_number, False),
    ("pagoda-claims", _suite_pagoda, False),
    ("join-formula", _suite_join_formula, False),
    ("chalice-claims", _suite_chalice, False),
    ("mas-claims", _suite_mas, False),
    ("smallest-order-lower-bound", _suite_mu_lower_bound, True),
    ("smallest-order-constructions", _suite_mu_upper_bounds, False),
    ("pendant-preservation", _suite_pendant_preservation, False),
    ("half-wheel-claims", _suite_half_wheel, False),
    ("multipartite-position", _suite_multipartite, False),
    ("turan-claims", _suite_turan_star, False),
    ("max-size-mp2", _suite_mex_mp2, True),
    ("gex-linear-bound", _suite_gex_bound, True),
    ("chorded-cycle-claims", _suite_srt, False),
    ("flagella-caterpillar-claims", _suite_flagella, False),
    ("diameter-range-mp3plus", _suite_diameters_large_mp, True),
    ("diameter-range-mp2", _suite_diameters_mp2, True),
    ("tripling-construction", _suite_tripling, True),
    ("diameter2-existence", _suite_diameter2_existence, True),
    ("circulant-diameter2", _suite_circulant, False),
]


def verify_theorems(profile: str = "quick", *, cache_dir=None,
                    inject_fault: str | None = None) -> VerifyReport:
    """Run every claims/invariant suite at the chosen scale."""
    if profile not in ("quick", "full"):
        raise ValueError("profile must be quick or full")
    full = profile == "full"
    report = VerifyReport(profile=profile)
    for name, fn, takes_cache in _SUITES:
        t0 = time.perf_counter()
        if name == "pagoda-claims":
            cases, fails = fn(full, inject_fault)
        elif takes_cache:
            cases, fails = fn(full, cache_dir)
        else:
            cases, fails = fn(full)
        report.suites.append(SuiteResult(name=name, cases=cases, failures=fails,
                                         seconds=time.perf_counter() - t0))
    return report
