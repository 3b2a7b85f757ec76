"""Transitivity classifiers: vertex/s-distance/s-arc/geodesic transitivity
and local primitivity, all computed against the full automorphism group.

Conventions follow the definitions the constructions are audited against:
s-distance-transitivity demands vertex transitivity plus stabilizer
transitivity on every sphere up to s, is reported false for s beyond the
diameter (so complete graphs are never 2-distance-transitive), and
2-geodesic-transitivity presupposes arc-transitivity on a non-complete
graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import autgrp, families
from .graphs import Graph, bfs_distances, bits, global_stats, is_connected
from .perms import Perm, bsgs_build, minimal_blocks, orbits, point_stabilizer, tuple_orbit_size


@dataclass
class TransitivityProfile:
    vertex_transitive: bool
    s_distance_transitive: dict[int, bool]
    s_arc_transitive: dict[int, bool]
    two_geodesic_transitive: bool
    distance_transitive: bool
    locally_primitive: bool
    aut_order: int
    diameter: int


def _count_s_arcs(g: Graph, s: int) -> int:
    """Number of s-arcs (walks with no immediate backtracking)."""
    if s == 0:
        return g.n
    counts = {(u, v): 1 for u in range(g.n) for v in bits(g.adj[u])}
    for _ in range(s - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (u, v), c in counts.items():
            for w in bits(g.adj[v]):
                if w != u:
                    key = (v, w)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(counts.values())


def _first_s_arc(g: Graph, s: int) -> tuple[int, ...] | None:
    """Lexicographically least s-arc, or None if none exists."""

    def extend(path: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(path) == s + 1:
            return path
        last = path[-1]
        prev = path[-2] if len(path) >= 2 else -1
        for w in bits(g.adj[last]):
            if w != prev:
                out = extend(path + (w,))
                if out is not None:
                    return out
        return None

    for u in range(g.n):
        got = extend((u,))
        if got is not None:
            return got
    return None


def _two_geodesics(g: Graph) -> tuple[int, tuple[int, int, int] | None]:
    """Count ordered 2-geodesics and return the least one."""
    count = 0
    first = None
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for u in nbrs:
            for w in nbrs:
                if u != w and not g.has_edge(u, w):
                    count += 1
                    cand = (u, v, w)
                    if first is None or cand < first:
                        first = cand
    return count, first


def _stab_orbit_cells(stab_gens: list[Perm], n: int) -> list[tuple[int, ...]]:
    if not stab_gens:
        return [(v,) for v in range(n)]
    return list(orbits(stab_gens, n).cells)


def transitivity_profile(g: Graph, s_max: int = 2, gens: list[Perm] | None = None) -> TransitivityProfile:
    """Full transitivity certificate for g under Aut(g)."""
    if not is_connected(g):
        raise ValueError("transitivity profile needs a connected graph")
    if gens is None:
        gens = autgrp.automorphism_generators(g)
    b = bsgs_build(gens, n=g.n)
    vertex_orbits = orbits(gens, g.n)
    vt = len(vertex_orbits.cells) == 1
    diameter = max(bfs_distances(g, 0)) if g.n else 0

    sdt: dict[int, bool] = {}
    dist_transitive = False
    if vt:
        stab = point_stabilizer(b, 0)
        cells = _stab_orbit_cells(stab, g.n)
        cell_of = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        dist = bfs_distances(g, 0)
        sphere_ok = []
        for i in range(1, diameter + 1):
            sphere = [v for v in range(g.n) if dist[v] == i]
            sphere_ok.append(len({cell_of[v] for v in sphere}) == 1)
        for s in range(1, min(s_max, diameter) + 1):
            sdt[s] = all(sphere_ok[:s])
        for s in range(diameter + 1, s_max + 1):
            sdt[s] = False  # beyond the diameter: never s-distance-transitive
        dist_transitive = diameter >= 1 and all(sphere_ok)
    else:
        for s in range(1, s_max + 1):
            sdt[s] = False

    sat: dict[int, bool] = {}
    for s in range(1, s_max + 1):
        total = _count_s_arcs(g, s)
        rep = _first_s_arc(g, s)
        if not vt or rep is None or total == 0:
            sat[s] = False
        else:
            sat[s] = tuple_orbit_size(gens, rep) == total

    complete = g.n >= 1 and all(g.degree(u) == g.n - 1 for u in range(g.n))
    geo_count, geo_rep = _two_geodesics(g)
    two_gt = (
        sat.get(1, False)
        and not complete
        and geo_rep is not None
        and tuple_orbit_size(gens, geo_rep) == geo_count
    )

    lp = _locally_primitive(g, gens, b, vertex_orbits)
    return TransitivityProfile(
        vertex_transitive=vt,
        s_distance_transitive=sdt,
        s_arc_transitive=sat,
        two_geodesic_transitive=two_gt,
        distance_transitive=dist_transitive,
        locally_primitive=lp,
        aut_order=b.order,
        diameter=diameter,
    )


def _locally_primitive(g: Graph, gens: list[Perm], b, vertex_orbits) -> bool:
    from .perms import action_restriction

    for cell in vertex_orbits.cells:
        u = cell[0]
        nbrs = g.neighbors(u)
        if not nbrs:
            return False
        stab = point_stabilizer(b, u)
        restricted, _ = action_restriction(stab, nbrs)
        if len(nbrs) == 1:
            continue  # trivial action on one point is primitive
        if not restricted:
            return False
        local_orbits = orbits(restricted, len(nbrs))
        if len(local_orbits.cells) != 1:
            return False
        _, primitive = minimal_blocks(restricted, len(nbrs))
        if not primitive:
            return False
    return True


def is_locally_primitive(g: Graph, gens: list[Perm] | None = None) -> bool:
    """True iff every vertex stabilizer acts primitively on its neighborhood."""
    if not is_connected(g):
        raise ValueError("local primitivity needs a connected graph")
    if gens is None:
        gens = autgrp.automorphism_generators(g)
    b = bsgs_build(gens, n=g.n)
    return _locally_primitive(g, gens, b, orbits(gens, g.n))


@dataclass
class IntersectionConstants:
    i: int
    c: int | None
    a: int | None
    b: int | None
    well_defined: bool
    witness: tuple[tuple[int, int], tuple[int, int]] | None = None


def intersection_constants(g: Graph, s: int) -> list[IntersectionConstants]:
    """c_i, a_i, b_i over all ordered pairs at distance i, for 1 <= i <= s.

    Each level reports whether all three counts are constant; on failure the
    witness carries two pairs that disagree.
    """
    if not is_connected(g):
        raise ValueError("intersection constants need a connected graph")
    diameter = max(bfs_distances(g, 0))
    out = []
    all_dist = [bfs_distances(g, u) for u in range(g.n)]
    for i in range(1, min(s, diameter) + 1):
        c = a = bb = None
        well = True
        witness = None
        first_pair = None
        for x in range(g.n):
            dist = all_dist[x]
            for y in range(g.n):
                if dist[y] != i:
                    continue
                ci = sum(1 for z in bits(g.adj[y]) if dist[z] == i - 1)
                ai = sum(1 for z in bits(g.adj[y]) if dist[z] == i)
                bi = sum(1 for z in bits(g.adj[y]) if dist[z] == i + 1)
                if c is None:
                    c, a, bb = ci, ai, bi
                    first_pair = (x, y)
                elif (ci, ai, bi) != (c, a, bb):
                    well = False
                    witness = (first_pair, (x, y))
                    break
            if not well:
                break
        if not well:
            c = a = bb = None
        out.append(IntersectionConstants(i, c, a, bb, well, witness))
    return out


@dataclass
class AuditRow:
    statement: str
    hypothesis: bool
    conclusion: bool | None
    verdict: str  # confirmed | vacuous | violated
    detail: str = ""


def _row(statement: str, hyp: bool, concl: bool | None, detail: str = "") -> AuditRow:
    if not hyp:
        return AuditRow(statement, False, None, "vacuous", detail)
    return AuditRow(statement, True, concl, "confirmed" if concl else "violated", detail)


@dataclass
class TheoremAuditReport:
    rows: list[AuditRow] = field(default_factory=list)

    @property
    def violated(self) -> list[AuditRow]:
        return [r for r in self.rows if r.verdict == "violated"]


def theorem_audit(g: Graph, profile: TransitivityProfile | None = None) -> TheoremAuditReport:
    """Check g against the classification statements it may fall under.

    Every row evaluates a hypothesis on concrete data and, when it holds,
    the matching conclusion; a violated row means a bug or a counterexample.
    """
    if not is_connected(g):
        raise ValueError("theorem audit needs a connected graph")
    stats = global_stats(g)
    if profile is None:
        profile = transitivity_profile(g, s_max=2)
    k = stats.regular_valency
    two_dt = profile.s_distance_transitive.get(2, False)
    two_at = profile.s_arc_transitive.get(2, False)
    cons = intersection_constants(g, 2)
    b1 = cons[0].b if cons and cons[0].well_defined else None
    c2 = cons[1].c if len(cons) > 1 and cons[1].well_defined else None
    a1 = cons[0].a if cons and cons[0].well_defined else None
    girth = stats.girth
    d = profile.diameter

    rows = []

    # prime valency, girth 3: forced to be the Paley-based Taylor graph
    hyp = two_dt and k is not None and _is_prime(k) and girth == 3
    concl = None
    detail = ""
    if hyp:
        if k % 4 != 1:
            concl = False
            detail = f"valency {k} != 1 mod 4"
        else:
            model = families.taylor_extension(families.paley(k))
            iso, _ = autgrp.are_isomorphic(g, model)
            order_ok = profile.aut_order == k * (k - 1) * (k + 1)
            concl = iso and order_ok
            detail = f"iso={iso}, |Aut|={profile.aut_order}"
    rows.append(_row("prime-valency-girth3", hyp, concl, detail))

    # valency p+1: 2-arc-transitive iff girth >= 4
    hyp = two_dt and k is not None and k >= 3 and _is_prime(k - 1)
    concl = (two_at == (girth is not None and girth >= 4)) if hyp else None
    rows.append(_row("valency-p-plus-1-iff", hyp, concl, f"2at={two_at}, girth={girth}"))

    # locally primitive with small valency: 2-arc-transitive or the icosahedron
    hyp = two_dt and profile.locally_primitive and k is not None and k <= 8
    concl = None
    if hyp:
        concl = two_at or autgrp.are_isomorphic(g, families.icosahedron())[0]
    rows.append(_row("small-valency-dichotomy", hyp, concl))

    # coprime side conditions force 2-geodesic-transitivity
    hyp = (
        two_dt
        and k is not None
        and k >= 2
        and b1 is not None
        and c2 is not None
        and _gcd(b1, k) == 1
        and c2 != 0
        and k % c2 == 0
    )
    concl = profile.two_geodesic_transitive if hyp else None
    rows.append(_row("coprime-implies-geodesic", hyp, concl, f"b1={b1}, c2={c2}"))

    # gcd(c2, k-1) = 1 forces girth 3 or 2-arc-transitivity
    hyp = two_dt and k is not None and k >= 2 and c2 is not None and _gcd(c2, k - 1) == 1
    concl = (girth == 3 or two_at) if hyp else None
    rows.append(_row("c2-coprime-girth-or-2at", hyp, concl))

    # valency p+1 and girth >= 4: 2-arc-transitive
    hyp = (
        two_dt
        and k is not None
        and k >= 3
        and _is_prime(k - 1)
        and girth is not None
        and girth >= 4
    )
    concl = two_at if hyp else None
    rows.append(_row("valency-p-plus-1-girth4", hyp, concl))

    # a1 = 1: not locally primitive
    hyp = two_dt and k is not None and k >= 3 and a1 == 1
    concl = (not profile.locally_primitive) if hyp else None
    rows.append(_row("a1-eq-1-not-lp", hyp, concl))

    # a1 >= c2 = 1: not locally primitive
    hyp = two_dt and k is not None and k >= 3 and c2 == 1 and a1 is not None and a1 >= 1
    concl = (not profile.locally_primitive) if hyp else None
    rows.append(_row("a1-ge-c2-eq-1-not-lp", hyp, concl))

    # c2 = 1: 2-arc-transitive, or neither 2-arc-transitive nor locally primitive
    hyp = two_dt and k is not None and k >= 3 and c2 == 1
    concl = None
    if hyp:
        concl = two_at or (not two_at and not profile.locally_primitive)
    rows.append(_row("c2-eq-1-dichotomy", hyp, concl))

    return TheoremAuditReport(rows)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
