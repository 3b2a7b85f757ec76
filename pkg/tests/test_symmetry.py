from __future__ import annotations

import pytest

from symgraph import families as fam
from symgraph.catalog import digraph_scheme_graph, sigma_prime
from symgraph.graphs import build_graph, global_stats
from symgraph.symmetry import (
    intersection_constants,
    is_locally_primitive,
    theorem_audit,
    transitivity_profile,
)


def test_icosahedron_profile():
    p = transitivity_profile(fam.icosahedron())
    assert p.vertex_transitive
    assert p.s_distance_transitive == {1: True, 2: True}
    assert p.s_arc_transitive[1] and not p.s_arc_transitive[2]
    assert p.two_geodesic_transitive
    assert p.distance_transitive
    assert p.locally_primitive
    assert p.aut_order == 120


def test_k44_two_arc_transitive():
    p = transitivity_profile(fam.complete_bipartite(4, 4))
    assert p.s_arc_transitive[2]


def test_johnson62_distance_but_not_2at():
    p = transitivity_profile(fam.johnson(6, 2))
    assert p.distance_transitive
    assert p.s_distance_transitive[2]
    assert not p.s_arc_transitive[2]


def test_complete_graph_not_2dt():
    # spheres beyond the diameter: never s-distance-transitive
    p = transitivity_profile(fam.complete(5))
    assert p.s_distance_transitive == {1: True, 2: False}


def test_profile_rejects_disconnected():
    with pytest.raises(ValueError):
        transitivity_profile(build_graph(4, [(0, 1), (2, 3)]))


def test_path_not_vertex_transitive():
    p = transitivity_profile(build_graph(3, [(0, 1), (1, 2)]))
    assert not p.vertex_transitive
    assert p.s_distance_transitive == {1: False, 2: False}


def test_locally_primitive_catalog_values():
    assert is_locally_primitive(fam.icosahedron())
    assert not is_locally_primitive(fam.hamming(2, 3))
    assert not is_locally_primitive(fam.complete_multipartite(3, 2))
    assert is_locally_primitive(fam.cycle(6))
    assert is_locally_primitive(fam.complete_bipartite(5, 5))
    assert not is_locally_primitive(fam.paley(17))
    assert not is_locally_primitive(fam.paley(13))
    assert not is_locally_primitive(fam.johnson(5, 2))


def test_intersection_constants_icosahedron():
    cons = intersection_constants(fam.icosahedron(), 3)
    assert (cons[0].c, cons[0].a, cons[0].b) == (1, 2, 2)
    assert (cons[1].c, cons[1].a, cons[1].b) == (2, 2, 1)
    assert all(c.well_defined for c in cons)


def test_intersection_constants_crown9():
    # K_{9,9} - 9K2 has valency 8 and b1 = c2 = 7
    cons = intersection_constants(fam.crown(9), 2)
    assert cons[0].b == 7 and cons[1].c == 7


def test_intersection_constants_path():
    cons = intersection_constants(build_graph(3, [(0, 1), (1, 2)]), 2)
    assert cons[1].well_defined and cons[1].c == 1


def test_intersection_constants_witness_on_failure():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    cons = intersection_constants(g, 1)
    assert not cons[0].well_defined and cons[0].witness is not None


def test_theorem_audit_icosahedron():
    report = theorem_audit(fam.icosahedron())
    assert not report.violated
    rows = {r.statement: r for r in report.rows}
    assert rows["prime-valency-girth3"].verdict == "confirmed"
    assert rows["small-valency-dichotomy"].verdict == "confirmed"


def test_theorem_audit_taylor13():
    g = fam.taylor_extension(fam.paley(13))
    report = theorem_audit(g)
    assert not report.violated
    rows = {r.statement: r for r in report.rows}
    assert rows["prime-valency-girth3"].verdict == "confirmed"
    assert "2184" in rows["prime-valency-girth3"].detail


def test_theorem_audit_k88():
    report = theorem_audit(fam.complete_bipartite(8, 8))
    assert not report.violated
    rows = {r.statement: r for r in report.rows}
    assert rows["valency-p-plus-1-girth4"].verdict == "confirmed"
    assert rows["valency-p-plus-1-iff"].verdict == "confirmed"


def test_theorem_audit_whole_catalog(full_catalog):
    for name, g in full_catalog:
        report = theorem_audit(g)
        assert not report.violated, (name, [r.statement for r in report.violated])


def test_girth5_2dt_implies_2at(full_catalog):
    # with girth >= 5 each distance-2 pair is joined by a unique 2-arc
    for name, g in full_catalog:
        stats = global_stats(g)
        p = transitivity_profile(g)
        if (stats.girth or 0) >= 5 and p.s_distance_transitive.get(2, False):
            assert p.s_arc_transitive[2], name


def test_2at_implies_2dt(full_catalog):
    for name, g in full_catalog:
        p = transitivity_profile(g)
        complete = all(g.degree(u) == g.n - 1 for u in range(g.n))
        if p.s_arc_transitive.get(2, False) and not complete:
            assert p.s_distance_transitive.get(2, False), name


def test_2dt_constants_always_defined(full_catalog):
    for name, g in full_catalog:
        p = transitivity_profile(g)
        if p.s_distance_transitive.get(2, False):
            cons = intersection_constants(g, 2)
            assert all(c.well_defined for c in cons), name


def test_appendix_families_are_2at():
    for g in (sigma_prime(5), digraph_scheme_graph(7)):
        p = transitivity_profile(g)
        assert p.s_arc_transitive[2], g.name
