from __future__ import annotations

import pytest

from symgraph import families as fam
from symgraph.graphs import (
    VertexPartition,
    bipartite_double,
    build_graph,
    cartesian_product,
    check_graph,
    complement,
    cone,
    distance_partition,
    global_stats,
    graph_from_json,
    graph_to_json,
    local_graph,
    quotient_graph,
    taylor_double,
    taylor_extension,
)

from oracles import bfs_layers


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edge_count() == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_build_empty_pair_disconnected():
    g = build_graph(2, [])
    stats = global_stats(g)
    assert not stats.connected
    assert stats.diameter is None


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_global_stats_c4():
    stats = global_stats(fam.cycle(4))
    assert stats.connected and stats.bipartite
    assert stats.diameter == 2 and stats.girth == 4
    assert stats.regular_valency == 2


def test_global_stats_icosahedron(icosahedron_fixed_edges):
    g = build_graph(12, icosahedron_fixed_edges)
    stats = global_stats(g)
    assert stats.diameter == 3 and stats.girth == 3 and stats.regular_valency == 5


def test_global_stats_5cube_matches_bfs_oracle():
    g = fam.hypercube(5)
    layers = bfs_layers(g.n, g.edges(), 0)
    assert [len(x) for x in layers] == [1, 5, 10, 10, 5, 1]
    stats = global_stats(g)
    assert stats.diameter == 5 and stats.girth == 4 and stats.regular_valency == 5


def test_stats_forest_has_no_girth():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert global_stats(g).girth is None


def test_distance_partition_icosahedron():
    g = fam.icosahedron()
    for u in range(g.n):
        assert [len(c) for c in distance_partition(g, u).cells] == [1, 5, 5, 1]


def test_distance_partition_k4():
    assert [len(c) for c in distance_partition(fam.complete(4), 0).cells] == [1, 3]


def test_distance_partition_disconnected_names_vertex():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(ValueError, match="2"):
        distance_partition(g, 0)


def test_complement_involution():
    for g in (fam.paley(13), fam.johnson(5, 2), build_graph(4, [(0, 1)])):
        assert complement(complement(g)).adj == g.adj


def test_complement_k5_empty():
    assert complement(fam.complete(5)).edge_count() == 0


def test_complement_c5_self():
    from symgraph.autgrp import are_isomorphic

    assert are_isomorphic(complement(fam.cycle(5)), fam.cycle(5))[0]


def test_complement_grid_is_crown():
    from symgraph.autgrp import are_isomorphic

    assert are_isomorphic(complement(fam.grid(2, 4)), fam.crown(4))[0]


def test_cartesian_k2_k2_is_c4():
    from symgraph.autgrp import are_isomorphic

    assert are_isomorphic(cartesian_product(fam.complete(2), fam.complete(2)), fam.cycle(4))[0]


def test_cartesian_k3_k3_is_hamming():
    from symgraph.autgrp import canonical_form

    prod = cartesian_product(fam.complete(3), fam.complete(3))
    assert canonical_form(prod) == canonical_form(fam.hamming(2, 3))


def test_cartesian_k2_biplane_is_5_regular():
    g = fam.cartesian_product_k2_biplane()
    assert g.n == 28
    assert {g.degree(u) for u in range(g.n)} == {5}


def test_bipartite_double_k3_is_c6():
    from symgraph.autgrp import are_isomorphic

    assert are_isomorphic(bipartite_double(fam.complete(3)), fam.cycle(6))[0]


def test_bipartite_double_icosahedron_connected():
    g = bipartite_double(fam.icosahedron())
    stats = global_stats(g)
    assert stats.connected and g.n == 24 and stats.regular_valency == 5


def test_bipartite_double_c4_disconnected():
    assert not global_stats(bipartite_double(fam.cycle(4))).connected


def test_double_connectivity_rule(full_catalog):
    # connected iff the base is connected and non-bipartite
    for _, g in full_catalog:
        stats = global_stats(g)
        doubled = global_stats(bipartite_double(g))
        assert doubled.connected == (stats.connected and not stats.bipartite)


def test_cone_wheel():
    w = cone(fam.cycle(5))
    assert w.degree(5) == 5 and w.n == 6


def test_cone_paley5():
    g = cone(fam.paley(5))
    assert g.n == 6 and g.degree(5) == 5


def test_cone_single_vertex_gives_k2():
    g = cone(build_graph(1, []))
    assert g.edges() == [(0, 1)]


def test_taylor_double_single_vertex():
    g = taylor_double(build_graph(1, []))
    assert g.n == 2 and g.edge_count() == 0


def test_taylor_double_k2():
    # rule table over the 4 vertices: same-sign pairs keep the K2 edge,
    # opposite-sign pairs need a non-edge, and x+ never meets x-
    g = taylor_double(fam.complete(2))
    assert sorted(g.edges()) == [(0, 1), (2, 3)]


def test_taylor_double_of_cone_paley5_is_icosahedron(icosahedron_fixed_edges):
    from symgraph.autgrp import are_isomorphic

    doubled = taylor_double(cone(fam.paley(5)))
    fixed = build_graph(12, icosahedron_fixed_edges)
    assert are_isomorphic(doubled, fixed)[0]


def test_taylor_extension_icosahedron(icosahedron_fixed_edges):
    from symgraph.autgrp import are_isomorphic

    g = taylor_extension(fam.paley(5))
    assert g.n == 12
    assert are_isomorphic(g, build_graph(12, icosahedron_fixed_edges))[0]


def test_taylor_extension_paley13_array():
    from symgraph.analysis import regularity_profile

    g = taylor_extension(fam.paley(13))
    assert regularity_profile(g).distance_regular == ((13, 6, 1), (1, 6, 13))


def test_taylor_extension_paley9():
    g = taylor_extension(fam.paley(9))
    assert g.n == 20 and {g.degree(u) for u in range(20)} == {9}


@pytest.mark.parametrize("make", [lambda: fam.paley(5), lambda: fam.paley(9),
                                  lambda: fam.paley(13), lambda: fam.peisert(9)])
def test_taylor_extension_array_property(make):
    from symgraph.analysis import regularity_profile

    delta = make()
    v = delta.n
    k = delta.degree(0)
    g = taylor_extension(delta)
    assert g.n == 2 * (v + 1)
    assert regularity_profile(g).distance_regular == (
        (v, v - k - 1, 1),
        (1, v - k - 1, v),
    )


def test_taylor_extension_rejects_non_srg():
    # K_{3,3} is strongly regular but k != 2*mu
    with pytest.raises(ValueError, match="k = 2"):
        taylor_extension(fam.complete_bipartite(3, 3))
    # C6 is not strongly regular at all
    with pytest.raises(ValueError):
        taylor_extension(fam.cycle(6))


def test_local_graph_icosahedron_is_c5():
    from symgraph.autgrp import are_isomorphic

    g = fam.icosahedron()
    assert are_isomorphic(local_graph(g, 0), fam.cycle(5))[0]


def test_local_graph_hamming_2k2():
    g = fam.hamming(2, 3)
    loc = local_graph(g, 0)
    assert loc.n == 4
    assert sorted(loc.degree(u) for u in range(4)) == [1, 1, 1, 1]


def test_local_graph_complete_bipartite_empty():
    loc = local_graph(fam.complete_bipartite(4, 4), 0)
    assert loc.n == 4 and loc.edge_count() == 0


def test_quotient_icosahedron_antipodal_is_k6():
    from symgraph.autgrp import are_isomorphic

    g = fam.icosahedron()
    cells = []
    for u in range(g.n):
        part = distance_partition(g, u)
        antipode = part.cells[3][0]
        if u < antipode:
            cells.append((u, antipode))
    res = quotient_graph(g, VertexPartition(tuple(cells)))
    assert res.is_cover
    assert are_isomorphic(res.quotient, fam.complete(6))[0]


def test_quotient_c6_opposite_pairs_is_k3():
    g = fam.cycle(6)
    res = quotient_graph(g, VertexPartition(((0, 3), (1, 4), (2, 5))))
    assert res.is_cover
    assert res.quotient.edge_count() == 3


def test_quotient_k4_halves_not_cover():
    res = quotient_graph(fam.complete(4), VertexPartition(((0, 1), (2, 3))))
    assert not res.is_cover
    assert res.witness is not None
    assert res.quotient.edges() == [(0, 1)]


def test_quotient_singletons_identity():
    for g in (fam.cycle(4), build_graph(4, [(0, 1), (2, 3)]), build_graph(2, [(0, 1)])):
        part = VertexPartition(tuple((v,) for v in range(g.n)))
        res = quotient_graph(g, part)
        assert res.is_cover
        assert res.quotient.adj == g.adj


def test_quotient_rejects_bad_partition():
    with pytest.raises(ValueError):
        quotient_graph(fam.cycle(4), VertexPartition(((0, 1), (1, 2, 3))))
    with pytest.raises(ValueError):
        quotient_graph(fam.cycle(4), VertexPartition(((0, 1),)))


def test_transforms_stay_simple(full_catalog):
    for _, g in full_catalog:
        check_graph(g)
        check_graph(complement(g))
        check_graph(bipartite_double(g))
        check_graph(cone(g))
        check_graph(taylor_double(g))


def test_json_roundtrip_byte_identical(full_catalog):
    for _, g in full_catalog:
        text = graph_to_json(g)
        again = graph_to_json(graph_from_json(text))
        assert text == again


def test_json_edge_ordering():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert '"edges":[[0,1],[1,2]]' in graph_to_json(g)
