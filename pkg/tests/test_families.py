from __future__ import annotations

import pytest

from symgraph import families as fam, gf
from symgraph.analysis import regularity_profile
from symgraph.autgrp import are_isomorphic, canonical_form
from symgraph.graphs import bits, global_stats


def test_paley5_is_c5():
    assert are_isomorphic(fam.paley(5), fam.cycle(5))[0]
    assert regularity_profile(fam.paley(5)).strongly_regular == (5, 2, 0, 1)


def test_paley13_parameters():
    g = fam.paley(13)
    assert g.edge_count() == 39
    assert regularity_profile(g).strongly_regular == (13, 6, 2, 3)


def test_paley9_parameters():
    assert regularity_profile(fam.paley(9)).strongly_regular == (9, 4, 1, 2)


def test_paley_rejects_bad_congruence():
    with pytest.raises(ValueError, match="mod 4"):
        fam.paley(7)


def test_peisert9_parameters():
    assert regularity_profile(fam.peisert(9)).strongly_regular == (9, 4, 1, 2)


def test_peisert49_parameters():
    assert regularity_profile(fam.peisert(49)).strongly_regular == (49, 24, 11, 12)


def test_peisert49_not_isomorphic_to_paley49():
    assert canonical_form(fam.peisert(49)) != canonical_form(fam.paley(49))


def test_peisert_rejects_bad_parameters():
    with pytest.raises(ValueError):
        fam.peisert(13)
    with pytest.raises(ValueError):
        fam.peisert(27)


def test_paley_digraph_tournament():
    d = fam.paley_digraph(7)
    assert sorted(bits(d.adj[0])) == [1, 2, 4]
    mat = d.matrix()
    for u in range(7):
        for v in range(7):
            expected = 0 if u == v else 1
            assert mat[u][v] + mat[v][u] == expected


def test_paley_digraph_out_degree_11():
    d = fam.paley_digraph(11)
    assert {d.out_degree(u) for u in range(11)} == {5}


def test_paley_digraph_rejects():
    with pytest.raises(ValueError):
        fam.paley_digraph(13)


def test_hamming_2_3():
    g = fam.hamming(2, 3)
    stats = global_stats(g)
    assert g.n == 9 and stats.regular_valency == 4 and stats.diameter == 2


def test_hamming_5_2_is_5_cube():
    g = fam.hamming(5, 2)
    assert g.n == 32 and {g.degree(u) for u in range(32)} == {5}


def test_hamming_1_4_is_k4():
    assert are_isomorphic(fam.hamming(1, 4), fam.complete(4))[0]


def test_johnson_6_2():
    g = fam.johnson(6, 2)
    assert g.n == 15 and {g.degree(u) for u in range(15)} == {8}


def test_johnson_5_2():
    g = fam.johnson(5, 2)
    assert g.n == 10 and {g.degree(u) for u in range(10)} == {6}


def test_johnson_m_1_is_complete():
    assert are_isomorphic(fam.johnson(6, 1), fam.complete(6))[0]


@pytest.mark.parametrize("m,k", [(6, 2), (5, 2)])
def test_johnson_distance_law(m, k):
    # d(x, y) = j iff |x & y| = k - j, exhaustively
    import itertools

    from symgraph.graphs import bfs_distances

    subsets = sorted(itertools.combinations(range(m), k), key=lambda s: tuple(reversed(s)))
    g = fam.johnson(m, k)
    for i, s in enumerate(subsets):
        dist = bfs_distances(g, i)
        for j, t in enumerate(subsets):
            assert dist[j] == k - len(set(s) & set(t))


def test_octahedron():
    g = fam.complete_multipartite(3, 2)
    assert g.n == 6 and {g.degree(u) for u in range(6)} == {4}


def test_crown_9_valency():
    # K_{9,9} minus a perfect matching is 8-regular on 18 vertices
    g = fam.crown(9)
    assert g.n == 18 and {g.degree(u) for u in range(18)} == {8}


def test_cycle_girth():
    assert global_stats(fam.cycle(7)).girth == 7


def test_icosahedron_profile():
    g = fam.icosahedron()
    stats = global_stats(g)
    assert g.n == 12 and stats.regular_valency == 5
    assert stats.diameter == 3 and stats.girth == 3
    assert regularity_profile(g).amply_regular == (12, 5, 2, 2)


def test_biplane_parameters():
    g = fam.biplane_delta41()
    stats = global_stats(g)
    assert g.n == 14 and stats.bipartite and stats.regular_valency == 4
    assert regularity_profile(g).amply_regular == (14, 4, 0, 2)


def test_biplane_design_counts():
    # every pair of points lies in exactly two of the 4-element blocks
    blocks = []
    g = fam.biplane_delta41()
    for b in range(7, 14):
        blocks.append(set(g.neighbors(b)))
    assert all(len(b) == 4 for b in blocks)
    for p in range(7):
        for q in range(p + 1, 7):
            assert sum(1 for b in blocks if p in b and q in b) == 2


def test_k2_product_biplane():
    g = fam.cartesian_product_k2_biplane()
    prof = regularity_profile(g)
    assert prof.amply_regular == (28, 5, 0, 2) and prof.diameter == 4


def test_cayley_paley_13():
    f = gf.field_for_order(13)
    g = fam.cayley_additive(f, f.squares())
    assert g.adj == fam.paley(13).adj


def test_cayley_z6():
    assert are_isomorphic(fam.cayley_additive(6, {1, 5}), fam.cycle(6))[0]


def test_cayley_z5_complete():
    assert are_isomorphic(fam.cayley_additive(5, {1, 2, 3, 4}), fam.complete(5))[0]


def test_cayley_rejects():
    with pytest.raises(ValueError):
        fam.cayley_additive(6, {0, 1, 5})
    with pytest.raises(ValueError):
        fam.cayley_additive(6, {1})


@pytest.mark.parametrize("q", [5, 13, 17])
def test_paley_self_complementary(q):
    from symgraph.graphs import complement

    g = fam.paley(q)
    assert canonical_form(g) == canonical_form(complement(g))


@pytest.mark.parametrize("q", [5, 9, 13, 17])
def test_paley_taylor_precondition(q):
    prof = regularity_profile(fam.paley(q))
    v, k, lam, mu = prof.strongly_regular
    assert k == 2 * mu


def test_standard_dispatch():
    g = fam.standard("multipartite", [3, 2])
    assert g.n == 6
    with pytest.raises(ValueError):
        fam.standard("multipartite", [3])
    with pytest.raises(ValueError):
        fam.standard("mystery", [1])


def test_constructor_sanity(full_catalog):
    for name, g in full_catalog:
        stats = global_stats(g)
        assert stats.connected, name
        assert g.n >= 1
