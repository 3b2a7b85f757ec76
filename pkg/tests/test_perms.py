from __future__ import annotations

import random

import pytest

from symgraph import families as fam
from symgraph.autgrp import automorphism_generators
from symgraph.graphs import distance_partition
from symgraph.perms import (
    Perm,
    action_restriction,
    bsgs_build,
    minimal_blocks,
    orbits,
    point_stabilizer,
    tuple_orbit_size,
)

from oracles import closure_order


def test_perm_basics():
    p = Perm([1, 2, 0])
    assert p(0) == 1 and (p * p)(0) == 2
    assert p.inv() * p == Perm.identity(3)
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_orbits_single_cycle():
    assert orbits([Perm([1, 2, 3, 4, 0])]).cells == ((0, 1, 2, 3, 4),)


def test_orbits_with_fixed_point():
    part = orbits([Perm([1, 0, 3, 2, 4])])
    assert part.cells == ((0, 1), (2, 3), (4,))


def test_orbits_icosahedron_antipodal_map():
    g = fam.icosahedron()
    # the unique antipodal automorphism: swap each vertex with its distance-3 mate
    img = list(range(12))
    for u in range(12):
        img[u] = distance_partition(g, u).cells[3][0]
    part = orbits([Perm(img)])
    assert len(part.cells) == 6 and all(len(c) == 2 for c in part.cells)


def test_bsgs_dihedral():
    assert bsgs_build([Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])]).order == 10


def test_bsgs_trivial():
    assert bsgs_build([], n=5).order == 1


def test_bsgs_icosahedron():
    gens = automorphism_generators(fam.icosahedron())
    assert bsgs_build(gens, n=12).order == 120


def test_bsgs_matches_closure_on_random_groups():
    rng = random.Random(20240801)
    for _ in range(300):
        n = rng.randint(2, 8)
        gens = [Perm(rng.sample(range(n), n)) for _ in range(2)]
        assert bsgs_build(gens).order == closure_order([g.img for g in gens])


def test_orbit_stabilizer_identity_on_random_groups():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(3, 8)
        gens = [Perm(rng.sample(range(n), n)) for _ in range(2)]
        b = bsgs_build(gens)
        orb0 = next(c for c in orbits(gens).cells if 0 in c)
        stab = bsgs_build(point_stabilizer(b, 0), n=n)
        assert stab.order * len(orb0) == b.order


def test_point_stabilizer_d5():
    b = bsgs_build([Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])])
    assert bsgs_build(point_stabilizer(b, 0), n=5).order == 2


def test_point_stabilizer_icosahedron():
    gens = automorphism_generators(fam.icosahedron())
    b = bsgs_build(gens, n=12)
    assert bsgs_build(point_stabilizer(b, 0), n=12).order == 10


def test_point_stabilizer_trivial_group():
    b = bsgs_build([], n=4)
    assert point_stabilizer(b, 2) == []


def test_membership():
    b = bsgs_build([Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])])
    assert b.contains(Perm([2, 3, 4, 0, 1]))
    assert not b.contains(Perm([1, 0, 2, 3, 4]))


def test_tuple_orbit_arc_of_c5():
    d10 = [Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])]
    assert tuple_orbit_size(d10, (0, 1)) == 10


def test_tuple_orbit_empty_tuple():
    assert tuple_orbit_size([Perm([1, 0])], ()) == 1


def test_tuple_orbit_singleton_matches_orbit():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 7)
        gens = [Perm(rng.sample(range(n), n)) for _ in range(2)]
        orb0 = next(c for c in orbits(gens).cells if 0 in c)
        assert tuple_orbit_size(gens, (0,)) == len(orb0)


def test_tuple_orbit_icosahedron_two_arc_types():
    # 240 ordered 2-arcs split into two orbits of 120: triangle type and
    # geodesic type (full enumeration over the order-120 group)
    g = fam.icosahedron()
    gens = automorphism_generators(g)
    nbrs0 = g.neighbors(0)
    triangle_arc = None
    geodesic_arc = None
    for v in nbrs0:
        for w in g.neighbors(v):
            if w == 0:
                continue
            if g.has_edge(0, w) and triangle_arc is None:
                triangle_arc = (0, v, w)
            if not g.has_edge(0, w) and geodesic_arc is None:
                geodesic_arc = (0, v, w)
    assert tuple_orbit_size(gens, triangle_arc) == 120
    assert tuple_orbit_size(gens, geodesic_arc) == 120


def test_minimal_blocks_c4():
    systems, primitive = minimal_blocks([Perm([1, 2, 3, 0])])
    assert not primitive
    nontrivial = [s for s in systems if not s.trivial]
    assert len(nontrivial) == 1
    assert nontrivial[0].blocks.cells == ((0, 2), (1, 3))


def test_minimal_blocks_prime_degree_always_primitive():
    rng = random.Random(3)
    found = 0
    while found < 20:
        gens = [Perm(rng.sample(range(5), 5)) for _ in range(2)]
        if len(orbits(gens).cells) != 1:
            continue
        found += 1
        _, primitive = minimal_blocks(gens)
        assert primitive


def test_minimal_blocks_icosahedron_antipodal():
    g = fam.icosahedron()
    gens = automorphism_generators(g)
    systems, primitive = minimal_blocks(gens)
    assert not primitive
    nontrivial = [s for s in systems if not s.trivial]
    assert len(nontrivial) == 1
    assert all(len(c) == 2 for c in nontrivial[0].blocks.cells)


def test_minimal_blocks_invariance():
    g = fam.icosahedron()
    gens = automorphism_generators(g)
    systems, _ = minimal_blocks(gens)
    for system in systems:
        cells = {frozenset(c) for c in system.blocks.cells}
        for gen in gens:
            for cell in system.blocks.cells:
                assert frozenset(gen(v) for v in cell) in cells


def test_minimal_blocks_rejects_intransitive():
    with pytest.raises(ValueError):
        minimal_blocks([Perm([1, 0, 2])])


def test_action_restriction_stabilizer_on_neighbors():
    g = fam.icosahedron()
    gens = automorphism_generators(g)
    b = bsgs_build(gens, n=12)
    stab = point_stabilizer(b, 0)
    restricted, faithful = action_restriction(stab, g.neighbors(0))
    assert faithful
    assert bsgs_build(restricted, n=5).order == 10
    assert len(orbits(restricted, 5).cells) == 1


def test_action_restriction_whole_set():
    d10 = [Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])]
    restricted, faithful = action_restriction(d10, range(5))
    assert faithful and [r.img for r in restricted] == [g.img for g in d10]


def test_action_restriction_not_faithful():
    s3 = [Perm([1, 0, 2, 3]), Perm([1, 2, 0, 3])]
    restricted, faithful = action_restriction(s3, [3])
    assert not faithful
    assert all(r.is_identity() for r in restricted)


def test_action_restriction_rejects_non_invariant():
    with pytest.raises(ValueError, match="not invariant"):
        action_restriction([Perm([1, 2, 0])], [0, 1])
