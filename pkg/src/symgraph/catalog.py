"""The built-in graph catalog the audit suites and property tests run over.

Construction is lazy and cached per process; automorphism searches dominate
the cost and several suites revisit the same graphs.
"""
from __future__ import annotations

from functools import lru_cache

from . import families as fam
from . import schemes
from .graphs import Graph, bipartite_double


def sigma_prime(q: int) -> Graph:
    """Bipartite double of the Taylor extension of the conference graph on
    GF(q): the amply regular (4q+4, q, 0, (q-1)/2) family member."""
    g = bipartite_double(fam.taylor_extension(fam.paley(q)))
    return Graph(g.n, g.adj, name=f"Sigma'({q})")


def sigma_prime_peisert(q: int) -> Graph:
    g = bipartite_double(fam.taylor_extension(fam.peisert(q)))
    return Graph(g.n, g.adj, name=f"Sigma'*({q})")


def digraph_scheme_graph(q: int) -> Graph:
    """Relation graph 1 of the 5-class scheme built from the Paley digraph."""
    ext = schemes.im_extension(fam.paley_digraph(q))
    if not ext.all_hold:
        raise AssertionError(f"extension identities failed at q={q}")
    bs, report = schemes.five_class(ext.cs)
    if not (report.valid and report.symmetric and report.classes == 5):
        raise AssertionError(f"five-class scheme invalid at q={q}: {report.failure}")
    g = schemes.relation_graph(bs, 1)
    return Graph(g.n, g.adj, name=f"SchemeD({q})")


def _builders():
    entries: list[tuple[str, object]] = []
    for n in (4, 5, 6, 7, 8):
        entries.append((f"C{n}", lambda n=n: fam.cycle(n)))
    for k in (3, 4, 5, 6, 7, 8):
        entries.append((f"K{{{k},{k}}}", lambda k=k: fam.complete_bipartite(k, k)))
    for n in (4, 5, 6, 7, 8, 9):
        entries.append((f"K{{{n},{n}}}-{n}K2", lambda n=n: fam.crown(n)))
    for m, b in ((3, 2), (4, 2), (3, 3), (5, 2), (3, 4)):
        entries.append((f"K{{{m}[{b}]}}", lambda m=m, b=b: fam.complete_multipartite(m, b)))
    entries += [
        ("J(5,2)", lambda: fam.johnson(5, 2)),
        ("J(6,2)", lambda: fam.johnson(6, 2)),
        ("H(2,3)", lambda: fam.hamming(2, 3)),
        ("Paley(13)", lambda: fam.paley(13)),
        ("Paley(17)", lambda: fam.paley(17)),
        ("Icosahedron", fam.icosahedron),
        ("Q5", lambda: fam.hypercube(5)),
        ("Delta4.1", fam.biplane_delta41),
        ("K2xDelta4.1", fam.cartesian_product_k2_biplane),
        ("Sigma'(5)", lambda: sigma_prime(5)),
        ("SchemeD(7)", lambda: digraph_scheme_graph(7)),
    ]
    return entries


@lru_cache(maxsize=1)
def catalog() -> tuple[tuple[str, Graph], ...]:
    """All catalog graphs as (name, graph) pairs, construction order fixed."""
    return tuple((name, make()) for name, make in _builders())


@lru_cache(maxsize=1)
def small_valency_catalog() -> tuple[tuple[str, Graph], ...]:
    """Members with valency at most 8: the dichotomy-audit universe."""
    out = []
    for name, g in catalog():
        degs = {g.degree(u) for u in range(g.n)}
        if len(degs) == 1 and degs.pop() <= 8:
            out.append((name, g))
    return tuple(out)
