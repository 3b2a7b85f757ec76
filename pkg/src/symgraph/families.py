"""Constructors for the named graph families.

Field-based families (Paley, Peisert, Paley digraph) index vertices by the
lexicographic rank of the field element's coefficient vector; all other
constructors document their indexing inline.
"""
from __future__ import annotations

import itertools

from . import gf
from .graphs import (
    Digraph,
    Graph,
    build_digraph,
    build_graph,
    cartesian_product,
    taylor_extension,
)


def paley(q: int) -> Graph:
    """Square-difference graph on GF(q); strongly regular conference graph."""
    field = gf.field_for_order(q)
    if q % 4 != 1:
        raise ValueError(f"Paley graph needs q = 1 (mod 4), got q={q}")
    squares = field.squares()
    elems = field.elements()
    adj = [0] * q
    for i in range(q):
        for j in range(i + 1, q):
            if field.sub(elems[i], elems[j]) in squares:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(q, tuple(adj), name=f"Paley({q})")


def peisert(q: int) -> Graph:
    """Difference graph on GF(q) over {w^j : j = 0, 1 (mod 4)}, w primitive."""
    p, r = gf.factor_prime_power(q)
    if p % 4 != 3 or r % 2 != 0:
        raise ValueError(
            f"Peisert graph needs q = p^r with p = 3 (mod 4) and r even, got q={p}^{r}"
        )
    if q < 9:
        raise ValueError(f"Peisert graph needs q >= 9, got q={q}")
    field = gf.field_make(p, r)
    w = field.primitive_root()
    conn = set()
    acc = field.one
    for j in range(q - 1):
        if j % 4 in (0, 1):
            conn.add(acc)
        acc = field.mul(acc, w)
    # -1 = w^((q-1)/2) and (q-1)/2 = 0 (mod 4), so conn = -conn: undirected
    assert {field.neg(e) for e in conn} == conn
    elems = field.elements()
    adj = [0] * q
    for i in range(q):
        for j in range(i + 1, q):
            if field.sub(elems[i], elems[j]) in conn:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(q, tuple(adj), name=f"Peisert({q})")


def paley_digraph(q: int) -> Digraph:
    """Square-difference tournament on GF(q), q = 3 (mod 4): a -> b iff b - a
    is a nonzero square."""
    field = gf.field_for_order(q)
    if q % 4 != 3:
        raise ValueError(f"Paley digraph needs q = 3 (mod 4), got q={q}")
    squares = field.squares()
    elems = field.elements()
    adj = [0] * q
    for i in range(q):
        for j in range(q):
            if i != j and field.sub(elems[j], elems[i]) in squares:
                adj[i] |= 1 << j
    return Digraph(q, tuple(adj), name=f"PaleyDigraph({q})")


def hamming(d: int, n: int) -> Graph:
    """Words of length d over 0..n-1, joined when they differ in one spot.

    Vertex index is the base-n value of the word (first coordinate most
    significant).
    """
    if d < 1 or n < 2:
        raise ValueError(f"hamming needs d >= 1 and n >= 2, got d={d}, n={n}")
    size = n**d
    adj = [0] * size
    for v in range(size):
        for coord in range(d):
            shift = n ** (d - 1 - coord)
            digit = (v // shift) % n
            for other in range(n):
                if other != digit:
                    adj[v] |= 1 << (v + (other - digit) * shift)
    return Graph(size, tuple(adj), name=f"H({d},{n})")


def johnson(m: int, k: int) -> Graph:
    """k-subsets of 0..m-1 in colexicographic order, joined when the subsets
    share k-1 elements."""
    if m < 3 or not 1 <= k <= m // 2:
        raise ValueError(f"johnson needs m >= 3 and 1 <= k <= m/2, got m={m}, k={k}")
    subsets = sorted(
        itertools.combinations(range(m), k), key=lambda s: tuple(reversed(s))
    )
    index = {s: i for i, s in enumerate(subsets)}
    nv = len(subsets)
    adj = [0] * nv
    for i, s in enumerate(subsets):
        sset = set(s)
        for out in s:
            for into in range(m):
                if into not in sset:
                    t = tuple(sorted(sset - {out} | {into}))
                    adj[i] |= 1 << index[t]
    return Graph(nv, tuple(adj), name=f"J({m},{k})")


def complete(n: int) -> Graph:
    mask = (1 << n) - 1
    return Graph(n, tuple(mask & ~(1 << u) for u in range(n)), name=f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    adj = tuple(right for _ in range(m)) + tuple(left for _ in range(n))
    return Graph(m + n, adj, name=f"K{{{m},{n}}}")


def complete_multipartite(m: int, b: int) -> Graph:
    """m parts of size b, parts contiguous; edges across parts only."""
    if m < 2 or b < 1:
        raise ValueError(f"multipartite needs m >= 2 and b >= 1, got m={m}, b={b}")
    n = m * b
    mask = (1 << n) - 1
    adj = []
    for part in range(m):
        own = ((1 << b) - 1) << (part * b)
        adj.extend([mask & ~own] * b)
    return Graph(n, tuple(adj), name=f"K{{{m}[{b}]}}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def grid(m: int, n: int) -> Graph:
    g = cartesian_product(complete(m), complete(n))
    return Graph(g.n, g.adj, name=f"grid({m}x{n})")


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching; left i and right n+j joined iff i != j."""
    if n < 2:
        raise ValueError(f"crown needs n >= 2, got {n}")
    adj = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            if i != j:
                adj[i] |= 1 << (n + j)
                adj[n + j] |= 1 << i
    return Graph(2 * n, tuple(adj), name=f"K{{{n},{n}}}-{n}K2")


def hypercube(d: int) -> Graph:
    g = hamming(d, 2)
    return Graph(g.n, g.adj, name=f"Q{d}")


def icosahedron() -> Graph:
    """The icosahedron, realized as the Taylor extension of Paley(5)."""
    g = taylor_extension(paley(5))
    return Graph(g.n, g.adj, name="Icosahedron")


_FANO_LINES = [tuple(sorted(((i + 1) % 7, (i + 2) % 7, (i + 4) % 7))) for i in range(7)]


def biplane_delta41() -> Graph:
    """Point-block incidence graph of the square 2-(7,4,2) design.

    Points are 0..6, block vertices 7..13; block i is the complement of the
    Fano line {i+1, i+2, i+4} (mod 7).
    """
    edges = []
    for i, line in enumerate(_FANO_LINES):
        block = [pt for pt in range(7) if pt not in line]
        for pt in block:
            edges.append((pt, 7 + i))
    return build_graph(14, edges, name="Delta4.1")


def cartesian_product_k2_biplane() -> Graph:
    """K2 box Delta4.1: the 28-vertex member of the diameter-4 classification."""
    g = cartesian_product(complete(2), biplane_delta41())
    return Graph(g.n, g.adj, name="K2xDelta4.1")


def cayley_additive(group, connection) -> Graph:
    """Cayley graph over an additive group: GF(q) (a Field) or Z_n (an int).

    Requires 0 not in S and S = -S; vertex order is the field enumeration
    order, or 0..n-1 for Z_n.
    """
    if isinstance(group, int):
        n = group
        conn = {s % n for s in connection}
        if 0 in conn:
            raise ValueError("connection set contains 0")
        if {(-s) % n for s in conn} != conn:
            raise ValueError("connection set is not inverse-closed")
        edges = [(g, (g + s) % n) for g in range(n) for s in conn]
        return build_graph(n, edges, name=f"Cay(Z{n})")
    field: gf.Field = group
    conn = set(connection)
    if field.zero in conn:
        raise ValueError("connection set contains 0")
    if {field.neg(s) for s in conn} != conn:
        raise ValueError("connection set is not inverse-closed")
    elems = field.elements()
    edges = [
        (field.index(e), field.index(field.add(e, s))) for e in elems for s in conn
    ]
    return build_graph(field.q, edges, name=f"Cay(GF({field.q}))")


_STANDARD = {
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "multipartite": (complete_multipartite, 2),
    "cycle": (cycle, 1),
    "grid": (grid, 2),
    "crown": (crown, 1),
    "hypercube": (hypercube, 1),
}


def standard(name: str, params: list[int]) -> Graph:
    """Dispatch for the fixed-arity named families."""
    if name not in _STANDARD:
        raise ValueError(f"unknown standard family {name!r}")
    fn, arity = _STANDARD[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
