"""Immutable simple graphs on 0..n-1 with bitset adjacency rows.

Row ``adj[u]`` is a Python int whose bit ``v`` is set iff ``u ~ v``.  All
transforms return fresh Graph values; nothing here mutates.  Vertex indexing
of every transform is fixed and documented so serialized outputs are
byte-stable:

* ``cartesian_product``: pair (a, b) gets index ``a * h.n + b`` (row-major).
* ``bipartite_double`` / ``taylor_double``: plus-copy of x is ``x``, the
  minus-copy is ``n + x``.
* ``cone``: the apex gets index ``n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


def bits(x: int):
    """Iterate the set-bit positions of x, ascending."""
    while x:
        lsb = x & -x
        yield lsb.bit_length() - 1
        x ^= lsb


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency is symmetric with empty diagonal."""

    n: int
    adj: tuple[int, ...]
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]


@dataclass(frozen=True)
class Digraph:
    """Directed graph; bit v of row u is the arc u -> v.  Loop-free."""

    n: int
    adj: tuple[int, ...]
    name: str = ""

    def out_degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u])]

    def matrix(self) -> list[list[int]]:
        return [[self.adj[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint cells covering 0..n-1."""

    cells: tuple[tuple[int, ...], ...]
    origin: str = "user"  # distance | orbits | scheme | user

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_index(self) -> list[int]:
        """Map vertex -> index of its cell."""
        out = [-1] * self.n
        for i, cell in enumerate(self.cells):
            for v in cell:
                out[v] = i
        return out


@dataclass(frozen=True)
class QuotientResult:
    quotient: Graph
    is_cover: bool
    witness: tuple[int, int] | None = None  # (vertex, cell index) on failure


def check_graph(g: Graph) -> None:
    """Raise if the adjacency is not symmetric, loop-free, and n-bounded."""
    mask = (1 << g.n) - 1
    if len(g.adj) != g.n:
        raise ValueError(f"adjacency has {len(g.adj)} rows for n={g.n}")
    for u in range(g.n):
        if g.adj[u] & ~mask:
            raise ValueError(f"row {u} has bits beyond vertex {g.n - 1}")
        if g.adj[u] >> u & 1:
            raise ValueError(f"loop at vertex {u}")
        for v in bits(g.adj[u]):
            if not g.adj[v] >> u & 1:
                raise ValueError(f"asymmetric pair ({u}, {v})")


def check_partition(part: VertexPartition, n: int) -> None:
    seen = 0
    for cell in part.cells:
        if not cell:
            raise ValueError("empty cell in partition")
        for v in cell:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range in partition")
            if seen >> v & 1:
                raise ValueError(f"vertex {v} appears in two cells")
            seen |= 1 << v
    if seen != (1 << n) - 1:
        missing = next(v for v in range(n) if not seen >> v & 1)
        raise ValueError(f"partition does not cover vertex {missing}")


def build_graph(n: int, edge_list, name: str = "") -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops rejected."""
    adj = [0] * n
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {u}) rejected")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def build_digraph(n: int, arc_list, name: str = "") -> Digraph:
    adj = [0] * n
    for u, v in arc_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise ValueError(f"loop arc ({u}, {u}) rejected")
        adj[u] |= 1 << v
    return Digraph(n, tuple(adj), name)


def relabel(g: Graph, perm) -> Graph:
    """Image of g under vertex map u -> perm[u]."""
    adj = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in bits(g.adj[u]):
            row |= 1 << perm[v]
        adj[perm[u]] = row
    return Graph(g.n, tuple(adj), g.name)


def bfs_distances(g: Graph, u: int) -> list[int]:
    """Distances from u; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[u] = 0
    seen = frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return -1 not in bfs_distances(g, 0)


def _girth(g: Graph) -> int | None:
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            if best is not None and dist[u] * 2 >= best:
                break
            for v in bits(g.adj[u]):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v and parent[v] != u:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop(0)
            for v in bits(g.adj[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    bipartite: bool
    diameter: int | None  # absent when disconnected
    girth: int | None  # absent for forests
    regular_valency: int | None  # present iff all degrees equal


def global_stats(g: Graph) -> GraphStats:
    connected = is_connected(g)
    diameter = None
    if connected and g.n > 0:
        diameter = max(max(bfs_distances(g, u)) for u in range(g.n))
    degs = {g.degree(u) for u in range(g.n)}
    valency = degs.pop() if len(degs) == 1 else None
    return GraphStats(
        connected=connected,
        bipartite=_is_bipartite(g),
        diameter=diameter,
        girth=_girth(g),
        regular_valency=valency,
    )


def distance_partition(g: Graph, u: int) -> VertexPartition:
    """Cells are the distance spheres around u, ordered by distance."""
    dist = bfs_distances(g, u)
    if -1 in dist:
        bad = dist.index(-1)
        raise ValueError(f"vertex {bad} unreachable from {u}")
    cells = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        cells[d].append(v)
    return VertexPartition(tuple(tuple(c) for c in cells), origin="distance")


def complement(g: Graph) -> Graph:
    mask = (1 << g.n) - 1
    adj = tuple((~g.adj[u] & mask) & ~(1 << u) for u in range(g.n))
    return Graph(g.n, adj, name=f"complement({g.name})" if g.name else "")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertices (a, b) with index a*h.n + b; box-product adjacency rule."""
    n = g.n * h.n
    adj = [0] * n
    for a in range(g.n):
        for b in range(h.n):
            row = 0
            for b2 in bits(h.adj[b]):
                row |= 1 << (a * h.n + b2)
            for a2 in bits(g.adj[a]):
                row |= 1 << (a2 * h.n + b)
            adj[a * h.n + b] = row
    return Graph(n, tuple(adj), name=f"{g.name or 'G'} x {h.name or 'H'}")


def bipartite_double(g: Graph) -> Graph:
    """(x, i) ~ (y, j) iff x ~ y and i != j; plus copy x, minus copy n+x."""
    n = g.n
    adj = [0] * (2 * n)
    for u in range(n):
        shifted = g.adj[u] << n
        adj[u] = shifted
        adj[n + u] = g.adj[u]
    return Graph(2 * n, tuple(adj), name=f"double({g.name})" if g.name else "")


def cone(g: Graph) -> Graph:
    """Add a new vertex (index n) adjacent to every vertex of g."""
    n = g.n
    apex = 1 << n
    adj = tuple(g.adj[u] | apex for u in range(n)) + ((1 << n) - 1,)
    return Graph(n + 1, adj, name=f"cone({g.name})" if g.name else "")


def taylor_double(g: Graph) -> Graph:
    """Signed double: for x != y, same-sign copies joined iff x ~ y and
    opposite-sign copies joined iff x !~ y.  No edge between x+ and x-."""
    n = g.n
    mask = (1 << n) - 1
    adj = [0] * (2 * n)
    for u in range(n):
        non = ~g.adj[u] & mask & ~(1 << u)
        adj[u] = g.adj[u] | (non << n)
        adj[n + u] = (g.adj[u] << n) | non
    return Graph(2 * n, tuple(adj), name=f"taylor_double({g.name})" if g.name else "")


def _srg_parameters(g: Graph):
    """(v, k, lam, mu) when g is strongly regular, else a failure reason."""
    if g.n == 0 or not is_connected(g):
        return None, "not connected"
    degs = {g.degree(u) for u in range(g.n)}
    if len(degs) != 1:
        return None, "not regular"
    k = degs.pop()
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None, "lambda not constant"
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None, "mu not constant"
    if mu is None or mu == 0:
        return None, "diameter exceeds 2"
    return (g.n, k, lam if lam is not None else 0, mu), None


def taylor_extension(delta: Graph) -> Graph:
    """Taylor double of a cone over delta.

    Requires delta strongly regular with k = 2*mu; the result is
    distance-regular on 2(v+1) vertices with array (v, v-k-1, 1; 1, v-k-1, v).
    """
    params, reason = _srg_parameters(delta)
    if params is None:
        raise ValueError(f"taylor_extension needs a strongly regular input: {reason}")
    v, k, lam, mu = params
    if k != 2 * mu:
        raise ValueError(
            f"taylor_extension needs k = 2*mu, got k={k}, mu={mu} on {delta.name or 'input'}"
        )
    out = taylor_double(cone(delta))
    return Graph(out.n, out.adj, name=f"taylor_extension({delta.name})" if delta.name else "")


def local_graph(g: Graph, u: int) -> Graph:
    """Induced subgraph on the neighbors of u, relabeled in ascending order."""
    nbrs = g.neighbors(u)
    pos = {v: i for i, v in enumerate(nbrs)}
    adj = [0] * len(nbrs)
    for i, v in enumerate(nbrs):
        for w in bits(g.adj[v] & g.adj[u]):
            adj[i] |= 1 << pos[w]
    return Graph(len(nbrs), tuple(adj), name=f"local({g.name}, {u})" if g.name else "")


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph, vertices relabeled in the given order."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    sel = 0
    for v in vs:
        sel |= 1 << v
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in bits(g.adj[v] & sel):
            adj[i] |= 1 << pos[w]
    return Graph(len(vs), tuple(adj))


def quotient_graph(g: Graph, part: VertexPartition) -> QuotientResult:
    """Quotient on the cells of part.

    Cells are adjacent iff some edge joins them.  The cover flag demands
    exactly one neighbor in every adjacent cell and no within-cell edge;
    within-cell edges never create quotient loops.
    """
    check_partition(part, g.n)
    cells = part.cells
    masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    cell_of = part.cell_index()
    k = len(cells)
    qadj = [0] * k
    for u in range(g.n):
        cu = cell_of[u]
        for v in bits(g.adj[u]):
            cv = cell_of[v]
            if cu != cv:
                qadj[cu] |= 1 << cv
    is_cover = True
    witness = None
    for u in range(g.n):
        cu = cell_of[u]
        if g.adj[u] & masks[cu]:
            is_cover, witness = False, (u, cu)
            break
        for cj in bits(qadj[cu]):
            if (g.adj[u] & masks[cj]).bit_count() != 1:
                is_cover, witness = False, (u, cj)
                break
        if not is_cover:
            break
    quotient = Graph(k, tuple(qadj), name=f"quotient({g.name})" if g.name else "")
    return QuotientResult(quotient, is_cover, witness)


# --- serialization ----------------------------------------------------------

def graph_to_json(g: Graph) -> str:
    """Canonical JSON: edges with u < v sorted lexicographically."""
    obj = {"n": g.n, "name": g.name, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    obj = json.loads(text)
    return build_graph(obj["n"], [tuple(e) for e in obj["edges"]], name=obj.get("name", ""))


def digraph_to_json(d: Digraph) -> str:
    obj = {"n": d.n, "name": d.name, "arcs": [[u, v] for u, v in d.arcs()]}
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def digraph_from_json(text: str) -> Digraph:
    obj = json.loads(text)
    return build_digraph(obj["n"], [tuple(a) for a in obj["arcs"]], name=obj.get("name", ""))


def graph_to_dot(g: Graph) -> str:
    lines = [f'graph "{g.name or "G"}" {{']
    for u in range(g.n):
        lines.append(f"  {u};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
