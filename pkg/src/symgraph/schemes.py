"""Association schemes as 0/1 relation matrices, with the block pipeline
that turns a 2-class non-symmetric scheme into a 5-class symmetric one.

Everything here is exact integer arithmetic; there is no tolerance anywhere
in this module.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .analysis import DistributionDiagram, equitable_quotient
from .graphs import Digraph, Graph, VertexPartition


@dataclass
class SchemeReport:
    valid: bool
    classes: int
    symmetric: bool
    commutative: bool
    p: dict[tuple[int, int, int], int] | None = None  # (i, j, k) -> p^k_ij
    failure: str | None = None


def _as_matrices(mats) -> list[np.ndarray]:
    out = []
    for m in mats:
        a = np.asarray(m, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("relation matrices must be square")
        out.append(a)
    if len({m.shape[0] for m in out}) != 1:
        raise ValueError("relation matrices must share one order")
    return out


def verify_scheme(mats) -> SchemeReport:
    """Check the four association scheme axioms over the integers and, when
    valid, extract the structure constants."""
    fs = _as_matrices(mats)
    n = len(fs) - 1
    order = fs[0].shape[0]
    for idx, f in enumerate(fs):
        bad = (f != 0) & (f != 1)
        if bad.any():
            return SchemeReport(False, n, False, False, failure=f"matrix {idx} has non-0/1 entries")
    if not np.array_equal(fs[0], np.eye(order, dtype=np.int64)):
        return SchemeReport(False, n, False, False, failure="F0 is not the identity")
    if not np.array_equal(sum(fs), np.ones((order, order), dtype=np.int64)):
        return SchemeReport(False, n, False, False, failure="relations do not partition X x X")
    transpose_of = {}
    for i, f in enumerate(fs):
        match = next((j for j, h in enumerate(fs) if np.array_equal(f.T, h)), None)
        if match is None:
            return SchemeReport(False, n, False, False, failure=f"transpose of F{i} missing")
        transpose_of[i] = match
    p: dict[tuple[int, int, int], int] = {}
    for i in range(n + 1):
        for j in range(n + 1):
            prod = fs[i] @ fs[j]
            recon = np.zeros_like(prod)
            for k in range(n + 1):
                pos = np.argwhere(fs[k] == 1)
                if len(pos) == 0:
                    return SchemeReport(False, n, False, False, failure=f"F{k} is empty")
                r, c = pos[0]
                coeff = int(prod[r, c])
                p[(i, j, k)] = coeff
                recon += coeff * fs[k]
            if not np.array_equal(prod, recon):
                return SchemeReport(
                    False, n, False, False,
                    failure=f"F{i} F{j} is not in the span of the relations",
                )
    symmetric = all(np.array_equal(f, f.T) for f in fs)
    commutative = all(
        np.array_equal(fs[i] @ fs[j], fs[j] @ fs[i])
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    )
    return SchemeReport(True, n, symmetric, commutative, p=p)


def _ones(rows: int, cols: int) -> np.ndarray:
    return np.ones((rows, cols), dtype=np.int64)


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


@dataclass
class ExtensionResult:
    cs: list[np.ndarray]  # C0..C3, order 2(n+1)
    identities: dict[str, bool]

    @property
    def all_hold(self) -> bool:
        return all(self.identities.values())


def im_extension(a1) -> ExtensionResult:
    """Assemble the 3-class extension of a 2-class non-symmetric scheme.

    Index layout of the order-2(n+1) matrices: top point, first copy 1..n,
    second copy 1..n, bottom point.  All five product identities are checked
    exactly.
    """
    if isinstance(a1, Digraph):
        a1 = a1.matrix()
    a1 = np.asarray(a1, dtype=np.int64)
    n = a1.shape[0]
    a2 = a1.T.copy()
    base = verify_scheme([np.eye(n, dtype=np.int64), a1, a2])
    if not base.valid or base.symmetric or base.classes != 2:
        raise ValueError(
            f"input is not a 2-class non-symmetric scheme: {base.failure or 'symmetric'}"
        )
    size = 2 * (n + 1)
    c0 = np.eye(size, dtype=np.int64)
    c1 = np.block(
        [
            [_zeros(1, 1), _ones(1, n), _zeros(1, n), _zeros(1, 1)],
            [_zeros(n, 1), a1, a2, _ones(n, 1)],
            [_ones(n, 1), a2, a1, _zeros(n, 1)],
            [_zeros(1, 1), _zeros(1, n), _ones(1, n), _zeros(1, 1)],
        ]
    )
    c2 = c1.T.copy()
    c3 = _ones(size, size) - c0 - c1 - c2
    half = (n - 1) // 2
    identities = {
        "C1^2 = C2^2 = ((n-1)/2)(C1+C2) + n C3": (
            np.array_equal(c1 @ c1, half * (c1 + c2) + n * c3)
            and np.array_equal(c2 @ c2, half * (c1 + c2) + n * c3)
        ),
        "C1 C2 = C2 C1 = n C0 + ((n-1)/2)(C1+C2)": (
            np.array_equal(c1 @ c2, n * c0 + half * (c1 + c2))
            and np.array_equal(c2 @ c1, n * c0 + half * (c1 + c2))
        ),
        "C1 C3 = C3 C1 = C2": (
            np.array_equal(c1 @ c3, c2) and np.array_equal(c3 @ c1, c2)
        ),
        "C2 C3 = C3 C2 = C1": (
            np.array_equal(c2 @ c3, c1) and np.array_equal(c3 @ c2, c1)
        ),
        "C3^2 = C0": np.array_equal(c3 @ c3, c0),
    }
    return ExtensionResult([c0, c1, c2, c3], identities)


def five_class(cs) -> tuple[list[np.ndarray], SchemeReport]:
    """Symmetric 5-class scheme of order 4(n+1) from the C-matrices; the two
    halves are consecutive index blocks."""
    c0, c1, c2, c3 = _as_matrices(cs)
    z = np.zeros_like(c0)
    bs = [
        np.block([[c0, z], [z, c0]]),
        np.block([[z, c1], [c1.T, z]]),
        np.block([[z, c2], [c2.T, z]]),
        np.block([[z, c0 + c3], [c0 + c3, z]]),
        np.block([[c1 + c2, z], [z, c1 + c2]]),
        np.block([[c3, z], [z, c3]]),
    ]
    report = verify_scheme(bs)
    return bs, report


def relation_graph(mats, i: int) -> Graph | Digraph:
    """Graph of relation i: undirected iff F_i is symmetric."""
    fs = _as_matrices(mats)
    if not 1 <= i < len(fs):
        raise ValueError(f"relation index must be 1..{len(fs) - 1}, got {i}")
    f = fs[i]
    order = f.shape[0]
    adj = []
    for u in range(order):
        row = 0
        for v in range(order):
            if f[u, v]:
                row |= 1 << v
        adj.append(row)
    if np.array_equal(f, f.T):
        return Graph(order, tuple(adj), name=f"relation{i}")
    return Digraph(order, tuple(adj), name=f"relation{i}")


def scheme_diagram(mats, i: int, base_points=(0, 1, 2)) -> DistributionDiagram:
    """Distribution diagram of relation graph i over the cells B_j relative
    to a base point; verified identical across the sample base points."""
    fs = _as_matrices(mats)
    report = verify_scheme(fs)
    if not report.valid or not report.symmetric:
        raise ValueError(f"scheme invalid or not symmetric: {report.failure}")
    graph = relation_graph(fs, i)
    order = fs[0].shape[0]
    diagrams = []
    for x in base_points:
        if not 0 <= x < order:
            continue
        cells = []
        for f in fs:
            cell = tuple(int(v) for v in np.flatnonzero(f[x]))
            cells.append(cell)
        part = VertexPartition(tuple(cells), origin="scheme")
        diagrams.append(equitable_quotient(graph, part))
    first = diagrams[0]
    for other in diagrams[1:]:
        if other != first:
            raise AssertionError("scheme diagram depends on the base point")
    return first


def scheme_to_json(mats) -> str:
    fs = _as_matrices(mats)
    obj = {
        "order": int(fs[0].shape[0]),
        "classes": len(fs) - 1,
        "relations": [[int(x) for x in f.flatten()] for f in fs],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def scheme_from_json(text: str) -> list[np.ndarray]:
    obj = json.loads(text)
    order = obj["order"]
    return [
        np.array(rel, dtype=np.int64).reshape(order, order) for rel in obj["relations"]
    ]
