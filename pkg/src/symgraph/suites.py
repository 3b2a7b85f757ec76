"""Verification suites: each row re-checks one classification claim on a
concrete construction and reports pass/fail.

Rows are pure and independent; they run sequentially in row-id order so the
output is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import analysis, autgrp, catalog, families as fam, schemes, symmetry
from .graphs import global_stats

# the classical icosahedron on two pentagonal rings plus two apexes; the
# suite checks the Paley-based construction against this fixed edge list
ICOSAHEDRON_EDGES = (
    [(0, i) for i in range(1, 6)]
    + [(11, i) for i in range(6, 11)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
)


@dataclass
class SuiteRow:
    row: str
    ok: bool
    detail: str = ""

    def as_dict(self):
        return {"row": self.row, "ok": self.ok, "detail": self.detail}


def _check(rows: list[SuiteRow], row_id: str, ok: bool, detail: str = "") -> None:
    rows.append(SuiteRow(row_id, bool(ok), detail))


def suite_prime_valency() -> list[SuiteRow]:
    """Taylor extensions of Paley graphs at prime order: full certificate."""
    from .graphs import build_graph

    rows: list[SuiteRow] = []
    for p in (5, 13, 17):
        g = fam.taylor_extension(fam.paley(p))
        prof = symmetry.transitivity_profile(g, s_max=2)
        reg = analysis.regularity_profile(g)
        half = (p - 1) // 2
        expected_array = ((p, half, 1), (1, half, p))
        _check(
            rows,
            f"prime-valency-p{p}",
            prof.vertex_transitive
            and prof.distance_transitive
            and reg.girth == 3
            and reg.distance_regular == expected_array
            and prof.aut_order == p * (p - 1) * (p + 1)
            and prof.s_distance_transitive[2]
            and not prof.s_arc_transitive[2],
            f"|Aut|={prof.aut_order}, array={reg.distance_regular}, girth={reg.girth}",
        )
        if p == 5:
            fixed = build_graph(12, ICOSAHEDRON_EDGES, name="Icosahedron(fixed)")
            iso, _ = autgrp.are_isomorphic(g, fixed)
            _check(rows, "prime-valency-p5-icosahedron", iso)
    return rows


def suite_armain() -> list[SuiteRow]:
    """The amply regular mu=(k-1)/2 classification instances."""
    rows: list[SuiteRow] = []

    q5 = fam.hypercube(5)
    reg = analysis.regularity_profile(q5)
    audit = analysis.lemma_audit(q5)
    d5_row = next(r for r in audit.rows if r.statement == "mu-half-diameter5")
    _check(
        rows,
        "armain-1-5cube",
        reg.amply_regular == (32, 5, 0, 2) and reg.diameter == 5 and d5_row.verdict == "confirmed",
        f"amply={reg.amply_regular}, d={reg.diameter}, diameter5 row={d5_row.verdict}",
    )

    kd = fam.cartesian_product_k2_biplane()
    reg = analysis.regularity_profile(kd)
    _check(
        rows,
        "armain-2-biplane-product",
        reg.amply_regular == (28, 5, 0, 2) and reg.diameter == 4,
        f"amply={reg.amply_regular}, d={reg.diameter}",
    )

    for q in (5, 9, 13):
        g = catalog.sigma_prime(q)
        reg = analysis.regularity_profile(g)
        spec = analysis.spectrum_summary(g)
        stats = global_stats(g)
        wr = analysis.walk_regular_level(g)
        _check(
            rows,
            f"armain-3-sigma-q{q}",
            stats.bipartite
            and g.n == 4 * q + 4
            and reg.amply_regular == (4 * q + 4, q, 0, (q - 1) // 2)
            and reg.diameter == 4
            and wr >= 2
            and spec.distinct_count == 6,
            f"n={g.n}, amply={reg.amply_regular}, wr={wr}, eigs={spec.distinct_count}",
        )
    return rows


def suite_schemes() -> list[SuiteRow]:
    """The digraph-to-5-class pipeline at q = 7 and 11."""
    rows: list[SuiteRow] = []
    for q in (7, 11):
        ext = schemes.im_extension(fam.paley_digraph(q))
        _check(
            rows,
            f"schemes-q{q}-identities",
            ext.all_hold,
            "; ".join(k for k, v in ext.identities.items() if not v) or "all hold",
        )
        bs, report = schemes.five_class(ext.cs)
        _check(
            rows,
            f"schemes-q{q}-five-class",
            report.valid and report.symmetric and report.classes == 5
            and bs[0].shape[0] == 4 * (q + 1),
            f"valid={report.valid}, symmetric={report.symmetric}, order={bs[0].shape[0]}",
        )
        g = schemes.relation_graph(bs, 1)
        reg = analysis.regularity_profile(g)
        spec = analysis.spectrum_summary(g)
        _check(
            rows,
            f"schemes-q{q}-relation-graph",
            reg.amply_regular == (4 * q + 4, q, 0, (q - 1) // 2)
            and reg.diameter == 4
            and spec.distinct_count == 6,
            f"amply={reg.amply_regular}, d={reg.diameter}, eigs={spec.distinct_count}",
        )
        if q == 7:
            prof = symmetry.transitivity_profile(g, s_max=2)
            _check(
                rows,
                "schemes-q7-2at",
                reg.amply_regular == (32, 7, 0, 3) and prof.s_arc_transitive[2],
                f"amply={reg.amply_regular}, 2at={prof.s_arc_transitive[2]}",
            )
    return rows


def suite_small_valency() -> list[SuiteRow]:
    """Locally primitive 2-distance-transitive members with valency <= 8 must
    be 2-arc-transitive or the icosahedron."""
    rows: list[SuiteRow] = []
    ico = fam.icosahedron()
    for name, g in catalog.small_valency_catalog():
        prof = symmetry.transitivity_profile(g, s_max=2)
        if not prof.s_distance_transitive.get(2, False) or not prof.locally_primitive:
            _check(rows, f"small-valency-{name}", True, "hypothesis empty")
            continue
        ok = prof.s_arc_transitive[2] or autgrp.are_isomorphic(g, ico)[0]
        _check(
            rows,
            f"small-valency-{name}",
            ok,
            f"2at={prof.s_arc_transitive[2]}",
        )
    return rows


SUITES = {
    "prime-valency": suite_prime_valency,
    "armain": suite_armain,
    "schemes": suite_schemes,
    "small-valency": suite_small_valency,
}


def run_suite(name: str) -> list[SuiteRow]:
    if name == "all":
        rows = []
        for key in ("armain", "prime-valency", "small-valency", "schemes"):
            rows.extend(SUITES[key]())
        return rows
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name]()
