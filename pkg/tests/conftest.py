from __future__ import annotations

import pytest

from symgraph import catalog


@pytest.fixture(scope="session")
def full_catalog():
    return catalog.catalog()


@pytest.fixture(scope="session")
def icosahedron_fixed_edges():
    """Classical icosahedron: two apexes over an antiprism of pentagons.

    Independent of the Paley-based constructor; used as the isomorphism
    oracle for it.
    """
    edges = (
        [(0, i) for i in range(1, 6)]
        + [(11, i) for i in range(6, 11)]
        + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
        + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
        + [(1 + i, 6 + i) for i in range(5)]
        + [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    )
    return edges
