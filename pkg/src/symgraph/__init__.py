"""Graph families, symmetry certificates, and association-scheme verification.

The package builds the classical families (Paley, Peisert, Taylor, Hamming,
Johnson, biplanes, ...), computes their regularity and transitivity
invariants exactly, and exposes audit suites that re-check the structural
claims those families are known to satisfy.
"""

__version__ = "0.1.0"
