"""Exact-arithmetic toolkit for involution Schubert calculus.

The package computes Schubert and involution Schubert polynomials over the
integers, expands involution Stanley symmetric functions positively into
Schur P- and Q-functions by three independent algorithms (atom sums,
transition trees, shifted Hecke insertion), and exposes the whole machinery
through a FastAPI service plus a thin command-line client.
"""

from invschub.permutations import Permutation
from invschub.polynomials import IntPolynomial

__all__ = ["Permutation", "IntPolynomial"]

__version__ = "0.1.0"
