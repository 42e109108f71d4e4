"""RA matrices of finite simple graphs.

Builds the row stack of closed neighborhoods and their pairwise
intersections for a graph, computes its elementary divisors and Hermite
pivots with exact integer arithmetic, classifies graphs by how freely
single-vertex commutator placements can be reached, and cross-checks the
closed-form divisor predictors for products, crowns, Kneser graphs, and
prescribed-divisor constructions against direct computation and a small
finite-group oracle.
"""

from .graphs import Graph, graph6_decode, graph6_encode
from .intlin import IntMatrix, hermite_normal_form, smith_normal_form
from .ra_core import RAClassification, classify, elementary_divisors, ra_matrix

__all__ = [
    "Graph",
    "graph6_decode",
    "graph6_encode",
    "IntMatrix",
    "hermite_normal_form",
    "smith_normal_form",
    "RAClassification",
    "classify",
    "elementary_divisors",
    "ra_matrix",
]

__version__ = "0.1.0"
