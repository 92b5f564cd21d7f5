"""Exact-arithmetic Chevalley groups over the rationals.

Builds root systems from Cartan data, realizes the adjoint Chevalley group
by integer structure constants, and mechanically verifies defining
relations, root-group-datum axioms, torsion of monomial representatives,
and congruence-subgroup facts, all without floating point.
"""

__version__ = "0.1.0"

from .chevgrp import (
    ChevalleyBasis,
    GroupElement,
    build_basis,
    naive_torsion_order,
    relation_suite,
    torsion_exponent_bound,
    torsion_order,
)
from .exactnum import INFINITY, Infinity, Q, Valuation, valuate
from .rootsys import RootSystem, build
from .weyl import WeylElement, coxeter_element, enumerate_elements, from_word

__all__ = [
    "__version__",
    "ChevalleyBasis",
    "GroupElement",
    "build_basis",
    "naive_torsion_order",
    "relation_suite",
    "torsion_exponent_bound",
    "torsion_order",
    "INFINITY",
    "Infinity",
    "Q",
    "Valuation",
    "valuate",
    "RootSystem",
    "build",
    "WeylElement",
    "coxeter_element",
    "enumerate_elements",
    "from_word",
]
