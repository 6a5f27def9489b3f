"""Exact decategorified checks for sl_k categorifications: tableaux, quantum
weight modules, the degenerate affine Hecke algebra and the formal Verma
calculus."""

from .scalars import LaurentInt, RatFunc, NoSolution, q
from .tableaux import Tableau, Multitableau

__version__ = "0.1.0"

__all__ = ["LaurentInt", "RatFunc", "NoSolution", "q", "Tableau", "Multitableau"]
