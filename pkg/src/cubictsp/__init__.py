"""Exact traveling salesman and Hamiltonian cycle algorithms for graphs of
maximum degree three, with forced edges and a degree-four reduction."""

from .graph import BudgetExceeded, ContractViolation, GraphFormatError, Multigraph, load
from .tsp import SearchStats, Tour, solve

__all__ = ["BudgetExceeded", "ContractViolation", "GraphFormatError", "Multigraph", "SearchStats", "Tour", "load", "solve"]
