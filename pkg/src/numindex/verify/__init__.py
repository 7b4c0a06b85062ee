"""Independent oracles: exact LP, vertex enumeration and sphere sampling."""
from .lp import convex_combination, linprog, lp_member, prune_to_extreme
from .vertex_enum import enumerate_vertices

__all__ = ["convex_combination", "linprog", "lp_member", "prune_to_extreme", "enumerate_vertices"]
