"""Hypohamiltonian snarks: generators, the dot product, exact hamiltonicity,
colouring, cyclic connectivity, 1-factors and path certificates."""

from .graph import CubicGraph, GraphError, Graph6Error, girth, parse_graph6, write_graph6
from .iso import canonical_form, is_isomorphic
from .generators import (
    DotSpec,
    FlowerSpec,
    blanusa1,
    blanusa2,
    dot_product,
    enumerate_dot_specs,
    flower,
    loupekine1,
    named_graph,
    petersen,
)
from .hamilton import (
    SearchBudgetExceeded,
    SuitableReport,
    find_suitable_pairs,
    ham_path,
    hamiltonian_cycle,
    is_hypohamiltonian,
    spanning_path_pair,
    two_factor_two_odd_cycles,
)
from .coloring import is_bicritical, is_snark, is_three_edge_colorable
from .connectivity import ConnectivityReport, cyclic_edge_connectivity
from .factors import Mu3Result, mu3, perfect_matchings
from .decompose import Decomposition, decompose_dot, find_cyclic_4_cuts
from .orders import OrderPlan, build_order, plan_orders

__version__ = "0.1.0"
