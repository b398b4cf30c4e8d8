"""critlab: a workbench for edge-chromatic-critical graphs.

Exact chromatic-index decisions, constructive (Delta+1)-coloring, Kempe
recoloring machinery, executable adjacency lemmas, a lemma-based
non-criticality pruner, and an exact discharging engine for the
average-degree bound computation.
"""

from .bounds import bound_chain, bound_table, bound_theorem1, conjecture_holds, q_of
from .coloring import (
    KempeChain,
    PartialEdgeColoring,
    dual_coloring,
    is_elementary,
    kempe_chain,
    kempe_flip,
    missing_colors,
)
from .discharge import ChargeLedger, claim4_report, discharge, partition, verify_claims
from .exactreal import SQRT2, ExactReal
from .fans import (
    FanTree,
    build_tashkinov_tree,
    build_vizing_fan,
    check_broom,
    check_p4,
    enumerate_kierstead_paths,
    enumerate_simple_brooms,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .graphs import Graph, GraphError, complete, cycle, path, petersen, star, woodall_example
from .lemmas import (
    check_lemfact,
    check_pp,
    check_ppp,
    check_val,
    check_w22,
    check_w23,
    prune,
)
from .solver import (
    BudgetExhausted,
    CriticalityVerdict,
    SolveBudget,
    chromatic_index,
    color_minus_edge,
    is_critical_edge,
    is_edge_delta_critical,
    is_k_edge_colorable,
    vizing_color,
)
from .stats import p_params, p_params_q, sigma, sigma_q

__version__ = "0.1.0"
