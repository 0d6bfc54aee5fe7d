"""Spanning-tree edge enumeration with small time to first output and delay."""

from .adversarial import (
    AdversarialInstance,
    clique_path_rooted,
    clique_plus_path,
    directed_two_cliques,
    two_cliques_bridge,
    weighted_bidirected_clique,
)
from .baselines import (
    TreeCheckReport,
    UnionFind,
    boruvka,
    brute_force_mst_weight,
    check_spanning_tree,
    incremental_prim,
    kruskal,
    prim,
)
from .dst import SccLabeling, dst_unrooted, enumerate_dst_rooted, tarjan_scc
from .graph import (
    EdgeRef,
    Graph,
    GraphError,
    degree_stats,
    gnp_random,
    is_connected,
    new_graph,
    read_graph,
    write_graph,
)
from .mst_enum import (
    boruvka_round,
    degree_sort_relabeling,
    enumerate_mst,
    enumerate_mst_degree_sorted,
    preselected_comparator,
    relabeling_from_degrees,
)
from .st_enum import enumerate_st, extension_prim, phase1_select_forest
from .stream import CollectingSink, StreamMetrics, metrics_from_timestamps, timed_run

__version__ = "0.1.0"
