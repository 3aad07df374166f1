from .graph import (
    GraphSpec,
    validate,
    ladder_spec,
    diagonal_spec,
    graph_c_spec,
    exact_speed_for,
    reference_speed,
    load_graph_spec,
    dump_graph_spec,
)
from .gillespie import SimConfig, passage_times, run_replica
from .estimate import SpeedEstimate, estimate_speed, dump_estimate, load_estimate
from .brute import dijkstra_passage_time

__all__ = [
    "GraphSpec", "validate", "ladder_spec", "diagonal_spec", "graph_c_spec",
    "exact_speed_for", "reference_speed", "load_graph_spec", "dump_graph_spec",
    "SimConfig", "passage_times", "run_replica",
    "SpeedEstimate", "estimate_speed", "dump_estimate", "load_estimate",
    "dijkstra_passage_time",
]
