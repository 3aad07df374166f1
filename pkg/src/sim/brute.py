"""
Brute-force first-passage times on a fully materialized finite graph.

Every edge between heights 0 and ``height`` gets its own exponential time and
Dijkstra runs from column 0. Used to check the pruned event-driven simulator.
"""
import heapq
import math
from typing import Dict, List, Tuple

import numpy as np

from .graph import GraphSpec

Vertex = Tuple[int, int]


def _edges(spec: GraphSpec, height: int) -> List[Tuple[Vertex, Vertex, float]]:
    p = spec.present()
    out = []
    for x in range(height + 1):
        if "vertical" in p:
            out.append(((x, 0), (x, 1), p["vertical"]))
        if x == height:
            continue
        if "horiz0" in p:
            out.append(((x, 0), (x + 1, 0), p["horiz0"]))
        if "horiz1" in p:
            out.append(((x, 1), (x + 1, 1), p["horiz1"]))
        if "diag_up" in p:
            out.append(((x, 0), (x + 1, 1), p["diag_up"]))
        if "diag_down" in p:
            out.append(((x, 1), (x + 1, 0), p["diag_down"]))
    return out


def dijkstra_passage_time(spec: GraphSpec, height: int, rng: np.random.Generator) -> float:
    """First time a vertex at ``height`` is infected, infection starting from column 0."""
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    adj: Dict[Vertex, List[Tuple[Vertex, float]]] = {}
    edges = _edges(spec, height)
    rates = np.array([rate for _, _, rate in edges])
    times = (rng.standard_exponential(len(edges)) / rates).tolist()
    for (u, v, _), t in zip(edges, times):
        adj.setdefault(u, []).append((v, t))
        adj.setdefault(v, []).append((u, t))

    dist: Dict[Vertex, float] = {(0, 0): 0.0, (0, 1): 0.0}
    heap = [(0.0, (0, 0)), (0.0, (0, 1))]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, math.inf):
            continue
        if u[0] == height:
            return d
        for v, t in adj.get(u, []):
            nd = d + t
            if nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    raise ValueError(f"height {height} is unreachable in {spec.present()}")
