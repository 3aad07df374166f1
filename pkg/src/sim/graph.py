"""
Width-two translation-invariant graphs with exponential edge intensities.

Vertices are (x, level) with height x >= 0 and level in {0, 1}. One unit cell
of at most five edge types defines the whole graph:

    vertical   (x,0)-(x,1)
    horiz0     (x,0)-(x+1,0)
    horiz1     (x,1)-(x+1,1)
    diag_up    (x,0)-(x+1,1)
    diag_down  (x,1)-(x+1,0)

An absent edge type is None.
"""
import math
import logging
from collections import deque
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..diagonal.exact import speed_diagonal_scaled
from ..errors import NonPositiveIntensity, NoPercolation, RegimeError
from ..ladder.exact import speed_ladder_scaled
from ..models import SpeedResult

logger = logging.getLogger(__name__)

EDGE_TYPES = ("vertical", "horiz0", "horiz1", "diag_up", "diag_down")

# Reachability search depth used by validate
PROBE_HEIGHT = 8

# (neighbour height offset, neighbour level) per edge type, from level 0 and level 1
_OFFSETS: Dict[str, Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]]] = {
    "vertical": (((0, 1),), ((0, 0),)),
    "horiz0": (((1, 0), (-1, 0)), ()),
    "horiz1": ((), ((1, 1), (-1, 1))),
    "diag_up": (((1, 1),), ((-1, 0),)),
    "diag_down": (((-1, 1),), ((1, 0),)),
}

Neighbourhood = Tuple[Tuple[Tuple[int, int, float], ...], Tuple[Tuple[int, int, float], ...]]


class GraphSpec(BaseModel):
    """Unit cell of a ladder-like graph; values are exponential intensities."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    vertical: Optional[float] = None
    horiz0: Optional[float] = None
    horiz1: Optional[float] = None
    diag_up: Optional[float] = None
    diag_down: Optional[float] = None

    def present(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in EDGE_TYPES if getattr(self, name) is not None}

    def neighbours(self) -> Neighbourhood:
        """(dx, level, rate) triples reachable from a level-0 and a level-1 vertex."""
        out: List[List[Tuple[int, int, float]]] = [[], []]
        for name, rate in self.present().items():
            for level in (0, 1):
                for dx, to_level in _OFFSETS[name][level]:
                    out[level].append((dx, to_level, rate))
        return tuple(out[0]), tuple(out[1])


def validate(spec: GraphSpec) -> GraphSpec:
    """
    Reject non-positive intensities and cells in which infection started from
    column 0 cannot climb: breadth-first search over heights 0..PROBE_HEIGHT must
    reach the top, which by translation invariance means it climbs forever.
    """
    for name, rate in spec.present().items():
        if not (rate > 0 and math.isfinite(rate)):
            raise NonPositiveIntensity(name, rate)

    nbrs = spec.neighbours()
    seen = {(0, 0), (0, 1)}
    queue = deque(seen)
    while queue:
        x, level = queue.popleft()
        if x == PROBE_HEIGHT:
            return spec
        for dx, to_level, _ in nbrs[level]:
            v = (x + dx, to_level)
            if 0 <= v[0] <= PROBE_HEIGHT and v not in seen:
                seen.add(v)
                queue.append(v)
    raise NoPercolation(f"infection cannot climb in graph {spec.present() or 'with no edges'}")


def ladder_spec(lam: float, horizontal: float = 1.0) -> GraphSpec:
    return GraphSpec(vertical=lam if lam > 0 else None, horiz0=horizontal, horiz1=horizontal)


def diagonal_spec(lam: float, horizontal: float = 1.0) -> GraphSpec:
    return GraphSpec(
        vertical=lam if lam > 0 else None,
        horiz0=horizontal,
        horiz1=horizontal,
        diag_up=horizontal,
        diag_down=horizontal,
    )


def graph_c_spec(intensity: float = 1.0) -> GraphSpec:
    """Both horizontal lanes, the vertical and a single diagonal orientation."""
    return GraphSpec(vertical=intensity, horiz0=intensity, horiz1=intensity, diag_up=intensity)


# Speed of graph_c_spec with unit intensities: (2 tan 1 - 1) / (2 tan 1 - 2)
GRAPH_C_SPEED = (2 * math.tan(1.0) - 1) / (2 * math.tan(1.0) - 2)


def exact_speed_for(spec: GraphSpec) -> Optional[SpeedResult]:
    """Exact speed when the cell is a (scaled) ladder or diagonal ladder, else None."""
    p = spec.present()
    h0, h1 = p.get("horiz0"), p.get("horiz1")
    if h0 is None or h0 != h1:
        return None
    diagonals = (p.get("diag_up"), p.get("diag_down"))
    vertical = p.get("vertical")
    try:
        if diagonals == (None, None) and vertical is not None:
            return speed_ladder_scaled(h0, vertical)
        if diagonals == (h0, h0):
            return speed_diagonal_scaled(h0, vertical or 0.0)
    except RegimeError as e:
        logger.info(f"no exact speed for {p}: {e}")
    return None


def reference_speed(spec: GraphSpec) -> Optional[float]:
    """Exact family speed, or the known unit-intensity value for the single-diagonal graph."""
    exact = exact_speed_for(spec)
    if exact is not None:
        return exact.speed
    p = spec.present()
    if set(p) == {"vertical", "horiz0", "horiz1", "diag_up"} or set(p) == {"vertical", "horiz0", "horiz1", "diag_down"}:
        values = set(p.values())
        if len(values) == 1:
            return values.pop() * GRAPH_C_SPEED
    return None


def load_graph_spec(path: Path) -> GraphSpec:
    """Read a JSON unit cell, e.g. {"vertical": 1.0, "horiz0": 1.0, "horiz1": 1.0}."""
    return validate(GraphSpec.model_validate_json(Path(path).read_text()))


def dump_graph_spec(spec: GraphSpec, path: Path) -> None:
    Path(path).write_text(spec.model_dump_json(indent=2, exclude_none=True))
