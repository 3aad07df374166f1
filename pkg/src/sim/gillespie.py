"""
Event-driven simulation of the infection on a ladder-like graph.

With exponential edge times the infected set is a Markov jump process: each
uninfected vertex next to the infected set is hit at the summed intensity of its
infected neighbours. Only vertices at or above the watermark M (the highest
fully infected column) are kept; nothing below a full column can change when
higher columns are reached.
"""
import math
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import settings
from ..errors import SimulationError
from .graph import GraphSpec

logger = logging.getLogger(__name__)

FULL = 0b11

# Exponential and uniform variates are drawn in blocks of this size
RNG_BLOCK = 4096


class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    target_height: int = Field(ge=1000)
    replicas: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2**64)
    burn_in_height: int = Field(ge=0)
    audit_interval: int = Field(default_factory=lambda: settings.sim_audit_interval, ge=1)

    @model_validator(mode="after")
    def _burn_in_below_target(self):
        if self.burn_in_height >= self.target_height:
            raise ValueError(
                f"burn_in_height {self.burn_in_height} must be < target_height {self.target_height}"
            )
        return self

    @classmethod
    def from_settings(cls, target_height: Optional[int] = None, replicas: Optional[int] = None,
                      seed: Optional[int] = None) -> "SimConfig":
        height = target_height or settings.sim_height
        return cls(
            target_height=height,
            replicas=replicas or settings.sim_replicas,
            seed=settings.sim_seed if seed is None else seed,
            burn_in_height=int(settings.sim_burn_in_fraction * height),
        )


def replica_rng(seed: int, replica_index: int) -> np.random.Generator:
    """Independent stream per replica, fixed by (seed, replica_index) alone."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(replica_index,)))


class _Draws:
    """Buffered standard exponential and uniform variates."""

    def __init__(self, rng: np.random.Generator):
        self._rng = rng
        self._exp: List[float] = []
        self._uni: List[float] = []

    def next(self) -> Tuple[float, float]:
        if not self._exp:
            self._exp = self._rng.standard_exponential(RNG_BLOCK).tolist()[::-1]
            self._uni = self._rng.random(RNG_BLOCK).tolist()[::-1]
        return self._exp.pop(), self._uni.pop()


class _Front:
    """Infected columns and frontier rates above the watermark."""

    def __init__(self, spec: GraphSpec):
        self.nbrs = spec.neighbours()
        self.infected: Dict[int, int] = {0: FULL}
        self.frontier: Dict[Tuple[int, int], float] = {}
        self.total = 0.0
        self.watermark = 0
        self.top = 0
        for level in (0, 1):
            self._expose(0, level)

    def _is_infected(self, x: int, level: int) -> bool:
        return bool(self.infected.get(x, 0) >> level & 1)

    def _expose(self, x: int, level: int) -> None:
        """Add the edges out of a newly infected vertex to the frontier."""
        for dx, to_level, rate in self.nbrs[level]:
            y = x + dx
            if y < self.watermark or self._is_infected(y, to_level):
                continue
            key = (y, to_level)
            self.frontier[key] = self.frontier.get(key, 0.0) + rate
            self.total += rate

    def pick(self, u: float) -> Tuple[int, int]:
        target = u * self.total
        acc = 0.0
        key = None
        for key, rate in self.frontier.items():
            acc += rate
            if acc > target:
                return key
        # rounding left target at the very end
        return key

    def infect(self, x: int, level: int) -> None:
        self.total -= self.frontier.pop((x, level))
        mask = self.infected.get(x, 0) | (1 << level)
        self.infected[x] = mask
        self.top = max(self.top, x)
        self._expose(x, level)
        if mask == FULL and x > self.watermark:
            self._raise_watermark(x)

    def _raise_watermark(self, x: int) -> None:
        self.watermark = x
        for h in [h for h in self.infected if h < x]:
            del self.infected[h]
        for key in [k for k in self.frontier if k[0] < x]:
            del self.frontier[key]
        self.total = math.fsum(self.frontier.values())

    def audit(self) -> None:
        """Recount every frontier rate from the infected set."""
        expected: Dict[Tuple[int, int], float] = {}
        for x, mask in self.infected.items():
            for level in (0, 1):
                if not mask >> level & 1:
                    continue
                for dx, to_level, rate in self.nbrs[level]:
                    y = x + dx
                    if y >= self.watermark and not self._is_infected(y, to_level):
                        expected[(y, to_level)] = expected.get((y, to_level), 0.0) + rate
        total = math.fsum(expected.values())
        if set(expected) != set(self.frontier):
            raise SimulationError(
                f"frontier vertices differ from recount at watermark {self.watermark}"
            )
        for key, rate in expected.items():
            if abs(self.frontier[key] - rate) > 1e-9 * rate:
                raise SimulationError(f"frontier rate at {key}: {self.frontier[key]!r} != {rate!r}")
        if abs(self.total - total) > 1e-9 * total:
            raise SimulationError(f"total frontier rate {self.total!r} != recount {total!r}")
        self.total = total
        logger.debug(f"audit ok: watermark={self.watermark} top={self.top} frontier={len(self.frontier)}")


def passage_times(spec: GraphSpec, heights: Sequence[int], rng: np.random.Generator,
                  audit_interval: Optional[int] = None) -> List[float]:
    """
    First times the infection, started from column 0 at time 0, reaches each
    height in ``heights`` (non-decreasing, each >= 0).
    """
    if any(b < a for a, b in zip(heights, heights[1:])) or (heights and heights[0] < 0):
        raise ValueError("heights must be non-decreasing and >= 0")
    audit_interval = audit_interval or settings.sim_audit_interval

    front = _Front(spec)
    draws = _Draws(rng)
    times: List[float] = []
    t = 0.0
    steps = 0
    pending = list(heights)
    while pending and pending[0] <= front.top:
        times.append(t)
        pending.pop(0)

    while pending:
        if front.total <= 0.0:
            raise SimulationError(f"frontier empty at height {front.top}")
        e, u = draws.next()
        t += e / front.total
        front.infect(*front.pick(u))
        steps += 1
        if steps % audit_interval == 0:
            front.audit()
        while pending and pending[0] <= front.top:
            times.append(t)
            pending.pop(0)
    return times


def run_replica(spec: GraphSpec, cfg: SimConfig, replica_index: int) -> float:
    """Speed over heights burn_in..target for one replica."""
    rng = replica_rng(cfg.seed, replica_index)
    t_burn, t_target = passage_times(
        spec, [cfg.burn_in_height, cfg.target_height], rng, cfg.audit_interval
    )
    speed = (cfg.target_height - cfg.burn_in_height) / (t_target - t_burn)
    logger.debug(f"replica {replica_index}: speed={speed:.6f}")
    return speed
