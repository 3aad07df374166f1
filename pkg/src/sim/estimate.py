"""
Replica-averaged speed estimates.
"""
import math
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..models import Method, SpeedResult
from .gillespie import SimConfig, run_replica
from .graph import GraphSpec, validate

logger = logging.getLogger(__name__)

# Two-sided 95% normal quantile
Z95 = 1.959963984540054


class SpeedEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean_speed: float
    std_error: float = Field(ge=0)
    replicas: int = Field(ge=1)
    per_replica: List[float]
    seed: int
    target_height: int
    spec: GraphSpec

    @property
    def confidence_interval(self) -> Tuple[float, float]:
        half = Z95 * self.std_error
        return self.mean_speed - half, self.mean_speed + half

    def z_score(self, reference: float) -> float:
        if self.std_error == 0.0:
            return 0.0 if self.mean_speed == reference else math.copysign(math.inf, self.mean_speed - reference)
        return (self.mean_speed - reference) / self.std_error

    def to_speed_result(self) -> SpeedResult:
        return SpeedResult(
            speed=self.mean_speed,
            method=Method.MONTE_CARLO,
            error_bound=self.std_error,
            confidence_interval=self.confidence_interval,
        )


def estimate_speed(spec: GraphSpec, cfg: SimConfig, workers: Optional[int] = None) -> SpeedEstimate:
    """
    Mean of ``cfg.replicas`` independent replica speeds with its standard error.

    Replica i always uses the stream derived from (cfg.seed, i) and results are
    combined in index order, so the estimate does not depend on ``workers``.
    """
    if cfg.replicas < 2:
        raise ValueError(f"need at least 2 replicas for a standard error, got {cfg.replicas}")
    spec = validate(spec)
    workers = workers or settings.sim_workers
    n = cfg.replicas
    logger.info(f"simulating {n} replicas to height {cfg.target_height} (seed={cfg.seed})")

    if workers == 1:
        speeds = [run_replica(spec, cfg, i) for i in range(n)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            speeds = list(pool.map(run_replica, [spec] * n, [cfg] * n, range(n)))

    mean = math.fsum(speeds) / n
    std_error = float(np.std(speeds, ddof=1)) / math.sqrt(n)
    logger.info(f"mean speed {mean:.6f} +- {std_error:.6f}")
    return SpeedEstimate(
        mean_speed=mean,
        std_error=std_error,
        replicas=n,
        per_replica=speeds,
        seed=cfg.seed,
        target_height=cfg.target_height,
        spec=spec,
    )


def dump_estimate(estimate: SpeedEstimate, path: Path) -> None:
    Path(path).write_text(estimate.model_dump_json(indent=2))


def load_estimate(path: Path) -> SpeedEstimate:
    return SpeedEstimate.model_validate_json(Path(path).read_text())
