from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Entries below this are floating-point noise and are clamped to zero
NEGATIVE_CLAMP = -1e-12


class Method(str, Enum):
    EXACT_BESSEL = "exact-bessel"
    EXACT_GF = "exact-gf"
    CHAIN_SOLVE = "chain-solve"
    MONTE_CARLO = "monte-carlo"


class Model(str, Enum):
    LADDER = "ladder"
    DIAGONAL = "diagonal"


class StationaryDist(BaseModel):
    """Probability vector over front-process states 0..K plus the mass beyond."""

    model_config = ConfigDict(frozen=True)

    probs: List[float]
    tail_bound: float = Field(ge=0)

    @model_validator(mode="before")
    @classmethod
    def _clamp(cls, data):
        if isinstance(data, dict) and "probs" in data:
            probs = [float(p) for p in data["probs"]]
            for p in probs:
                if p < NEGATIVE_CLAMP:
                    raise ValueError(f"negative probability {p:.3g}")
            data = {**data, "probs": [max(p, 0.0) for p in probs]}
        return data

    @model_validator(mode="after")
    def _normalized(self):
        total = sum(self.probs) + self.tail_bound
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        return self

    @property
    def pi0(self) -> float:
        return self.probs[0]

    def __len__(self) -> int:
        return len(self.probs)


class SpeedResult(BaseModel):
    model_config = ConfigDict(frozen=True, use_enum_values=True)

    speed: float
    pi0: Optional[float] = None
    method: Method
    model: Optional[str] = None
    lam: Optional[float] = None
    error_bound: Optional[float] = None
    confidence_interval: Optional[Tuple[float, float]] = None

    @property
    def sigma(self) -> float:
        """Time constant, the inverse of the speed."""
        return 1.0 / self.speed
