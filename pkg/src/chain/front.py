"""
Truncated front-process chains solved directly for their stationary law.

Family chains (ladder, diagonal ladder) are cut at K states and the outflow from
state K-1 is folded back into its diagonal, so every row sums to zero. The mass
left on state K-1 is reported as the tail bound. A chain given by an explicit
generator and no family is taken as a complete finite chain with no tail.
"""
import logging
from typing import Callable, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..config import settings
from ..diagonal.exact import build_q_diagonal
from ..diagonal.params import diag_params
from ..errors import FppError, TruncationError
from ..ladder.exact import build_q_ladder, ladder_params
from ..models import Method, Model, SpeedResult, StationaryDist

logger = logging.getLogger(__name__)


class FrontChain(BaseModel):
    """Truncated generator plus the rate at which the front advances from each state."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    generator: np.ndarray
    advance_rate: np.ndarray
    truncation_k: int
    family: Optional[Model] = None
    lam: Optional[float] = None

    @field_validator("generator", "advance_rate", mode="before")
    @classmethod
    def _as_array(cls, value):
        return np.array(value, dtype=float)

    @model_validator(mode="after")
    def _shapes(self):
        q = self.generator
        k = self.truncation_k
        if q.ndim != 2 or q.shape != (k, k):
            raise ValueError(f"generator must be {k}x{k}, got shape {q.shape}")
        if self.advance_rate.shape != (k,):
            raise ValueError(f"advance_rate must have length {k}, got {self.advance_rate.shape}")
        off = q - np.diag(np.diag(q))
        if (off < 0).any():
            raise ValueError("off-diagonal intensities must be >= 0")
        return self

    def __len__(self) -> int:
        return self.truncation_k


def _fold_outflow(q: np.ndarray) -> np.ndarray:
    """Make the last row conservative by moving its lost outflow onto the diagonal."""
    q = q.copy()
    last = q.shape[0] - 1
    q[last, last] = -(q[last].sum() - q[last, last])
    return q


def ladder_chain(lam: float, K: Optional[int] = None) -> FrontChain:
    K = K or settings.chain_truncation
    q = _fold_outflow(build_q_ladder(ladder_params(lam), K))
    rates = np.ones(K)
    rates[0] = 2.0
    return FrontChain(generator=q, advance_rate=rates, truncation_k=K,
                      family=Model.LADDER, lam=lam)


def diagonal_chain(lam: float, K: Optional[int] = None) -> FrontChain:
    K = K or settings.chain_truncation
    q = _fold_outflow(build_q_diagonal(diag_params(lam), K))
    rates = np.full(K, 2.0)
    rates[0] = 4.0
    return FrontChain(generator=q, advance_rate=rates, truncation_k=K,
                      family=Model.DIAGONAL, lam=lam)


_BUILDERS: Dict[Model, Callable[[float, int], FrontChain]] = {
    Model.LADDER: ladder_chain,
    Model.DIAGONAL: diagonal_chain,
}


def with_truncation(chain: FrontChain, K: int) -> FrontChain:
    """The same family rebuilt at truncation K."""
    if chain.truncation_k == K:
        return chain
    if chain.family is None or chain.lam is None:
        raise ValueError("only family chains can be rebuilt at another truncation")
    return _BUILDERS[Model(chain.family)](chain.lam, K)


def _solve_once(chain: FrontChain) -> np.ndarray:
    """Pi Q = 0 with the first balance equation replaced by sum(Pi) = 1."""
    a = chain.generator.T.copy()
    a[0, :] = 1.0
    b = np.zeros(chain.truncation_k)
    b[0] = 1.0
    try:
        return np.linalg.solve(a, b)
    except np.linalg.LinAlgError as e:
        raise FppError(f"singular balance system at K={chain.truncation_k}: {e}") from e


def _to_dist(chain: FrontChain, pi: np.ndarray) -> StationaryDist:
    if (pi >= -1e-12).all():
        pi = np.clip(pi, 0.0, None)
    pi = pi / pi.sum()
    if chain.family is None:
        return StationaryDist(probs=pi.tolist(), tail_bound=0.0)
    return StationaryDist(probs=pi[:-1].tolist(), tail_bound=float(pi[-1]))


def solve_stationary(chain: FrontChain, tol: Optional[float] = None,
                     max_truncation: Optional[int] = None) -> StationaryDist:
    """
    Stationary distribution of the truncated chain.

    While the mass on the last state exceeds ``tol`` the chain is rebuilt with
    doubled K; past ``max_truncation`` a TruncationError is raised. Chains
    without a family are solved once at their own size.
    """
    tol = settings.chain_tail_tol if tol is None else tol
    cap = max_truncation or settings.chain_max_truncation

    while True:
        dist = _to_dist(chain, _solve_once(chain))
        if dist.tail_bound <= tol:
            logger.debug(f"chain solved at K={chain.truncation_k}, tail={dist.tail_bound:.3g}")
            return dist
        K = chain.truncation_k
        if 2 * K > cap:
            raise TruncationError(K, dist.tail_bound, tol)
        logger.info(f"tail mass {dist.tail_bound:.3g} > {tol:.3g} at K={K}, re-solving with K={2 * K}")
        chain = with_truncation(chain, 2 * K)


def _matched(chain: FrontChain, dist: StationaryDist):
    """The chain at the size of ``dist`` and the full state vector pi_0..pi_{K-1}."""
    if chain.family is None:
        if len(dist) != chain.truncation_k:
            raise ValueError(
                f"distribution has {len(dist)} states, chain has {chain.truncation_k}"
            )
        return chain, np.asarray(dist.probs)
    chain = with_truncation(chain, len(dist) + 1)
    return chain, np.append(np.asarray(dist.probs), dist.tail_bound)


def speed_at_stationarity(chain: FrontChain, dist: StationaryDist) -> SpeedResult:
    """Sum of advance rates weighted by the stationary law."""
    chain, pi = _matched(chain, dist)
    rates = chain.advance_rate
    return SpeedResult(
        speed=float(np.dot(rates, pi)),
        pi0=dist.pi0,
        method=Method.CHAIN_SOLVE,
        model=Model(chain.family).value if chain.family is not None else None,
        lam=chain.lam,
        error_bound=float(rates.max()) * dist.tail_bound,
    )


def residual(chain: FrontChain, dist: StationaryDist) -> float:
    """Infinity norm of Pi Q on the conservative truncated generator."""
    chain, pi = _matched(chain, dist)
    return float(np.abs(pi @ chain.generator).max())


def chain_speed(model: Model, lam: float, K: Optional[int] = None,
                tol: Optional[float] = None) -> SpeedResult:
    """Build, solve and evaluate a family chain in one call."""
    chain = _BUILDERS[Model(model)](lam, K)
    return speed_at_stationarity(chain, solve_stationary(chain, tol))
