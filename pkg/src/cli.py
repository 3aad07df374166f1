"""
Command-line entry point: exact speeds, chain solves, simulation and sweeps.

    python -m src.cli exact ladder 1
    python -m src.cli chain --model diagonal --lambda 0
    python -m src.cli simulate --model ladder --lambda 1 --height 100000 --replicas 16
    python -m src.cli sweep --model diagonal --lambda-min 0 --lambda-max 20 --points 50

Exit status is 0 on success, 2 on usage errors and 1 on numeric failures.
"""
import argparse
import csv
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .chain.front import diagonal_chain, ladder_chain, residual, solve_stationary, speed_at_stationarity
from .config import settings
from .diagonal.exact import speed_diagonal
from .diagonal.params import diag_params
from .ladder.exact import LAMBDA_MIN, ladder_params, speed_ladder
from .models import Model, SpeedResult
from .sim.estimate import dump_estimate, estimate_speed
from .sim.gillespie import SimConfig
from .sim.graph import GraphSpec, diagonal_spec, graph_c_spec, ladder_spec, load_graph_spec, reference_speed

logger = logging.getLogger(__name__)

CSV_HEADER = ["lambda", "speed", "pi0", "method"]


class Scale(str, Enum):
    LINEAR = "linear"
    LOG = "log"


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    model: Model
    lambda_min: float = Field(ge=0)
    lambda_max: float
    points: int = Field(ge=2)
    scale: Scale = Scale.LINEAR

    @model_validator(mode="after")
    def _range(self):
        if self.lambda_min >= self.lambda_max:
            raise ValueError(f"lambda_min {self.lambda_min} must be < lambda_max {self.lambda_max}")
        if self.model == Model.LADDER and self.lambda_min < LAMBDA_MIN:
            raise ValueError(f"ladder sweeps need lambda_min >= {LAMBDA_MIN}")
        if self.scale == Scale.LOG and self.lambda_min <= 0:
            raise ValueError("log-scale sweeps need lambda_min > 0")
        return self

    def grid(self) -> List[float]:
        if self.scale == Scale.LOG:
            values = np.geomspace(self.lambda_min, self.lambda_max, self.points)
        else:
            values = np.linspace(self.lambda_min, self.lambda_max, self.points)
        return values.tolist()


def exact_speed(model: Model, lam: float) -> SpeedResult:
    if model == Model.LADDER:
        return speed_ladder(ladder_params(lam))
    return speed_diagonal(diag_params(lam))


def chain_for(model: Model, lam: float, K: Optional[int] = None):
    return ladder_chain(lam, K) if model == Model.LADDER else diagonal_chain(lam, K)


def _print_result(result: SpeedResult) -> None:
    print(f"model:  {result.model}")
    print(f"lambda: {result.lam:.12g}")
    print(f"speed:  {result.speed:.12g}")
    print(f"pi0:    {result.pi0:.12g}")
    print(f"sigma:  {result.sigma:.12g}")
    print(f"method: {result.method}")


def cmd_exact(args: argparse.Namespace) -> int:
    model, lam = Model(args.model), args.lam
    result = exact_speed(model, lam)
    _print_result(result)

    chain = chain_for(model, lam, args.truncation)
    check = speed_at_stationarity(chain, solve_stationary(chain))
    diff = abs(check.speed - result.speed)
    print(f"chain-solve speed: {check.speed:.12g} (|diff| = {diff:.3g})")
    if diff > 1e-5:
        logger.warning(f"exact and chain-solve speeds disagree by {diff:.3g}")
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    model, lam = Model(args.model), args.lam
    chain = chain_for(model, lam, args.truncation)
    dist = solve_stationary(chain)
    result = speed_at_stationarity(chain, dist)
    _print_result(result)
    print(f"tail mass:  {dist.tail_bound:.3g}")
    print(f"residual:   {residual(chain, dist):.3g}")
    print(f"truncation: {len(dist) + 1}")
    return 0


def _simulation_spec(args: argparse.Namespace) -> GraphSpec:
    if args.spec is not None:
        return load_graph_spec(args.spec)
    if args.model is None:
        raise ValueError("simulate needs a graph spec file or --model")
    if args.model == "graph-c":
        return graph_c_spec()
    if args.lam is None:
        raise ValueError(f"--lambda is required for --model {args.model}")
    return ladder_spec(args.lam) if args.model == Model.LADDER.value else diagonal_spec(args.lam)


def cmd_simulate(args: argparse.Namespace) -> int:
    spec = _simulation_spec(args)
    cfg = SimConfig.from_settings(target_height=args.height, replicas=args.replicas, seed=args.seed)
    if cfg.replicas < 2:
        raise ValueError("--replicas must be >= 2 to estimate a standard error")
    estimate = estimate_speed(spec, cfg, workers=args.workers)

    if args.out is not None:
        dump_estimate(estimate, args.out)
        logger.info(f"estimate written to {args.out}")
    if args.json:
        print(estimate.model_dump_json(indent=2))
        return 0

    low, high = estimate.confidence_interval
    print(f"graph:      {spec.present()}")
    print(f"speed:      {estimate.mean_speed:.6f} +- {estimate.std_error:.6f}")
    print(f"95% CI:     [{low:.6f}, {high:.6f}]")
    print(f"replicas:   {estimate.replicas} (seed {estimate.seed}, height {estimate.target_height})")
    reference = reference_speed(spec)
    if reference is not None:
        print(f"reference:  {reference:.6f} (z = {estimate.z_score(reference):+.2f})")
    return 0


def run_sweep(sweep: SweepSpec, out: Path) -> List[SpeedResult]:
    results = [exact_speed(sweep.model, lam) for lam in sweep.grid()]
    speeds = [r.speed for r in results]
    if any(b < a for a, b in zip(speeds, speeds[1:])):
        logger.warning(f"{Model(sweep.model).value} sweep speeds are not increasing in lambda")

    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in results:
            writer.writerow([f"{r.lam:.12g}", f"{r.speed:.12g}", f"{r.pi0:.12g}", r.method])
    return results


def cmd_sweep(args: argparse.Namespace) -> int:
    sweep = SweepSpec(
        model=args.model,
        lambda_min=args.lambda_min,
        lambda_max=args.lambda_max,
        points=args.points or settings.sweep_points,
        scale=args.scale,
    )
    out = args.out or settings.output_dir / f"sweep_{Model(sweep.model).value}.csv"
    run_sweep(sweep, Path(out))
    print(f"wrote {sweep.points} rows to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpp-speed",
        description="First-passage percolation speed on ladder-like graphs",
    )
    parser.add_argument("--log-level", default=settings.log_level)
    sub = parser.add_subparsers(dest="command", required=True)
    models = [m.value for m in Model]

    for name, func in (("exact", cmd_exact), ("chain", cmd_chain)):
        p = sub.add_parser(name, help=f"{name} speed for a model and lambda")
        p.add_argument("model_pos", nargs="?", choices=models, metavar="MODEL")
        p.add_argument("lam_pos", nargs="?", type=float, metavar="LAMBDA")
        p.add_argument("--model", choices=models)
        p.add_argument("--lambda", dest="lam", type=float)
        p.add_argument("--truncation", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("simulate", help="Monte Carlo speed estimate")
    p.add_argument("spec", nargs="?", type=Path, help="JSON graph spec file")
    p.add_argument("--model", choices=models + ["graph-c"])
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--height", type=int)
    p.add_argument("--replicas", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", type=Path)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="CSV of exact speeds over a lambda grid")
    p.add_argument("--model", choices=models, required=True)
    p.add_argument("--lambda-min", type=float, required=True)
    p.add_argument("--lambda-max", type=float, required=True)
    p.add_argument("--points", type=int)
    p.add_argument("--scale", choices=[s.value for s in Scale], default=Scale.LINEAR.value)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_sweep)
    return parser


def _merge_positionals(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command not in ("exact", "chain"):
        return
    args.model = args.model or args.model_pos
    args.lam = args.lam if args.lam is not None else args.lam_pos
    if args.model is None or args.lam is None:
        parser.error(f"{args.command} needs a model and a lambda")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _merge_positionals(parser, args)

    logging.basicConfig(
        level=args.log_level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    try:
        return args.func(args)
    except (ValueError, ValidationError) as e:
        logger.error(f"usage error: {e}")
        return 2
    except ArithmeticError as e:
        logger.error(f"numeric failure: {e}")
        return 1
    except OSError as e:
        logger.error(f"{e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
