import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.diagonal import diag_params, speed_diagonal
from src.errors import NonPositiveIntensity, NoPercolation
from src.ladder import ladder_params, speed_ladder
from src.sim import (
    GraphSpec,
    SimConfig,
    diagonal_spec,
    dijkstra_passage_time,
    dump_graph_spec,
    estimate_speed,
    exact_speed_for,
    graph_c_spec,
    ladder_spec,
    load_estimate,
    load_graph_spec,
    passage_times,
    reference_speed,
    validate,
)
from src.sim.gillespie import _Draws, _Front, replica_rng
from src.sim.graph import GRAPH_C_SPEED


def small_config(height=20_000, replicas=8, seed=1):
    return SimConfig(target_height=height, replicas=replicas, seed=seed, burn_in_height=height // 100)


@pytest.mark.parametrize("spec", [
    GraphSpec(vertical=1.0),
    GraphSpec(diag_up=1.0),
    GraphSpec(diag_down=1.0),
    GraphSpec(),
])
def test_non_percolating_cells(spec):
    with pytest.raises(NoPercolation):
        validate(spec)


@pytest.mark.parametrize("spec", [
    GraphSpec(horiz0=1.0),
    GraphSpec(vertical=1.0, diag_up=1.0),
    ladder_spec(1.0),
    diagonal_spec(0.0),
    graph_c_spec(),
])
def test_percolating_cells(spec):
    assert validate(spec) is spec


@pytest.mark.parametrize("value", [0.0, -1.0, math.inf])
def test_non_positive_intensity(value):
    with pytest.raises(NonPositiveIntensity) as info:
        validate(GraphSpec(horiz0=value, horiz1=1.0))
    assert info.value.field == "horiz0"


def test_unknown_edge_type_rejected():
    with pytest.raises(ValidationError):
        GraphSpec(horiz2=1.0)


def test_load_graph_spec(tmp_path):
    path = tmp_path / "ladder.json"
    path.write_text(json.dumps({"vertical": 1.0, "horiz0": 1.0, "horiz1": 1.0}))
    spec = load_graph_spec(path)
    assert spec == ladder_spec(1.0)
    assert reference_speed(spec) == pytest.approx(1.4647, abs=1e-4)

    out = tmp_path / "copy.json"
    dump_graph_spec(spec, out)
    assert json.loads(out.read_text()) == {"vertical": 1.0, "horiz0": 1.0, "horiz1": 1.0}


def test_load_graph_spec_rejects_non_percolating(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertical": 1.0}))
    with pytest.raises(NoPercolation):
        load_graph_spec(path)


def test_exact_speed_for_families():
    assert exact_speed_for(diagonal_spec(1.0)).speed == pytest.approx(
        speed_diagonal(diag_params(1.0)).speed, rel=1e-14
    )
    scaled = exact_speed_for(ladder_spec(2.0, horizontal=3.0))
    assert scaled.speed == pytest.approx(3.0 * speed_ladder(ladder_params(2.0 / 3.0)).speed, rel=1e-14)
    assert exact_speed_for(graph_c_spec()) is None
    assert exact_speed_for(GraphSpec(horiz0=1.0, horiz1=2.0, vertical=1.0)) is None
    # ladder below the supported regime has no exact value
    assert exact_speed_for(ladder_spec(0.01)) is None


def test_reference_speed_for_single_diagonal_graph():
    assert GRAPH_C_SPEED == pytest.approx(1.8970, abs=1e-4)
    assert reference_speed(graph_c_spec(2.0)) == pytest.approx(2.0 * GRAPH_C_SPEED)
    mirrored = GraphSpec(vertical=1.0, horiz0=1.0, horiz1=1.0, diag_down=1.0)
    assert reference_speed(mirrored) == pytest.approx(GRAPH_C_SPEED)
    assert reference_speed(GraphSpec(vertical=1.0, horiz0=1.0, horiz1=1.0, diag_up=2.0)) is None


@pytest.mark.parametrize("spec", [ladder_spec(1.0), diagonal_spec(0.5), graph_c_spec()])
def test_gillespie_matches_dijkstra(spec):
    n, height = 3000, 6
    rng_a = np.random.default_rng(11)
    rng_b = np.random.default_rng(12)
    event = np.array([passage_times(spec, [height], rng_a)[0] for _ in range(n)])
    brute = np.array([dijkstra_passage_time(spec, height, rng_b) for _ in range(n)])
    z = (event.mean() - brute.mean()) / math.sqrt(event.var(ddof=1) / n + brute.var(ddof=1) / n)
    assert abs(z) <= 4.0


def test_passage_times_are_ordered():
    times = passage_times(ladder_spec(1.0), [0, 10, 10, 50], replica_rng(3, 0))
    assert times[0] == 0.0
    assert times[1] == times[2]
    assert times[2] < times[3]


def test_passage_times_reject_unsorted_heights():
    with pytest.raises(ValueError):
        passage_times(ladder_spec(1.0), [10, 5], replica_rng(3, 0))


def test_front_stays_small_above_watermark():
    front = _Front(ladder_spec(1.0))
    draws = _Draws(replica_rng(5, 0))
    for _ in range(20_000):
        _, u = draws.next()
        front.infect(*front.pick(u))
        assert len(front.infected) <= 200
        assert len(front.frontier) <= 200
    assert front.watermark > 0
    front.audit()


def test_audit_every_step():
    times = passage_times(diagonal_spec(1.0), [300], replica_rng(9, 0), audit_interval=1)
    assert times[0] > 0.0


def test_replica_streams_are_deterministic():
    spec = ladder_spec(1.0)
    cfg = small_config(height=1000, replicas=3, seed=5)
    inline = estimate_speed(spec, cfg, workers=1)
    pooled = estimate_speed(spec, cfg, workers=2)
    assert inline.per_replica == pooled.per_replica
    assert len(set(inline.per_replica)) == 3


def test_ladder_estimate_matches_exact():
    spec = ladder_spec(1.0)
    estimate = estimate_speed(spec, small_config(), workers=1)
    assert abs(estimate.z_score(reference_speed(spec))) <= 4.0
    low, high = estimate.confidence_interval
    assert low < estimate.mean_speed < high


def test_diagonal_estimate_matches_exact():
    spec = diagonal_spec(1.0)
    estimate = estimate_speed(spec, small_config(seed=2), workers=1)
    assert abs(estimate.z_score(reference_speed(spec))) <= 4.0


def test_ladder_without_rungs_has_unit_speed():
    estimate = estimate_speed(ladder_spec(0.0), small_config(seed=3), workers=1)
    assert estimate.mean_speed == pytest.approx(1.0, abs=0.02)


def test_single_diagonal_graph_between_families():
    estimate = estimate_speed(graph_c_spec(), small_config(seed=4), workers=1)
    ladder = speed_ladder(ladder_params(1.0)).speed
    diagonal = speed_diagonal(diag_params(1.0)).speed
    assert ladder < estimate.mean_speed < diagonal


def test_doubled_rates_double_speeds():
    cfg = small_config(height=2000, replicas=3, seed=6)
    base = estimate_speed(ladder_spec(1.0), cfg, workers=1)
    fast = estimate_speed(ladder_spec(2.0, horizontal=2.0), cfg, workers=1)
    assert fast.per_replica == pytest.approx([2.0 * s for s in base.per_replica], rel=1e-9)


def test_estimate_round_trip(tmp_path):
    estimate = estimate_speed(ladder_spec(1.0), small_config(height=1000, replicas=2), workers=1)
    path = tmp_path / "estimate.json"
    path.write_text(estimate.model_dump_json())
    assert load_estimate(path) == estimate
    assert estimate.to_speed_result().error_bound == estimate.std_error


def test_single_replica_rejected():
    with pytest.raises(ValueError):
        estimate_speed(ladder_spec(1.0), small_config(height=1000, replicas=1), workers=1)


def test_burn_in_must_stay_below_target():
    with pytest.raises(ValidationError):
        SimConfig(target_height=1000, replicas=2, seed=0, burn_in_height=1000)


def test_target_height_lower_bound():
    with pytest.raises(ValidationError):
        SimConfig(target_height=10, replicas=2, seed=0, burn_in_height=0)


@pytest.mark.slow
@pytest.mark.parametrize("spec", [graph_c_spec(), ladder_spec(2.0), diagonal_spec(1.0)])
def test_full_scale_estimates(spec):
    cfg = SimConfig(target_height=100_000, replicas=32, seed=42, burn_in_height=1000)
    estimate = estimate_speed(spec, cfg)
    assert abs(estimate.z_score(reference_speed(spec))) <= 3.0
