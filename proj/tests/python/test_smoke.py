import json
import math

import pytest

try:
    import _core as core
except ImportError:  # installed package layout
    from airways import _core as core


def test_grid_basics():
    g = core.GridSpec()
    assert g.width_cells == 12 and g.height_cells == 12
    assert g.cell_count() == 144
    assert g.edge_pair_distance(1, 4) == pytest.approx(2.65)
    assert g.edge_pair_distance(3, 3) == pytest.approx(5.30)

    c = g.locate(2.65, 0.0)
    assert c is not None
    nbr = g.neighbor_across(c, 1)
    assert nbr is not None
    back = g.neighbor_across(nbr[0], nbr[1])
    assert back[0] == c


def test_entropy_and_costs():
    counts = [[0] * 6 for _ in range(6)]
    counts[3][0] = 5
    counts[3][1] = 5
    assert core.cell_entropy(counts) == pytest.approx(math.log(2.0))

    weights = core.normalized_matrix(counts)
    assert weights[3][0] == pytest.approx(0.5)

    u = core.unimpeded_matrix(2.65)
    assert u[0][3] == pytest.approx(2.65)


def test_run_scenario_and_errors():
    cfg = {"scenario": {"n_aircraft": 3, "seed": 4}, "traffic": {"k_t": 1.0}}
    m = core.run_scenario(json.dumps(cfg))
    assert len(m["travel_times"]) == 3
    assert m["stragglers"] == 0
    assert m["grid_entropy_nats"] >= 0.0

    with pytest.raises(core.ConfigError):
        core.run_scenario(json.dumps({"scenario": {"n_aircraft": -1}}))
    with pytest.raises(core.ConfigError):
        core.run_scenario(json.dumps({"bogus_section": {}}))


def test_run_demo_headon():
    m = core.run_demo("headon")
    assert m["stragglers"] == 0
    assert m["min_separation_mi"] > 0.5
    assert len(m["visited_cells"]) == 2


def test_run_sweep_csv():
    cfg = {"sweep": {"k_t_values": [0.0], "n_values": [2], "seeds": [1]}}
    csv = core.run_sweep(json.dumps(cfg), 2)
    lines = csv.strip().splitlines()
    assert lines[0].startswith("k_t,n_aircraft,seed,")
    assert len(lines) == 2
