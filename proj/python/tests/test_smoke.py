import json
import pathlib

import pytest

import flownet

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_loop_has_one_flow():
    report = flownet.basis(load("loop.json"))
    assert report["exit_code"] == 0
    assert report["result"]["dim"] == 1
    assert report["result"]["chains"] == [{"g": ["1"]}]


def test_torsion_over_z():
    report = flownet.obstruction(load("loop3_z.json"), ring="z")
    assert report["result"]["presentation"]["text"] == "Z/2"


def test_current_divider():
    report = flownet.solve2(load("current_divider.json"), {"diagonal": [1, 3]}, {"in": [-1], "out": [1]})
    assert report["result"]["chain"] == {"r1": ["3/4"], "r2": ["1/4"]}
    assert report["result"]["verification"]["both_zero"]


def test_obstructed_potential_exit_code():
    report = flownet.solve2(load("current_divider.json"), {"diagonal": [1, 1]}, {"in": [1]})
    assert report["exit_code"] == 1
    assert report["error"]["code"] == "ObstructionNonzero"


def test_check_residuals():
    report = flownet.check(load("single_arrow.json"), {"x": [1]})
    assert report["exit_code"] == 1
    assert report["result"]["residual"]["internal"] == {"a": ["-1"], "b": ["1"]}


def test_external_override():
    net = load("two_terminal.json")
    assert flownet.basis(net, external=[])["result"]["dim"] < flownet.basis(net)["result"]["dim"]


def test_oracle_seed_batch():
    report = flownet.oracle(seed=3, count=10)
    assert report["result"]["all_match"]
    assert len(report["result"]["cases"]) == 10


def test_cover_circle():
    report = flownet.cover(load("circle.json"), load("circle_covering.json"))
    dims = report["result"]["dims"]
    assert (dims["colim2_obstruction"], dims["colim0_flow"], dims["global_flow"], dims["colim1_obstruction"]) == (0, 0, 1, 1)
    assert report["result"]["pass"]


def test_colim_pushout():
    report = flownet.colim(load("pushout_poset.json"), load("pushout_functor.json"), degree=1)
    assert report["result"]["presentation"]["free_rank"] == 1


def test_malformed_input_is_exit_2():
    report = flownet.basis("{ not json")
    assert report["exit_code"] == 2


def test_linear_algebra_helpers():
    assert flownet.rank([[1, 2], [2, 4]]) == 1
    assert flownet.kernel([[1, 1]]) == [["-1"], ["1"]]
    assert flownet.smith_diagonal([[2, 4], [6, 8]]) == [2, 4]


def test_bad_matrix_raises():
    with pytest.raises(Exception):
        flownet.rank("[[1, 2], [3]]")
