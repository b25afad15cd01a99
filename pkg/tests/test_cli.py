import json
import subprocess
import sys

import pytest

from radalign.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(capsys, data_path):
    code, out, _ = run(capsys, "analyze", data_path("three_edge.json"))
    data = json.loads(out)
    assert code == 0
    assert data["circuit"] == {"vertices": ["c"], "edges": []}
    assert data["stability"] == "stable"
    assert data["radii"]["D"] == {"beta": 1, "gamma": 1}
    assert data["total_degree"] == 5


def test_fan_radial_edgeless(capsys, data_path):
    code, out, _ = run(capsys, "fan", data_path("smooth3.json"), "--mode", "radial")
    data = json.loads(out)
    assert code == 0 and len(data["cells"]) == 1 and data["cells"][0]["dim"] == 0


@pytest.mark.parametrize("mode", ["radial", "central", "vz"])
def test_fan_modes_three_edge(capsys, data_path, mode):
    code, out, _ = run(capsys, "fan", data_path("three_edge.json"), "--mode", mode, "--check-free")
    data = json.loads(out)
    assert code == 0 and len(data["cells"]) == 3 and all(c["free"] for c in data["cells"])


def test_fan_explicit_order(capsys, data_path):
    order = "[[2, []], [2, [5]], [1, [1, 2]], [1, [1, 2, 5]], [1, [3, 4, 5]], [0, [1, 2, 3, 4, 5]]]"
    code, out, _ = run(capsys, "fan", data_path("three_edge.json"), "--mode", "vz", "--order", order)
    assert code == 0 and len(json.loads(out)["cells"]) == 3
    code, out, _ = run(capsys, "fan", data_path("three_edge.json"), "--mode", "vz", "--order", "[[2, []], [2, [5]]]")
    assert code == 0 and len(json.loads(out)["cells"]) == 3
    code, _, err = run(capsys, "fan", data_path("three_edge.json"), "--mode", "vz", "--order", "[[2, [5]], [2, []]]")
    assert code == 2 and "linear extension" in err
    code, _, _ = run(capsys, "fan", data_path("three_edge.json"), "--mode", "vz", "--order", "nope")
    assert code == 1


def test_delta_m_with_cell_file(capsys, data_path):
    code, out, _ = run(
        capsys, "delta-m", data_path("four_spoke.json"), "--cell", data_path("four_spoke_cell.json"), "--m", "5"
    )
    data = json.loads(out)
    assert code == 0 and data["delta"] == {"l1": 1}
    assert (data["circle"]["eta"], data["circle"]["tau"]) == (5, 7)


def test_delta_m_out_of_range(capsys, data_path):
    code, _, err = run(capsys, "delta-m", data_path("three_edge.json"), "--cell", "0", "--m", "5")
    assert code == 2 and "m must lie" in err


def test_contract(capsys, data_path):
    code, out, _ = run(capsys, "contract", data_path("three_edge.json"), "--cell", "0", "--radius", "B")
    data = json.loads(out)
    assert code == 0
    assert sorted(data["smyth"]["singular"]["branches"]) == ["B", "X:beta"]
    assert data["dot"].startswith("graph contracted {")


def test_radius(capsys, data_path):
    code, out, _ = run(capsys, "radius", data_path("three_edge.json"), "--cell", "0", "--degrees", "A=1,D=1")
    assert code == 0 and json.loads(out)["radius"] == {"beta": 1}
    code, out, _ = run(capsys, "radius", data_path("three_edge.json"), "--cell", "0", "--degrees", '{"c": 2}')
    assert code == 0 and json.loads(out)["radius"] == {}
    code, _, _ = run(capsys, "radius", data_path("three_edge.json"), "--cell", "0", "--degrees", "A=0")
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--max-edges", "1", "--poset")
    data = json.loads(out)
    assert code == 0 and data["total"] == 2 and data["counts"] == {"0": 1, "1": 1}
    assert len(data["specializations"]) == 1
    assert run(capsys, "enumerate", "--n", "1", "--max-edges", "9")[0] == 2


def test_check_equivalence(capsys, data_path):
    code, out, _ = run(capsys, "check-equivalence", data_path("three_edge.json"))
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["central_cells"] == 3 and data["vz_cells"] == [3, 3]


def test_malformed_inputs(capsys, data_path, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 1
    two = tmp_path / "two.json"
    two.write_text(json.dumps({"vertices": [{"id": "a", "genus": 1}, {"id": "b", "genus": 0}]}))
    assert run(capsys, "analyze", str(two))[0] == 1
    assert run(capsys, "contract", data_path("three_edge.json"), "--cell", "7", "--radius", "B")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["fan"])
    assert exc.value.code == 1


def test_precondition_exit_code(capsys, tmp_path):
    unstable = tmp_path / "u.json"
    unstable.write_text(
        json.dumps(
            {
                "vertices": [{"id": "c", "genus": 1}, {"id": "u", "genus": 0}],
                "edges": [{"id": "a", "ends": ["c", "u"], "length": "a"}],
                "legs": [{"label": 1, "at": "u"}],
            }
        )
    )
    assert run(capsys, "fan", str(unstable), "--mode", "central")[0] == 2


def test_entry_point_is_byte_deterministic(data_path):
    cmd = [sys.executable, "-m", "radalign", "fan", data_path("three_spoke.json"), "--mode", "central"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"}\n")
