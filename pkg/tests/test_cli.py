import json

import pytest

import pdextremal.cli as cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_constant_tile_value(capsys):
    code, out = run(capsys, [
        "constant",
        "--group", '{"orders":[6],"normalization":"probability"}',
        "--omega-plus", "[5,0,1]",
        "--omega-minus", "empty",
        "--kind", "two-set",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["value"] == pytest.approx(1 / 3, abs=1e-8)
    assert payload["artifact_version"]
    assert "tolerances" in payload and "seed" in payload


def test_interval_shorthand(capsys):
    code, out = run(capsys, [
        "constant",
        "--group", '{"orders":[12],"normalization":"probability"}',
        "--omega-plus", "[-3,3]",
        "--kind", "turan",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["omega_plus"] == [0, 1, 2, 3, 9, 10, 11]
    assert payload["result"]["value"] == pytest.approx(1 / 3, abs=1e-8)


def test_residue_pair_is_not_an_interval(capsys):
    code, out = run(capsys, [
        "constant",
        "--group", '{"orders":[12],"normalization":"probability"}',
        "--omega-plus", "[0,3]",
        "--kind", "turan",
    ])
    assert code == 0
    payload = json.loads(out)
    # read as the residue pair {0, 3}, then symmetrized by intersection; the
    # interval reading would have produced {0, 1, 2, 3, 9, 10, 11}
    assert payload["result"]["omega_plus"] == [0]
    assert payload["warnings"]


def test_symmetrization_warning(capsys):
    code, out = run(capsys, [
        "constant",
        "--group", '{"orders":[6],"normalization":"probability"}',
        "--omega-plus", "[0,1]",
        "--kind", "delsarte",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["warnings"]


def test_malformed_json_exits_one(capsys):
    code = cli.main([
        "constant",
        "--group", '{"orders":[6],', "--omega-plus", "[0]",
    ])
    err = capsys.readouterr().err
    assert code == 1
    assert "line" in err and "column" in err


def test_verify_exit_codes(capsys, monkeypatch):
    code, out = run(capsys, ["verify", "tile", "--fuzz", "5", "--seed", "9"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["pass"] is True
    assert payload["seed"] == 9

    monkeypatch.setitem(cli.SUITES, "tile",
                        lambda count, seed, max_n=None: {"pass": False, "failures": count})
    code, _ = run(capsys, ["verify", "tile", "--fuzz", "5", "--seed", "9"])
    assert code == 2


def test_verify_deterministic_bytes(capsys):
    argv = ["verify", "main", "--fuzz", "12", "--seed", "7", "--max-n", "30"]
    code1, out1 = run(capsys, argv)
    code2, out2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_radial_csv(capsys):
    code, out = run(capsys, ["radial", "yudin", "--d", "1", "--t-max", "5",
                             "--step", "0.5", "--csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,Y"
    assert len(lines) == 12
    first = lines[1].split(",")
    assert float(first[0]) == 0.0 and float(first[1]) == 1.0


def test_radial_hankel_json(capsys):
    code, out = run(capsys, ["radial", "hankel", "--d", "1", "--s-max", "1",
                             "--step", "0.5"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["result"]["table"]) == 3


def test_trinomial_optimize(capsys):
    code, out = run(capsys, ["trinomial", "optimize"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["value"] == pytest.approx(2.2361, abs=5e-4)
    assert payload["result"]["z"] == pytest.approx(0.628, abs=5e-3)


def test_density_search_and_shadow(capsys):
    code, out = run(capsys, ["density", "search", "--forbidden", "[1,4]",
                             "--max-period", "10"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["density"]["numerator"] == 2
    assert payload["result"]["density"]["denominator"] == 5
    assert payload["result"]["witness"] == {"period": 5, "residues": [0, 2]}

    code, out = run(capsys, ["density", "shadow", "--intervals",
                             "[[-5,-3],[-2,2],[3,5]]"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["forbidden"] == [1, 4]

    code, out = run(capsys, ["density", "auud", "--period", "5",
                             "--residues", "[0,2]"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["density"]["value"] == pytest.approx(0.4)


def test_usage_error_exits_one(capsys):
    assert cli.main(["constant", "--group", "{}", "--omega-plus", "[0]"]) == 1
    assert cli.main(["no-such-command"]) == 1


def test_numerical_failure_exits_three(capsys, monkeypatch):
    from pdextremal.radial import QuadratureError

    def boom(*args, **kwargs):
        raise QuadratureError("refinement disagreement")

    monkeypatch.setattr(cli, "yudin_hat_grid", boom)
    assert cli.main(["radial", "hankel", "--d", "1", "--s-max", "1", "--step", "0.5"]) == 3
