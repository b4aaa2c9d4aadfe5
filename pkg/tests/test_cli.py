import json
from fractions import Fraction

import pytest

from normbasis.cli import main, parse_poly_text
from normbasis.errors import BadParameter


def test_parse_poly_text():
    assert [int(c) for c in parse_poly_text("x^3-2").coeffs] == [-2, 0, 0, 1]
    assert [int(c) for c in parse_poly_text("x^2+1").coeffs] == [1, 0, 1]
    assert [int(c) for c in parse_poly_text("2*x^2 - 3*x + 5").coeffs] == [5, -3, 2]
    assert [int(c) for c in parse_poly_text("-x+1").coeffs] == [1, -1]
    assert [int(c) for c in parse_poly_text("x+x").coeffs] == [0, 2]
    assert [str(c) for c in parse_poly_text("1/2+1/2*x").coeffs] == ["1/2", "1/2"]
    with pytest.raises(BadParameter):
        parse_poly_text("x^")
    with pytest.raises(BadParameter):
        parse_poly_text("y+1")
    with pytest.raises(BadParameter):
        parse_poly_text("")


def test_field_info(capsys):
    assert main(["field-info", "--field", "catalog:quadratic(-1)"]) == 0
    out = capsys.readouterr().out
    assert "disc -4" in out


def test_normal_basis_catalog_json(capsys):
    assert main(["normal-basis", "--field", "catalog:quadratic(-1)", "--json"]) == 0
    env = json.loads(capsys.readouterr().out)
    assert env["report"]["alpha"] == ["1", "1"]
    assert env["report"]["coords"] == [1, 1]
    assert env["report"]["delta"] == "8"
    assert env["report"]["status"] == "OK"
    assert "timestamp" in env


def test_primitive_element_poly(capsys):
    assert main(["primitive-element", "--poly", "x^3-2", "--json"]) == 0
    env = json.loads(capsys.readouterr().out)
    assert env["report"]["alpha"] == ["0", "1", "0"]
    assert env["report"]["minpoly"] == ["-2", "0", "0", "1"]


def test_normal_basis_not_galois_exit_3(capsys):
    assert main(["normal-basis", "--poly", "x^3-2"]) == 3
    assert "Galois" in capsys.readouterr().err


def test_reducible_input_exit_1(capsys):
    assert main(["normal-basis", "--poly", "x^2-1"]) == 1
    assert main(["field-info", "--poly", "x^2-1"]) == 1


def test_input_errors_exit_1(capsys):
    assert main(["normal-basis"]) == 1
    assert main(["normal-basis", "--poly", "x^+"]) == 1
    assert main(["check-product", "--field", "catalog:quadratic(-1)",
                 "--ideal", "1+x"]) == 1


def test_ideal_minima(capsys):
    assert main(["ideal-minima", "--field", "catalog:quadratic(-1)",
                 "--ideal", "1+x", "--json"]) == 0
    env = json.loads(capsys.readouterr().out)
    assert env["report"]["norm"] == "2"
    lam = env["report"]["minima"]["lambdas"][1]
    assert abs(float(lam["hi"]) - 2 ** 0.5) < 1e-9


def test_check_product_and_bounds(capsys):
    assert main(["check-product", "--field", "catalog:quadratic(-1)",
                 "--ideal", "1+x", "--ideal", "1+x", "--k", "1", "--l", "2"]) == 0
    assert main(["check-bounds", "--field", "catalog:quadratic(-1)"]) == 0
    capsys.readouterr()


def test_verify_roundtrip_byte_stable(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["normal-basis", "--field", "catalog:cyclotomic(5)",
                 "--output", str(out)]) == 0
    capsys.readouterr()
    assert main(["normal-basis", "--field", "catalog:cyclotomic(5)",
                 "--verify", str(out), "--json"]) == 0
    env = json.loads(capsys.readouterr().out)
    assert env["report"]["verify"] == {"valid": True, "byte_stable": True}
    # tampered certificate fails with an input error
    data = json.loads(out.read_text())
    data["report"]["delta"] = "1"
    out.write_text(json.dumps(data))
    assert main(["normal-basis", "--field", "catalog:cyclotomic(5)",
                 "--verify", str(out)]) == 1


def test_fieldspec_json_file(tmp_path, capsys):
    spec = {"poly": [-2, 0, 1], "label": "sqrt2 via file"}
    p = tmp_path / "field.json"
    p.write_text(json.dumps(spec))
    assert main(["field-info", "--field", str(p)]) == 0
    assert "degree 2" in capsys.readouterr().out


def test_basis_flag(capsys):
    # Q(sqrt5) with its maximal order passed explicitly
    assert main(["field-info", "--poly", "x^2-5",
                 "--basis", '[["1","0"],["1/2","1/2"]]']) == 0
    assert "order-relative: true" in capsys.readouterr().out.lower()


def test_seed_recorded(capsys):
    assert main(["field-info", "--field", "catalog:quadratic(2)",
                 "--seed", "42", "--json"]) == 0
    env = json.loads(capsys.readouterr().out)
    assert env["seed"] == 42
