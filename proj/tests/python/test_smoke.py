import json

import pytest

import nullkit

F3 = "field GF(3)\nvars x1, x2\nx1*x2 - 1\n"


def test_parse_and_render():
    ideal = nullkit.Ideal(F3)
    assert ideal.field == "GF(3)"
    assert ideal.vars == ["x1", "x2"]
    assert ideal.generators == ["x1*x2 + 2"]
    assert nullkit.Ideal(str(ideal)).generators == ideal.generators


def test_membership_and_dimension():
    ideal = nullkit.Ideal(F3)
    assert ideal.is_proper()
    assert ideal.contains("x1^2*x2^2 - 1")
    assert not ideal.contains("x1")
    assert ideal.quotient_dimension() is None
    assert nullkit.Ideal("field GF(2)\nvars x\nx^2 + x + 1").quotient_dimension() == 2
    assert not nullkit.Ideal("field QQ\nvars x\nx\nx + 1").is_proper()


def test_maximal_ideal():
    result = nullkit.Ideal(F3).maximal_ideal()
    assert result["generators"] == ["x1 + 2", "x2 + 2"]
    assert result["residue_degree"] == 1
    assert result["verified"]
    m = nullkit.Ideal("field GF(3)\nvars x1, x2\n" + "\n".join(result["generators"]))
    assert m.is_field()
    assert m.contains("x1*x2 - 1")


def test_field_operations():
    m = nullkit.Ideal("field GF(2)\nvars x\nx^2 + x + 1")
    assert m.is_field()
    inv = m.inverse("x")
    assert m.reduce(f"x*({inv})") == "1"
    assert not nullkit.Ideal("field GF(2)\nvars x\nx^2").is_field()


def test_radical_membership():
    ideal = nullkit.Ideal("field QQ\nvars x, y\nx^2\ny^2")
    assert ideal.radical_contains("x + y")
    assert not ideal.radical_contains("x + 1")


def test_resultant_normalize_factor():
    ring = nullkit.Ideal("field GF(5)\nvars x1, x2")
    assert ring.resultant("1 + x1*x2", "x1 + x2^2", "x2") == "x1^3 + 1"
    norm = nullkit.Ideal("field QQ\nvars x1, x2").normalize("x1^2*x2 + x2^3")
    assert norm["base"] == 4
    assert norm["predicted_degree"] == 9
    factors = nullkit.Ideal("field GF(5)\nvars x").factor("x^2 + 1")
    assert [m for _, m in factors] == [1, 1]


def test_cli_in_process():
    code, out, _ = nullkit.run(["--json", "proper"], F3)
    assert code == 0
    assert json.loads(out)["proper"] is True


def test_errors():
    with pytest.raises(nullkit.NullkitError):
        nullkit.Ideal("field GF(4)\nvars x\nx")
    with pytest.raises(ValueError):
        nullkit.Ideal(F3).contains("y")
