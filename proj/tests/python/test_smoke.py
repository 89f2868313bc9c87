import json

import pytest

import qeala


def test_scalar_arithmetic():
    mu = qeala.Scalar("mu")
    q = qeala.Scalar("q")
    assert str(mu * mu + mu + mu) == "mu^2 + 2*mu"
    assert q.conj() == qeala.Scalar("q^-1")
    assert (q - q).is_zero()
    assert qeala.Scalar("2 mu^2").mu_degree() == 2
    assert qeala.Scalar("q^2").evaluate("i", "0") == pytest.approx(-1)
    assert qeala.Scalar("q").evaluate("1:4", "0") == pytest.approx(1j)
    assert json.loads(qeala.Scalar("mu").to_json()) == [{"q": 0, "mu": 1, "re": "1", "im": "0"}]


def test_bracket_and_omega():
    assert qeala.bracket("E12[1,0]", "E21[-1,0]") == "E11[0,0] + (-1)*E22[0,0] + cs"
    assert qeala.bracket("E11[0,0]", "E11[0,1]") == "0"
    assert qeala.bracket("ds", "E21[2,1]") == "(2)*E21[2,1]"
    assert qeala.omega(qeala.omega("E21[2,3]")) == "E21[2,3]"


def test_representation_and_form():
    assert qeala.pi_apply("E21[1,0]", "1") == "x[1,0]"
    assert str(qeala.form("x[0,0]^2", "1")) == "0"
    assert str(qeala.form("x[0,0]^2", "x[0,0]^2")) == "2*mu^2 + 2*mu"
    constant = '{"kind": "constant", "a": 2, "c": 3, "d": "1/2"}'
    assert str(qeala.form("x[0,0]^2", "1", constant)) == "-6"


def test_gram_and_positivity():
    basis, entries = qeala.gram(1)
    assert len(basis) == 9
    for i, row in enumerate(entries):
        for j, e in enumerate(row):
            assert str(e) == ("mu" if i == j else "0")
    assert qeala.positivity(1, q="i", mu="1") == ("PD", pytest.approx(1.0))
    assert qeala.positivity(1, q="i", mu="0")[0] == "PSD-degenerate"
    assert qeala.positivity(1, q="i", mu="-1")[0] == "indefinite"
    assert qeala.positivity(1, q="1:8", mu="1/4")[0] == "PD"


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="position 6"):
        qeala.form("x[0,0", "1")
    with pytest.raises(ValueError):
        qeala.Scalar("x[0,0]")


def test_run_command():
    code, out, err = qeala.run_command(["form", "--f", "x[0,0]^2", "--g", "1", "--no-timing"])
    assert code == 0
    assert json.loads(out)["result"]["text"] == "0"
    code, out, err = qeala.run_command(["scan-mu", "--level", "1", "--mu=-1,0,1", "--q-exact", "i"])
    assert code == 0
    verdicts = [row["verdict"] for row in json.loads(out)["result"]["rows"]]
    assert verdicts == ["indefinite", "PSD-degenerate", "PD"]
    code, _, _ = qeala.run_command(["form", "--f", "x[0,0", "--g", "1"])
    assert code == 2
