import json

import pytest

import veronese_gb as vgb


def test_gamma_chain():
    assert vgb.enumerate_nds(2, 4) == [[2, 2], [3, 1], [1, 3], [4, 0], [0, 4]]
    assert vgb.gamma([3, 1, 2]) == [1, 2, 3]
    assert vgb.cmp_gamma_vars([2, 1], [1, 2]) == -1


def test_g_gamma_and_certificate():
    assert vgb.build_g_gamma(2, 2) == ["x[2,0]*x[0,2] - x[1,1]^2"]
    cert = vgb.verify_quad_gb(3, 2)
    assert cert["passed"]
    assert len(cert["basis"]) == 6


def test_groebner_basis_with_named_variables():
    basis = vgb.groebner_basis(["y1 - t", "y2 - t^2"], ["t", "y1", "y2"], "lex")
    assert "y1^2 - y2" in basis


def test_pullback_monomial_at_bound():
    res = vgb.pullback_monomial([[2, 2]], s=2, d=3, cross_check=True)
    assert res["passed"]
    assert res["max_degree"] == 2
    assert res["bound"] == 3


def test_pullback_homogeneous_ci_variant():
    res = vgb.pullback_homogeneous(["y1^2 - y2^2"], s=2, d=3, omega=[2, 1])
    assert res["passed"]
    assert res["max_degree"] <= 2


def test_weight_vector_and_bounds():
    w = vgb.find_weight_vector(["y1^2 - y2*y3"], 3, "lex")
    assert 2 * w[0] > w[1] + w[2]
    b = vgb.bounds([[1, 1, 1]], 3)
    assert b["paper"] == 3 and b["ert_rough"] == "7/2" and b["paper_below_rough"]


def test_toric():
    assert vgb.toric_ideal([[1, 0], [1, 1], [1, 2]]) == ["y2^2 - y1*y3"]
    cert = vgb.verify_toric_veronese([[1, 0], [1, 1], [1, 2]], 2)
    assert cert["passed"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(vgb.ParseError):
        vgb.groebner_basis(["y1 + + y2"], 2)
    with pytest.raises(vgb.NotAConfiguration):
        vgb.toric_ideal([[1], [2]])
    with pytest.raises(vgb.PreconditionError):
        vgb.pullback_homogeneous(["y1^2 - y2^2"], s=2, d=3, omega=[1, 1])
    with pytest.raises(vgb.VgbError):
        vgb.enumerate_nds(0, 3)


def test_cli_round_trip():
    code, out, err = vgb.run_cli(["veronese-gb", "--s", "2", "--d", "3", "--json"])
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["command"] == "veronese-gb"
    assert len(report["outputs"]["polynomials"]) == 3
