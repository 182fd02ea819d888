import pytest

import diffrad


def test_radical_of_worked_polynomial():
    r = diffrad.radical("z^2*(z-1)*(z-2)^3")
    assert r["radical"] == diffrad.normalize("z*(z-2)^3")
    assert r["n_tilde"] == 4
    assert diffrad.radical_from_roots("1 ; (0,2), (1,1), (2,3)")["radical"] == r["radical"]


def test_order_m_and_classical():
    assert diffrad.radical("-4*z*(z+1)*(z+2)*(z+3)", m=3)["n_tilde"] == 2
    assert diffrad.classical_radical("(z^2-1)^2")["radical"] == "z^2 - 1"


def test_mason_triple_is_sharp():
    rep = diffrad.check_mason(["z*(z+1)", "-(z+2)*(z+3)", "-4*z-6"])
    assert rep.holds is True
    assert rep.sharp
    assert (rep.lhs, rep.rhs) == ("2", "2")
    assert rep.exit_code == 0
    assert "verdict" in str(rep)


def test_mason_multi_and_casoratian():
    polys = ["(z^2-4)*((z+1)^2-4)", "(z^2+4)*((z+1)^2+4)", "-2*z^2*(z+1)^2", "32"]
    rep = diffrad.check_mason(polys)
    assert rep.holds is True
    assert rep.artifacts["n_tilde_order_m"] == "4,4,4,0"
    assert diffrad.casoratian(["z", "z^2"]) == diffrad.normalize("z*(z+1)")


def test_unmet_hypotheses_have_no_verdict():
    rep = diffrad.check_mason(["z", "z+1", "z+2"])
    assert rep.holds is None
    assert rep.exit_code == 2


def test_fermat_degree_two():
    polys = ["z^2", "-(i/2)*(sqrt(2)*z^2+2*z-sqrt(2))", "-(1/2)*(sqrt(2)*z^2-2*z-sqrt(2))"]
    rep = diffrad.check_fermat(polys, n=2, form="sum", coprimality="pairwise")
    assert rep.holds is True
    assert rep.rhs == "5/2"
    assert diffrad.fermat_bound("sum", 2, 2) == ("5/2", 2)
    assert diffrad.factorial_poly("z", n=3) == diffrad.normalize("z*(z+1)*(z+2)")


def test_divisor_counts():
    pts = [("0", 2), ("1", 1), ("2", 3)]
    assert diffrad.n_count(pts, "1") == 3
    assert [diffrad.n_tilde_q(pts, "1", 1, str(r)) for r in (1, 2, 3)] == [1, 4, 4]
    value, error = diffrad.N_integrated([("1", 2)], "2")
    assert value == pytest.approx(1.3862943611198906, abs=1e-12)
    assert error < 1e-9
    assert diffrad.check_truncation([("0", 1)], q=2, n=5, radii=["1", "2", "5", "10"]).holds is True
    assert diffrad.check_ord_inequality(["1 ; (0,2)", "1 ; (-2,2)"]).holds is True


def test_errors_carry_codes():
    with pytest.raises(diffrad.DiffradError) as info:
        diffrad.radical("z + * 1")
    assert info.value.code == "SyntaxError"
    assert info.value.position == 4
    with pytest.raises(ValueError):
        diffrad.radical("z", kappa="0")
    with pytest.raises(diffrad.DiffradError) as info:
        diffrad.radical("z", adjoin=[4])
    assert info.value.code == "DIsSquare"
    assert diffrad.radical("z^2 - 5", adjoin=[5])["n_tilde"] == 2
