"""Smoke test for the gregzeta extension module."""

from fractions import Fraction as F
import json

import gregzeta as gz


def main():
    assert gz.bernoulli(1) == F(1, 2)
    assert gz.bernoulli(2) == F(1, 6)
    assert gz.c_ir(4, 6) == F(211, 30240)
    assert gz.coefficient([1, 1]) == F(-1, 24)
    assert gz.gregory_coefficient(4, 4) == gz.c_ir(4, 6)
    assert gz.gtilde_coefficient(2, 3) == F(-1, 12)
    assert gz.g1_coefficient(2, 2) == 0
    assert gz.gregory_numbers(3) == [1, F(1, 2), F(-1, 12), F(1, 24)]

    p = gz.c_ir_poly(2, 2)
    assert p.coeffs == [F(1, 12), F(-1, 2), F(1, 2)]
    assert p(1) == gz.c_ir(2, 2)
    assert str(p) == "1/2*a^2 - 1/2*a + 1/12"
    assert gz.gregory_polynomial(1, 2) == gz.Polynomial([F(1, 2), -1])
    lam = gz.lambda_polynomials(4)
    assert [q(1) for q in lam] == [1, F(1, 2), F(1, 3), F(1, 4)]
    assert (lam[1] * lam[1]).degree == 2

    assert gz.main_term([1, 1]) == F(3, 8)
    assert gz.main_term([1, 1, 1]) == F(-5, 16)
    assert gz.main_term(["2/3", F(-1, 5), 7], a=[1, 1, 1]) == gz.main_term(["2/3", F(-1, 5), 7])
    try:
        gz.main_term([1, -1])
    except ArithmeticError as e:
        assert "ε_1+ε_2 = 0" in str(e)
    else:
        raise AssertionError("expected a domain error")

    table = json.loads(gz.render_table("cir"))
    assert table["cells"][5][3] == "211/30240"
    assert gz.render_table("lambda", "csv").splitlines()[2] == "2,a - 1/2"

    assert len(gz.check_ids()) == 18
    report = gz.run_check("C_EQ_G")
    assert report.passed and report.counterexample is None
    assert all(r.passed for r in gz.run_all("quick"))
    print("gregzeta smoke test: ok")


if __name__ == "__main__":
    main()
