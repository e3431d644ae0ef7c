from fractions import Fraction

import pytest

import udeform

SZERO = ("p", 1, 1, 0)
RZERO = ("p", 1, 0, 1)


def test_table_rows():
    fx, _ = udeform.f_pair(SZERO, "29/13")
    assert fx == [1, 3, 6, 7, 7, 4, 1]
    fx, _ = udeform.f_pair(RZERO, Fraction(17, 2))
    assert fx == [1, 4, 14, 10, 25, 6, 13, 1, 2]


def test_quantize_and_series():
    assert udeform.quantize(SZERO, "7/5") == ([1, 3, 3], [1, 2, 2])
    s = udeform.series(RZERO, "17/2", 8)
    assert s == [1, -1, 13, -65, 283, -1233, 5465, -24273, 107594]
    assert all(isinstance(c, Fraction) for c in s)


def test_integer_matrix_specializes_to_x():
    for x in ("17/31", "9/4", 5):
        num, den = udeform.quantize((1, 1, 1, 0), x)
        assert Fraction(num[0], den[0]) == Fraction(x)


def test_constants():
    coeffs, proved = udeform.constant_series("golden", 10)
    assert proved
    assert coeffs[-1] == -4862
    assert udeform.q_constant_series("golden", 6)[2:] == [1, -1, 2, -4, 8]


def test_q_deformation():
    assert udeform.q_deform("7/5") == ([1, 1, 2, 2, 1], [1, 1, 2, 1])
    assert udeform.q_series(1, 3) == [1, 0, 0, 0]


def test_continued_fractions():
    assert udeform.cf_expand("17/31") == [0, 1, 1, 4, 1, 2]
    assert udeform.ell("17/31") == 9
    assert udeform.j_quotient("5/2") == Fraction(4, 3)
    assert udeform.codenominator("4/9") == 11


def test_check_reports():
    r = udeform.check("integrality", max_ell=6, order=12)
    assert r["holds"] and r["tested"] == 63
    r = udeform.check("stabilization", max_ell=6)
    assert not r["holds"]
    assert r["counterexample"]["x"] == "3/2"


def test_errors():
    with pytest.raises(udeform.DegenerateMatrixError):
        udeform.f_pair((1, 1, 1, 1), 2)
    with pytest.raises(ValueError):
        udeform.cf_expand("-1/2")
    with pytest.raises(ValueError):
        udeform.f_pair(("p", 1, 1), 2)
    with pytest.raises(ZeroDivisionError):
        udeform.quantize((1, -1, 1, 0), "1/2")
    with pytest.raises(udeform.StabilizationError):
        udeform.constant_series("e", 5, RZERO)
    with pytest.raises(udeform.TermsExhaustedError):
        udeform.constant_series("pi", 400)
