from fractions import Fraction

import pytest

import smz


def test_truncated_value():
    assert smz.smzv([[None, 1], [1, 2]], 5) == Fraction(6391, 5760)
    # a single row is zeta-star: sum_{m1<=m2<=3} 1/(m1 m2^2)
    assert smz.smzv([[1, 2]], 3) == sum(Fraction(1, a * b * b) for a in range(1, 4) for b in range(a, 4))
    assert smz.smzv_float([[2]], 3) == pytest.approx(1 + 1 / 4 + 1 / 9)


def test_constants():
    assert smz.constant([2, 1], 2) == (Fraction(1, 840), 6)
    assert smz.constant([2, 2], 2) == (Fraction(11, 302400), 8)


def test_antipode():
    assert smz.antipode("M[2,1]") == "M[1,2] + M[3]"


def test_dual():
    assert smz.dual([[None, None, 2], [None, 1, 2], [2, 2]]) == [[2, 3, 2], [2]]
    assert smz.dual([[None, None, 1], [2, 1, 2]]) is None


def test_jacobi_trudi():
    r = smz.jacobi_trudi([2, 2, 1], {-2: 2, -1: 1, 0: 3, 1: 2}, 3, "E")
    assert r["verdict"] == "equal"
    assert r["lhs"] == "37/3888"


def test_duality_check():
    r = smz.check_duality([[1, 2]], {"terms": [(2, [[3]])]})
    assert r["verdict"] == "pass"


def test_bad_input():
    # corner entry 1
    with pytest.raises(ValueError):
        smz.dual([[2, 1]])
    with pytest.raises(ValueError):
        smz.constant([2, 1], 3)
