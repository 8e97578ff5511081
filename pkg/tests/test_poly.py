from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, Matrix, Poly, symbols

from dtsldpc import poly
from dtsldpc.field import make_field

z = symbols("z")
F = make_field(7)
coeffs = st.lists(st.integers(0, 6), max_size=6)


def sp(a):
    return Poly(list(reversed(a)) or [0], z, domain=GF(7))


def back(p):
    return poly.trim([int(c) % 7 for c in reversed(p.all_coeffs())])


@settings(max_examples=150, deadline=None)
@given(coeffs, coeffs)
def test_ring_ops_match_sympy(a, b):
    a, b = poly.trim(a), poly.trim(b)
    assert poly.add(F, a, b) == back(sp(a) + sp(b))
    assert poly.mul(F, a, b) == back(sp(a) * sp(b))
    if b:
        q, r = poly.divmod_(F, a, b)
        sq, sr = sp(a).div(sp(b))
        assert (q, r) == (back(sq), back(sr))
        g = poly.gcd(F, a, b)
        assert g == back(sp(a).gcd(sp(b)).monic())


def test_degree_and_trim():
    assert poly.degree(()) == -1
    assert poly.trim([1, 0, 0]) == (1,)
    assert poly.degree((0, 0, 3)) == 2


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        poly.exact_div(F, (1, 1), (0, 1))


def test_det_matches_sympy():
    entries = [[(1, 2), (0, 1), (3,)], [(5,), (1, 0, 1), ()], [(2, 2), (4,), (1, 1)]]
    M = Matrix([[sp(e).as_expr() for e in row] for row in entries])
    expected = Poly(M.det(), z, domain=GF(7))
    assert poly.det(F, entries) == back(expected)


def test_evaluate():
    assert poly.evaluate(F, (1, 2, 3), 2) == (1 + 4 + 12) % 7
