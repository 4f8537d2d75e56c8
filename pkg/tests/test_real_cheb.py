"""Cosine subfield: minimal polynomials, Chebyshev identity, real minors."""

import mpmath
import pytest

from fourier_minors.real_cheb import (
    CosineField,
    chebyshev_identity_check,
    chebyshev_polynomial,
    cosine_minpoly,
    dct_matrix,
    det_in_numberfield,
    phi_sequence,
    power_matrix,
    verify_dct_minors,
    verify_real_minors,
)
from fourier_minors.rings import poly_eval
from fourier_minors.schur import WorkBudgetError

mpmath.mp.dps = 60


def test_minpoly_small_pins():
    # degree-2 case: X^2 + X - 1
    assert cosine_minpoly(5) == [-1, 1, 1]
    # degree-3 case: X^3 + X^2 - 2X - 1
    assert cosine_minpoly(7) == [-1, -2, 1, 1]
    P11 = cosine_minpoly(11)
    assert len(P11) == 6 and P11[-1] == 1


def test_minpoly_value_at_two():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        assert poly_eval(cosine_minpoly(p), 2) == p


def test_minpoly_vanishes_at_cosine_node():
    for p in (5, 7, 11, 13):
        t = 2 * mpmath.cos(2 * mpmath.pi / p)
        P = cosine_minpoly(p)
        val = sum(c * t**i for i, c in enumerate(P))
        assert abs(val) < mpmath.mpf("1e-40")


def test_minpoly_rejects_bad_input():
    with pytest.raises(ValueError):
        cosine_minpoly(2)
    with pytest.raises(ValueError):
        cosine_minpoly(9)


def test_chebyshev_polynomial_pins():
    assert chebyshev_polynomial(0) == [1]
    assert chebyshev_polynomial(1) == [0, 1]
    assert chebyshev_polynomial(2) == [-1, 0, 2]
    assert chebyshev_polynomial(3) == [0, -3, 0, 4]


def test_chebyshev_polynomial_cosine_property():
    theta = mpmath.mpf("0.371")
    for m in (4, 9, 16):
        T = chebyshev_polynomial(m)
        val = sum(c * mpmath.cos(theta) ** i for i, c in enumerate(T))
        assert abs(val - mpmath.cos(m * theta)) < mpmath.mpf("1e-45")


def test_chebyshev_identity_moderate():
    for p in (3, 5, 7, 11, 13, 17):
        assert chebyshev_identity_check(p)


def test_phi_sequence_structure():
    for p in (5, 7, 11, 13):
        seq = phi_sequence(p)
        assert len(seq) == (p - 1) // 2
        for j, f in enumerate(seq, start=1):
            assert len(f) == j + 1 and f[-1] == 1  # monic of degree j
            assert poly_eval(f, 2) == 2  # shared fixed point


def test_phi_sequence_cosine_values():
    p = 11
    t1 = 2 * mpmath.cos(2 * mpmath.pi / p)
    for j, f in enumerate(phi_sequence(p), start=1):
        val = sum(c * t1**i for i, c in enumerate(f))
        assert abs(val - 2 * mpmath.cos(2 * mpmath.pi * j / p)) < mpmath.mpf(
            "1e-40"
        )


def test_cosine_field_conjugate_folding():
    cf = CosineField.build(7)
    assert cf.n == 3
    assert cf.conjugate(4) == cf.conjugate(3)  # 4 = 7 - 3 folds down
    assert cf.conjugate(8) == cf.conjugate(1)  # reduced mod 7 first
    with pytest.raises(ValueError):
        cf.conjugate(0)
    with pytest.raises(ValueError):
        cf.conjugate(7)


def test_det_in_numberfield_2x2():
    cf = CosineField.build(5)
    nf = cf.nf
    g1, g2 = cf.gens
    det = det_in_numberfield(nf, [[g1, g2], [g2, g1]])
    expected = nf.sub(nf.mul(g1, g1), nf.mul(g2, g2))
    assert det == expected
    singular = det_in_numberfield(nf, [[g1, g1], [g1, g1]])
    assert nf.is_zero(singular)


def test_dct_rows_permute_the_conjugates():
    cf = CosineField.build(11)
    base = sorted(map(tuple, cf.gens))
    for row in dct_matrix(cf):
        assert sorted(map(tuple, row)) == base


def test_power_matrix_shape_and_first_column():
    cf = CosineField.build(7)
    M = power_matrix(cf)
    assert len(M) == 3 and all(len(r) == 3 for r in M)
    for j in range(1, 4):
        assert M[j - 1][0] == cf.conjugate(j)


MINOR_COUNTS = {5: 5, 7: 19}  # sum over k of C(n,k)^2, n = (p-1)/2


def test_verify_real_minors_small():
    for p, want in MINOR_COUNTS.items():
        rep = verify_real_minors(p)
        assert rep.verified and rep.first_violation is None
        assert rep.minors_checked == want
        assert rep.to_dict()["q"] == "char 0"


def test_verify_dct_minors_small():
    for p, want in MINOR_COUNTS.items():
        rep = verify_dct_minors(p)
        assert rep.verified and rep.first_violation is None
        assert rep.minors_checked == want


def test_minor_sweep_budget_guard():
    with pytest.raises(WorkBudgetError):
        verify_real_minors(19)  # n = 9 exceeds the sweep limit
