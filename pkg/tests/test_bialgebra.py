from fractions import Fraction

import pytest

from hopfloop.bialgebra import bialgebra_report, dualize, loop_algebra
from hopfloop.errors import NotIPLoop
from hopfloop.exactmat import Matrix, kron
from hopfloop.fixtures import cyclic_table, ip7_non_moufang_table, latin5_non_ip_table
from hopfloop.loops import analyze_loop


def test_loop_algebra_c2(kc2):
    assert kc2.dim == 2
    assert kc2.antipode == Matrix.identity(2)
    assert bialgebra_report(kc2).ok
    assert kc2.is_associative and kc2.is_coassociative


def test_loop_algebra_s3_antipode_is_inversion(s3, ks3):
    inv = analyze_loop(s3).inverse
    expected = [[0] * 6 for _ in range(6)]
    for k in range(6):
        expected[inv[k]][k] = 1
    assert ks3.antipode == Matrix.from_int_rows(expected)
    assert ks3.antipode != Matrix.identity(6)


def test_loop_algebra_rejects_non_ip_tables():
    with pytest.raises(NotIPLoop):
        loop_algebra(latin5_non_ip_table())


def test_bialgebra_axioms_hold_on_fixtures(ks3, km12, monoid):
    for b in (ks3, km12, monoid, dualize(km12)):
        assert bialgebra_report(b).ok


def test_m12_algebra_flags(km12):
    assert not km12.is_associative
    assert km12.is_coassociative
    assert km12.associativity_witness == (1, 2, 6)


def test_dualize_involutive(km12):
    dd = dualize(dualize(km12))
    assert dd.mult == km12.mult
    assert dd.comult == km12.comult
    assert dd.unit == km12.unit
    assert dd.counit == km12.counit
    assert dd.antipode == km12.antipode


def test_dual_swaps_associativity(km12):
    dual = dualize(km12)
    assert dual.is_associative
    assert not dual.is_coassociative


def test_dual_of_c2_selfdual_via_character_matrix(kc2):
    # columns of P are the characters of the two-element group
    dual = dualize(kc2)
    p = Matrix.from_int_rows([[1, 1], [1, -1]])
    pp = kron(p, p)
    assert p @ kc2.mult_matrix == dual.mult_matrix @ pp
    assert dual.comult_matrix @ p == pp @ kc2.comult_matrix
    unit_col = Matrix(2, 1, kc2.unit, kc2.field)
    dual_unit_col = Matrix(2, 1, dual.unit, dual.field)
    assert p @ unit_col == dual_unit_col
    counit_row = Matrix(1, 2, kc2.counit, kc2.field)
    dual_counit_row = Matrix(1, 2, dual.counit, dual.field)
    assert dual_counit_row @ p == counit_row
    assert p @ kc2.antipode == dual.antipode @ p


def test_ip7_loop_algebra_valid():
    b = loop_algebra(ip7_non_moufang_table())
    assert bialgebra_report(b).ok
    assert not b.is_associative


def test_product_vec_matches_table(ks3, s3):
    one = Fraction(1)
    for i in range(6):
        for j in range(6):
            assert ks3.product_basis(i, j) == {s3.table[i][j]: one}


def test_delta2_conventions(km12):
    # grouplike: every iterated coproduct is the diagonal
    for k in range(km12.dim):
        assert km12.delta2_right(k) == [((k, k, k), Fraction(1))]
        assert km12.delta2_left(k) == [((k, k, k), Fraction(1))]
