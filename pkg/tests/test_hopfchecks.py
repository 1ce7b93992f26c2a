import random
from fractions import Fraction

import pytest

from hopfloop.bialgebra import LinMap, dualize, loop_algebra
from hopfloop.errors import (
    DimensionMismatch,
    NoAntipodeExtractable,
    NotBijective,
    PreconditionViolated,
)
from hopfloop.exactmat import Matrix
from hopfloop.fixtures import ip7_non_moufang_table
from hopfloop.hopfchecks import (
    antipode_extract,
    check_antipode_axioms,
    check_galois_compat,
    check_hqg_identity,
    closed_form_galois_inverse,
    convolution_unit,
    convolve,
    equivalence_report,
    galois_matrix,
    invert_galois,
    lr_convolution_invertible,
)


def identity_map(b):
    return LinMap(b.dim, b.dim, Matrix.identity(b.dim, b.field))


def random_map(b, seed):
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(b.dim)] for _ in range(b.dim)]
    return LinMap(b.dim, b.dim, Matrix.from_rows(rows))


# -- convolution ------------------------------------------------------------


def test_convolution_unit_law(ks3):
    unit = convolution_unit(ks3, ks3)
    for seed in (1, 2):
        f = random_map(ks3, seed)
        assert convolve(unit, f, ks3, ks3).matrix == f.matrix
        assert convolve(f, unit, ks3, ks3).matrix == f.matrix


def test_convolve_antipode_with_id_gives_unit(ks3):
    s = LinMap(6, 6, ks3.antipode)
    unit = convolution_unit(ks3, ks3)
    assert convolve(s, identity_map(ks3), ks3, ks3).matrix == unit.matrix
    assert convolve(identity_map(ks3), s, ks3, ks3).matrix == unit.matrix


def test_convolve_id_id_on_c2(kc2):
    conv = convolve(identity_map(kc2), identity_map(kc2), kc2, kc2)
    # g * g = e on both basis elements
    assert conv.matrix == Matrix.from_int_rows([[1, 1], [0, 0]])


def test_convolution_associative_on_random_triples(ks3):
    f, g, h = (random_map(ks3, s) for s in (11, 12, 13))
    left = convolve(convolve(f, g, ks3, ks3), h, ks3, ks3)
    right = convolve(f, convolve(g, h, ks3, ks3), ks3, ks3)
    assert left.matrix == right.matrix


def test_convolve_shape_errors(ks3, kc2):
    with pytest.raises(DimensionMismatch):
        convolve(identity_map(kc2), identity_map(ks3), ks3, ks3)


# -- Galois matrices -----------------------------------------------------------


def grouplike_galois_oracle(b, table, which):
    """For loop algebras both maps permute basis tensors; build directly."""
    d = b.dim
    rows = [[0] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            if which == "t1":
                rows[i * d + table[i][j]][i * d + j] = 1
            else:
                rows[table[i][j] * d + j][i * d + j] = 1
    return Matrix.from_int_rows(rows)


def test_galois_matrix_matches_permutation_oracle(kc2, ks3, s3):
    c2_table = ((0, 1), (1, 0))
    for which in ("t1", "t2"):
        assert galois_matrix(kc2, which) == grouplike_galois_oracle(kc2, c2_table, which)
        assert galois_matrix(ks3, which) == grouplike_galois_oracle(ks3, s3.table, which)


def test_galois_matrix_shape(km12):
    t = galois_matrix(km12, "t1")
    assert t.rows == t.cols == 144


def test_invert_galois_c2_permutation_inverse(kc2):
    rep = invert_galois(kc2, "t1")
    assert rep.bijective
    assert rep.inverse == galois_matrix(kc2, "t1").transpose()
    assert rep.formula_inverse_matches


def test_monoid_galois_kernel(monoid):
    t1 = galois_matrix(monoid, "t1")
    rep = invert_galois(monoid, "t1")
    assert not rep.bijective and rep.inverse is None
    # explicit kernel vector z (x) 1 - z (x) z
    kernel = Matrix.from_int_rows([[0], [0], [1], [-1]])
    assert (t1 @ kernel).is_zero()


def test_m12_galois_bijective_formula_matches(km12):
    for which in ("t1", "t2"):
        rep = invert_galois(km12, which)
        assert rep.bijective and rep.formula_inverse_matches


def test_closed_form_inverse_is_two_sided_inverse(km12):
    for which in ("t1", "t2"):
        t = galois_matrix(km12, which)
        cf = closed_form_galois_inverse(km12, which, km12.antipode)
        eye = Matrix.identity(144)
        assert t @ cf == eye and cf @ t == eye


# -- antipode extraction ------------------------------------------------------------


def test_extract_c2_identity(kc2):
    assert antipode_extract(kc2, "t1").matrix == Matrix.identity(2)


def test_extract_s3_matches_stored(ks3):
    assert antipode_extract(ks3, "t1").matrix == ks3.antipode
    assert antipode_extract(ks3, "t2").matrix == ks3.antipode


def test_extract_agrees_both_routes_m12(km12):
    assert antipode_extract(km12, "t1").matrix == antipode_extract(km12, "t2").matrix == km12.antipode


def test_extract_fails_on_monoid(monoid):
    with pytest.raises(NotBijective):
        antipode_extract(monoid, "t1")


# -- antipode axioms -------------------------------------------------------------------


def test_s3_hopf_axioms(ks3):
    rep = check_antipode_axioms(ks3, ks3.antipode, "hopf")
    assert rep.ok and rep.flags == {"left": True, "right": True}


def test_m12_quasigroup_axioms_but_not_hopf_mode(km12):
    rep = check_antipode_axioms(km12, km12.antipode, "quasigroup")
    assert rep.ok
    with pytest.raises(PreconditionViolated):
        check_antipode_axioms(km12, km12.antipode, "hopf")


def test_m12_wrong_antipode_witness(km12):
    rep = check_antipode_axioms(km12, Matrix.identity(12), "quasigroup")
    assert not rep.ok
    # first basis element that is not its own inverse
    tup, lhs, rhs = rep.witnesses["left_outer"]
    assert tup == (3, 0)


def test_dual_m12_coquasigroup_axioms(km12):
    dual = dualize(km12)
    rep = check_antipode_axioms(dual, dual.antipode, "coquasigroup")
    assert rep.ok
    with pytest.raises(PreconditionViolated):
        check_antipode_axioms(dual, dual.antipode, "quasigroup")


def test_hqg_identities(km12):
    assert check_hqg_identity(km12, "flexible", "quasigroup").ok
    assert check_hqg_identity(km12, "moufang", "quasigroup").ok
    dual = dualize(km12)
    assert check_hqg_identity(dual, "flexible", "coquasigroup").ok
    assert check_hqg_identity(dual, "moufang", "coquasigroup").ok


def test_duality_transport_of_identity_verdicts():
    b = loop_algebra(ip7_non_moufang_table())
    dual = dualize(b)
    for mode in ("flexible", "moufang"):
        primal = check_hqg_identity(b, mode, "quasigroup").ok
        transported = check_hqg_identity(dual, mode, "coquasigroup").ok
        assert primal == transported
    assert check_hqg_identity(b, "flexible", "quasigroup").ok
    assert not check_hqg_identity(b, "moufang", "quasigroup").ok


def test_quasigroup_axioms_transport_to_dual():
    b = loop_algebra(ip7_non_moufang_table())
    dual = dualize(b)
    assert check_antipode_axioms(b, b.antipode, "quasigroup").ok
    assert check_antipode_axioms(dual, dual.antipode, "coquasigroup").ok


# -- compatibility maps ---------------------------------------------------------------------


def test_s3_thm31_compat_all_true(ks3):
    for which in ("t1", "t2"):
        rep = check_galois_compat(ks3, which, "thm31_module_comodule")
        assert rep.ok


def test_m12_module_map_fails_comodule_holds(km12):
    rep = check_galois_compat(km12, "t1", "thm31_module_comodule")
    assert rep.flags == {"module_map": False, "comodule_map": True}
    tup, lhs, rhs = rep.witnesses["module_map"]
    assert len(tup) == 3


def test_m12_def4142_compat(km12):
    for which in ("t1", "t2"):
        rep = check_galois_compat(km12, which, "def41_42_compat")
        assert rep.ok


def test_compat_requires_bijective(monoid):
    with pytest.raises(NotBijective):
        check_galois_compat(monoid, "t1", "def41_42_compat")


# -- convolution invertibility and equivalences ------------------------------------------------


def test_lr_invertible_fixtures(ks3, km12):
    assert lr_convolution_invertible(ks3).ok
    assert lr_convolution_invertible(km12).ok


def test_lr_raises_on_monoid(monoid):
    with pytest.raises(NoAntipodeExtractable):
        lr_convolution_invertible(monoid)


def test_equivalence_t31_s3(ks3):
    rep = equivalence_report(ks3, "t31")
    assert rep.coherent and rep.all_true
    assert len(rep.verdicts) == 6


def test_equivalence_t31_monoid_all_false(monoid):
    rep = equivalence_report(monoid, "t31")
    assert rep.coherent and not any(rep.verdicts.values())
    assert len(rep.verdicts) == 6


def test_equivalence_t43(km12, monoid, ks3):
    rep = equivalence_report(km12, "t43")
    assert rep.coherent and rep.all_true and len(rep.verdicts) == 3
    neg = equivalence_report(monoid, "t43")
    assert neg.coherent and not any(neg.verdicts.values())
    pos = equivalence_report(ks3, "t43")
    assert pos.coherent and pos.all_true


def test_equivalence_t31_requires_associativity(km12):
    with pytest.raises(PreconditionViolated):
        equivalence_report(km12, "t31")


def test_hopf_iff_associative(km12, ks3):
    # quasigroup laws pass on both, but only the associative one enters hopf mode
    assert check_antipode_axioms(km12, km12.antipode, "quasigroup").ok
    assert check_antipode_axioms(ks3, ks3.antipode, "quasigroup").ok
    assert check_antipode_axioms(ks3, ks3.antipode, "hopf").ok
    assert not km12.is_associative
