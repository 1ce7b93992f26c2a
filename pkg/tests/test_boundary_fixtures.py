"""Pins the verifier's verdicts on boundary fixtures.

Over a nonassociative base the regular-coaction twisted modules satisfy both
compatibility identities but fail the quasimodule cancellation laws whenever
the twisting automorphism moves an element with nonassociating translations;
their tensor squares then leave the compatible class entirely, and the
braiding stops being an action map.  Over an associative base none of this
happens.  These tests freeze that boundary so checker regressions surface.
"""

import pytest

from hopfloop.bialgebra import loop_algebra
from hopfloop.fixtures import moufang12_table
from hopfloop.loops import loop_automorphisms
from hopfloop.ydq import (
    GPair,
    automorphism_from_perm,
    build_H_alpha_beta,
    check_ab_flexible,
    check_braiding_axioms,
    check_ydq,
    gpair_identity,
    identity_automorphism,
    tensor_ydq,
    validate_ydq,
)


@pytest.fixture(scope="module")
def helpers(km12, m12):
    autos = loop_automorphisms(m12)
    ida = identity_automorphism(km12)
    nontrivial = automorphism_from_perm(km12, autos[1])
    return km12, ida, nontrivial


def test_regular_coaction_compat_holds_for_every_twist(helpers):
    km12, ida, beta = helpers
    mod, rep = build_H_alpha_beta(km12, GPair(ida, beta))
    assert rep.flags["eq51"]
    assert check_ydq(mod, "eq52").ok


def test_quasimodule_laws_fail_for_moving_twist(helpers):
    km12, ida, beta = helpers
    mod, _ = build_H_alpha_beta(km12, GPair(ida, beta))
    diag = validate_ydq(mod)
    assert not diag.flags["quasimodule_left"]
    assert diag.flags["coaction_counital"] and diag.flags["coaction_coassociative"]
    identity_mod, _ = build_H_alpha_beta(km12, gpair_identity(km12))
    assert validate_ydq(identity_mod).ok


def test_pair_flexibility_fails_for_moving_twist(helpers):
    km12, ida, beta = helpers
    assert not check_ab_flexible(km12, GPair(ida, beta)).ok


def test_tensor_of_regular_modules_leaves_compatible_class(helpers):
    km12, ida, _ = helpers
    mod, _ = build_H_alpha_beta(km12, gpair_identity(km12))
    square = tensor_ydq(mod, mod)
    assert not check_ydq(square, "eq51").ok
    assert not check_ydq(square, "eq52").ok


def test_tensor_of_regular_modules_fine_over_associative_base(ks3):
    mod, rep = build_H_alpha_beta(ks3, gpair_identity(ks3))
    assert rep.flags["eq51"] and validate_ydq(mod).ok
    square = tensor_ydq(mod, mod)
    assert check_ydq(square, "eq51").ok
    assert check_ydq(square, "eq52").ok


def test_braiding_not_action_map_on_regular_modules(helpers):
    km12, ida, _ = helpers
    mod, _ = build_H_alpha_beta(km12, gpair_identity(km12))
    rep = check_braiding_axioms(mod, mod, step="module_map")
    assert not rep.ok
    assert check_braiding_axioms(mod, mod, step="bijective").ok


def test_braiding_is_action_map_over_associative_base(ks3):
    mod, _ = build_H_alpha_beta(ks3, gpair_identity(ks3))
    for step in ("module_map", "comodule_map", "bijective"):
        assert check_braiding_axioms(mod, mod, step=step).ok
