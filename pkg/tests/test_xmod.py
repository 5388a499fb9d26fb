"""Crossed module validation, classification, and standard constructions."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import xmlift.errors as errors
from xmlift import (
    TransitivityClass,
    action_to_theta,
    automorphism_group,
    automorphism_xmod,
    catalog_group,
    classify,
    compose_morphisms,
    identity_morphism,
    inclusion_xmod,
    make_action,
    make_crossed_module,
    make_hom,
    make_morphism,
    make_subgroup,
    verify_structure,
)
from xmlift.groups import conjugation_action, identity_hom, trivial_action, zero_hom

from conftest import catalog_with_quotients, z4_mod2_base


def test_z4_mod2_valid_and_transitive():
    xm = z4_mod2_base()
    assert classify(xm) is TransitivityClass.TRANSITIVE
    assert verify_structure(xm).all_true


def test_inclusion_a3_s3_simply_transitive():
    s3 = catalog_group("S3")
    xm = inclusion_xmod(make_subgroup(s3, (0, 3, 4)))
    assert classify(xm) is TransitivityClass.SIMPLY_TRANSITIVE
    report = verify_structure(xm)
    assert report.image_normal and report.kernel_central and report.image_fixes_center


def test_cm2_violation_at_1_1():
    z4, z2 = catalog_group("Z4"), catalog_group("Z2")
    mod2 = make_hom(z4, z2, (0, 1, 0, 1))
    negation = make_action(z2, z4, [(0, 1, 2, 3), (0, 3, 2, 1)])
    with pytest.raises(errors.CM2Violation) as exc:
        make_crossed_module(z4, z2, mod2, negation)
    assert exc.value.witness == (1, 1)


def test_cm1_violation():
    # identity boundary on S3 with the trivial action: CM1 needs conjugation
    s3 = catalog_group("S3")
    with pytest.raises(errors.CM1Violation):
        make_crossed_module(s3, s3, identity_hom(s3), trivial_action(s3, s3))
    # conjugation action with the zero boundary passes CM1 but breaks CM2
    with pytest.raises(errors.CM2Violation):
        make_crossed_module(s3, s3, zero_hom(s3, s3), conjugation_action(s3))


def test_classify_zero_map_totally_intransitive():
    z4 = catalog_group("Z4")
    xm = make_crossed_module(z4, z4, zero_hom(z4, z4), trivial_action(z4, z4))
    assert classify(xm) is TransitivityClass.TOTALLY_INTRANSITIVE


def test_classify_one_transitive():
    z4 = catalog_group("Z4")
    xm = make_crossed_module(z4, z4, identity_hom(z4), trivial_action(z4, z4))
    assert classify(xm) is TransitivityClass.ONE_TRANSITIVE


def test_classify_none_tag():
    # multiplication by two on Z4: neither injective, surjective, nor zero
    z4 = catalog_group("Z4")
    double = make_hom(z4, z4, (0, 2, 0, 2))
    xm = make_crossed_module(z4, z4, double, trivial_action(z4, z4))
    assert classify(xm) is TransitivityClass.NONE


def test_inclusion_trivial_and_central_subgroups():
    g = catalog_group("Z4")
    xm_triv = inclusion_xmod(make_subgroup(g, (0,)))
    assert xm_triv.A.order == 1
    xm_02 = inclusion_xmod(make_subgroup(g, (0, 2)))
    # conjugation in an abelian group is trivial
    assert xm_02.action.table == trivial_action(g, xm_02.A).table


def test_inclusion_requires_normal():
    s3 = catalog_group("S3")
    with pytest.raises(errors.NotNormal):
        inclusion_xmod(make_subgroup(s3, (0, 1)))


def test_automorphism_xmod_z3_boundary_zero():
    xm = automorphism_xmod(catalog_group("Z3"))
    assert xm.B.order == 2
    assert all(v == 0 for v in xm.boundary.images)
    assert classify(xm) is TransitivityClass.TOTALLY_INTRANSITIVE


def test_automorphism_xmod_s3_boundary_bijective():
    xm = automorphism_xmod(catalog_group("S3"))
    assert xm.B.order == 6
    assert len(set(xm.boundary.images)) == 6
    assert classify(xm) is TransitivityClass.ONE_TRANSITIVE


def test_automorphism_xmod_trivial_group():
    xm = automorphism_xmod(catalog_group("Z1"))
    assert xm.A.order == 1 and xm.B.order == 1


def test_morphism_identity_and_zero():
    xm = z4_mod2_base()
    ident = identity_morphism(xm)
    assert ident.f1.images == (0, 1, 2, 3)
    zero = make_morphism(
        xm, xm, zero_hom(xm.A, xm.A), zero_hom(xm.B, xm.B)
    )
    assert zero.f2.images == (0, 0)


def test_morphism_square_violation():
    xm = z4_mod2_base()
    mult2 = make_hom(xm.A, xm.A, (0, 2, 0, 2))
    with pytest.raises(errors.SquareNotCommuting) as exc:
        make_morphism(xm, xm, mult2, identity_hom(xm.B))
    assert exc.value.witness == 1


def test_morphism_equivariance_violation():
    s3 = catalog_group("S3")
    conj_xm = make_crossed_module(s3, s3, identity_hom(s3), conjugation_action(s3))
    # f1 = zero, f2 = identity: square commutes only for zero boundary, so use
    # both components zero against a nontrivial action target mix instead
    a3 = make_subgroup(s3, (0, 3, 4))
    incl = inclusion_xmod(a3)
    f1 = make_hom(incl.A, conj_xm.A, (0, 3, 4))
    f2 = identity_hom(s3)
    ok = make_morphism(incl, conj_xm, f1, f2)
    assert ok.f1.images == (0, 3, 4)
    # breaking equivariance: compose f1 with inversion of A3 (an automorphism
    # of A3 that is not S3 equivariant)
    f1_bad = make_hom(incl.A, conj_xm.A, (0, 4, 3))
    with pytest.raises((errors.NotEquivariant, errors.SquareNotCommuting)):
        make_morphism(incl, conj_xm, f1_bad, f2)


def test_morphism_composition_is_morphism(xmods):
    from xmlift import derivation_to_endomorphism_morphism, enumerate_derivations

    for xm in xmods.values():
        ident = identity_morphism(xm)
        composed = compose_morphisms(ident, ident)
        assert composed.f1.images == ident.f1.images
        assert composed.f2.images == ident.f2.images
    # nontrivial endomorphisms from derivations compose into valid morphisms
    xm = xmods["incl_a3_s3"]
    endos = [
        derivation_to_endomorphism_morphism(d)[0]
        for d in enumerate_derivations(xm).elements
    ]
    for outer in endos:
        for inner in endos:
            composed = compose_morphisms(outer, inner)
            assert composed.f1.images == tuple(
                outer.f1.images[v] for v in inner.f1.images
            )


def test_action_to_theta_trivial_action():
    xm = z4_mod2_base()
    theta = action_to_theta(xm)
    assert all(v == 0 for v in theta.images)


def test_action_to_theta_conjugation():
    s3 = catalog_group("S3")
    incl = inclusion_xmod(make_subgroup(s3, (0, 3, 4)))
    theta = action_to_theta(incl)
    aut, natural = automorphism_group(incl.A)
    for g in s3.elements():
        perm = tuple(incl.act(g, a) for a in incl.A.elements())
        assert natural.table[theta.images[g]] == perm


def test_theta_of_boundary_is_conjugation(xmods):
    # restatement of CM2 at the level of Aut(A)
    for xm in xmods.values():
        theta = action_to_theta(xm)
        aut, natural = automorphism_group(xm.A)
        for a in xm.A.elements():
            conj = tuple(xm.A.conj(a, x) for x in xm.A.elements())
            assert natural.table[theta.images[xm.boundary.images[a]]] == conj


def test_structure_report_universal(xmods_with_quotients):
    for name, xm in xmods_with_quotients.items():
        assert verify_structure(xm).all_true, name


@given(st.sampled_from(sorted(catalog_with_quotients())))
@settings(deadline=None, max_examples=16)
def test_classification_stable_under_rebuild(name):
    xm = catalog_with_quotients()[name]
    rebuilt = make_crossed_module(xm.A, xm.B, xm.boundary, xm.action)
    assert classify(rebuilt) is classify(xm)
