import pytest

from hopfrb.groups import GroupMap, enumerate_group_rb, make_cyclic, make_symmetric
from hopfrb.hopf import group_algebra, lift_group_map
from hopfrb.linalg import Matrix
from hopfrb.matched_pair import double_cross, mp_from_rb, trivial_actions
from hopfrb.projection import (ProjectionPair, build_c_pair, cmm_check,
                               dmp_check, first_leg_projector, lemma_suite,
                               phi_iso, pi_hom, proj_pair_check, rbp_operator)
from hopfrb.rota_baxter import IdentityError, rb_operator, derive_all


def rbmp_for(g, images):
    h = group_algebra(g)
    d = derive_all(rb_operator(h, lift_group_map(g, GroupMap(g, images))))
    return mp_from_rb(d)


def trivial_dcross():
    return double_cross(trivial_actions(group_algebra(make_cyclic(2)),
                                        group_algebra(make_cyclic(3))))


def counit_unit_matrix(hd):
    return Matrix.from_cols([[hd.counit[i] * u for u in hd.unit]
                             for i in range(hd.dim)])


def test_identity_and_counit_unit_form_a_projection_pair():
    dc = trivial_dcross()
    hd = dc.product_space
    rep = proj_pair_check(dc, Matrix.identity(hd.dim), counit_unit_matrix(hd))
    assert rep.ok, rep.failures()
    pp = ProjectionPair(dc, Matrix.identity(hd.dim), counit_unit_matrix(hd))
    ok, wit = dmp_check(pp)
    assert ok, wit


def test_identity_identity_fails_factorization():
    dc = trivial_dcross()
    ident = Matrix.identity(dc.product_space.dim)
    rep = proj_pair_check(dc, ident, ident)
    failed = dict((name, wit) for name, ok, wit in rep.failures())
    assert list(failed) == ["factorization"]
    assert failed["factorization"] is not None


def test_cmm_on_identity_projector():
    dc = trivial_dcross()
    a, b = cmm_check(dc, Matrix.identity(dc.product_space.dim))
    assert a and b


def test_cmm_non_commuting_idempotent_is_doubly_false():
    # D = Q[S3] (x) Q[Z1] with trivial actions; p = parity projection onto
    # the order-2 subgroup {e, (0 1)}. Its complement q hits a 3-cycle, and
    # 3-cycles never commute with transpositions.
    g = make_symmetric(3)
    dc = double_cross(trivial_actions(group_algebra(g),
                                      group_algebra(make_cyclic(1))))
    parity = []
    for i in range(6):
        parity.append(0 if g.element_order(i) in (1, 3) else 1)
    p = lift_group_map(g, GroupMap(g, tuple(1 if s else 0 for s in parity)))
    a, b = cmm_check(dc, p)
    assert not a and not b


def test_first_leg_projector_is_a_rota_baxter_operator():
    dc = trivial_dcross()
    hd = dc.product_space
    pp = ProjectionPair(dc, Matrix.identity(hd.dim), counit_unit_matrix(hd))
    ind = rbp_operator(pp)
    assert ind.carrier.space.dim == hd.dim
    # on the full space the induced operator is the first-leg projector
    incl = ind.carrier.space.inclusion_matrix()
    assert incl.mul(ind.operator) == first_leg_projector(dc).mul(incl)


def test_rbp_on_counit_unit_gives_the_trivial_carrier():
    dc = trivial_dcross()
    hd = dc.product_space
    pp = ProjectionPair(dc, counit_unit_matrix(hd), Matrix.identity(hd.dim))
    ind = rbp_operator(pp)
    assert ind.carrier.space.dim == 1


def z6_pipeline():
    mp = rbmp_for(make_cyclic(6), (0, 3, 0, 3, 0, 3))
    pp = build_c_pair(mp)
    return mp, pp


def test_build_c_pair_on_the_z6_projector():
    mp, pp = z6_pipeline()
    rep = proj_pair_check(mp.dcross, pp.p, pp.p_tilde)
    assert rep.ok, rep.failures()
    ok, wit = dmp_check(pp)
    assert ok, wit
    a, b = cmm_check(mp.dcross, pp.p)
    assert a and b
    assert pp.p.rank() == mp.algebra.dim  # Im C has full parent dimension


def test_lemma_suite_on_z6_and_s3():
    mp, _ = z6_pipeline()
    assert lemma_suite(mp).ok
    mp2 = rbmp_for(make_symmetric(3), (0, 0, 3, 3, 4, 4))
    assert lemma_suite(mp2).ok


def test_phi_is_a_bijective_intertwiner():
    mp, pp = z6_pipeline()
    morph = phi_iso(mp, pp)
    assert morph.bijective
    assert morph.matrix.rank() == mp.algebra.dim
    # src operator is the companion, intertwined with the induced operator
    assert morph.matrix.mul(morph.src_operator) == \
        morph.dst_operator.mul(morph.matrix)


def test_pi_is_a_surjection_onto_the_complementary_image():
    mp, pp = z6_pipeline()
    morph = pi_hom(mp, pp)
    assert morph.surjective
    assert morph.matrix.rank() == morph.dst_algebra.dim
    assert morph.matrix.mul(morph.src_operator) == \
        morph.dst_operator.mul(morph.matrix)


@pytest.mark.parametrize("images", [f.images for f in
                                    enumerate_group_rb(make_symmetric(3))])
def test_full_projection_pipeline_on_s3(images):
    mp = rbmp_for(make_symmetric(3), images)
    pp = build_c_pair(mp)
    assert lemma_suite(mp).ok
    a, b = cmm_check(mp.dcross, pp.p)
    assert a and b
    phi_iso(mp, pp)
    pi_hom(mp, pp)


def test_degenerate_identity_operator_runs_the_whole_pipeline():
    g = make_cyclic(4)
    mp = rbmp_for(g, (0, 1, 2, 3))
    assert mp.pair.right.dim == 1  # H- = span{1}
    pp = build_c_pair(mp)
    phi_iso(mp, pp)
    morph = pi_hom(mp, pp)
    assert morph.dst_algebra.dim == 1
