import pytest

from hopfrb.groups import (GroupMap, direct_product, enumerate_group_rb,
                           make_cyclic, make_symmetric)
from hopfrb.hopf import group_algebra, lift_group_map, verify_hopf
from hopfrb.linalg import Matrix, unit_vec
from hopfrb.matched_pair import (DoubleCross, MatchedPairData, double_cross,
                                 matched_pair_check, mm3_check, mp_from_rb,
                                 mrbe_check, trivial_actions)
from hopfrb.rota_baxter import IdentityError, rb_operator, derive_all


def z6_projector_mp():
    g = make_cyclic(6)
    h = group_algebra(g)
    d = derive_all(rb_operator(h, lift_group_map(g, GroupMap(g, (0, 3, 0, 3, 0, 3)))))
    return d, mp_from_rb(d)


def test_trivial_actions_form_a_matched_pair():
    mp = trivial_actions(group_algebra(make_cyclic(2)),
                         group_algebra(make_cyclic(3)))
    rep = matched_pair_check(mp)
    assert rep.ok, rep.failures()


def test_trivial_double_cross_is_the_tensor_product():
    a = group_algebra(make_cyclic(2))   # left factor
    b = group_algebra(make_cyclic(3))   # right factor
    dc = double_cross(trivial_actions(a, b))
    prod = group_algebra(direct_product(make_cyclic(3), make_cyclic(2)))
    # index (right i, left j) -> i * dim(left) + j matches the direct product
    assert dc.product_space.dim == 6
    assert dc.product_space.mult == prod.mult
    assert dc.product_space.comult == prod.comult
    assert dc.product_space.antipode == prod.antipode


def test_perturbed_trivial_action_fails_the_axioms_with_witness():
    left = group_algebra(make_cyclic(2))
    right = group_algebra(make_cyclic(3))
    mp = trivial_actions(left, right)
    # the nontrivial group-like of `left` now fixes a but sends a^2 to e:
    # still a coalgebra map, but no longer multiplicative
    mp.act_left[1][1] = unit_vec(3, 1)
    mp.act_left[1][2] = unit_vec(3, 0)
    rep = matched_pair_check(mp)
    assert not rep.ok
    failed = {name: wit for name, ok, wit in rep.failures()}
    assert "action-multiplicativity-left" in failed
    assert failed["action-multiplicativity-left"] is not None
    with pytest.raises(IdentityError) as exc:
        double_cross(mp)
    assert exc.value.identity.startswith("matched-pair:")


def test_projector_matched_pair_shapes():
    d, mp = z6_projector_mp()
    assert mp.pair.left.dim == 2      # H+
    assert mp.pair.right.dim == 3     # H-
    assert mp.dcross.product_space.dim == 6
    assert verify_hopf(mp.dcross.product_space).ok


def test_projector_compatibility_checks():
    _, mp = z6_projector_mp()
    ok, wit = mm3_check(mp)
    assert ok, wit
    ok, wit = mrbe_check(mp)
    assert ok, wit


def test_abelian_actions_are_trivial():
    # for an abelian parent the induced actions degenerate to counit actions
    d, mp = z6_projector_mp()
    triv = trivial_actions(mp.pair.left, mp.pair.right)
    assert mp.pair.act_left == triv.act_left
    assert mp.pair.act_right == triv.act_right


def test_nonabelian_operator_gives_nontrivial_action():
    g = make_symmetric(3)
    h = group_algebra(g)
    nontrivial = False
    for f in enumerate_group_rb(g):
        d = derive_all(rb_operator(h, lift_group_map(g, f)))
        mp = mp_from_rb(d)
        triv = trivial_actions(mp.pair.left, mp.pair.right)
        if (mp.pair.act_left != triv.act_left
                or mp.pair.act_right != triv.act_right):
            nontrivial = True
        ok, wit = mm3_check(mp)
        assert ok, (f.images, wit)
        ok, wit = mrbe_check(mp)
        assert ok, (f.images, wit)
    assert nontrivial


def test_action_values_stay_in_the_subalgebras():
    g = make_symmetric(3)
    h = group_algebra(g)
    f = enumerate_group_rb(g)[1]
    d = derive_all(rb_operator(h, lift_group_map(g, f)))
    mp = mp_from_rb(d)
    for i in range(h.dim):
        for j in range(h.dim):
            u = d.rb.matrix.col(i)
            v = d.tilde.col(j)
            assert d.h_minus.space.contains(mp.act_l_parent(u, v))
            assert d.h_plus.space.contains(mp.act_r_parent(u, v))


def test_embed_parent_rejects_vectors_outside_the_factors():
    _, mp = z6_projector_mp()
    h = mp.algebra
    outside = h.basis_vec(1)  # g is in neither H+ nor H- for the projector
    with pytest.raises(ValueError):
        mp.embed_parent(outside, h.unit)
