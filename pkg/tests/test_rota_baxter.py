import pytest

from hopfrb.groups import GroupMap, enumerate_group_rb, make_cyclic, make_symmetric
from hopfrb.hopf import HopfElement, group_algebra, lift_group_map, verify_hopf
from hopfrb.linalg import Matrix
from hopfrb.rota_baxter import (IdentityError, RBOperator, derive_all,
                                descendent, descendent_rb_check, rb_check,
                                rb_operator, s_b, star_product, tilde_op)


def z6_projector():
    g = make_cyclic(6)
    h = group_algebra(g)
    b = lift_group_map(g, GroupMap(g, (0, 3, 0, 3, 0, 3)))
    return g, h, b


def test_rb_operator_accepts_the_projector():
    _, h, b = z6_projector()
    rb = rb_operator(h, b)
    assert rb.weight == -1 and rb.matrix == b


def test_rb_check_rejects_with_witness_pair():
    g = make_cyclic(4)
    h = group_algebra(g)
    bad = lift_group_map(g, GroupMap(g, (0, 2, 1, 3)))
    ok, wit = rb_check(h, bad)
    assert not ok and wit == (1, 1)
    with pytest.raises(IdentityError) as exc:
        rb_operator(h, bad)
    assert exc.value.identity == "rb-defining-identity"


def test_rb_check_requires_square_shape():
    h = group_algebra(make_cyclic(3))
    with pytest.raises(ValueError):
        rb_check(h, Matrix.zero(3, 2))


def test_tilde_of_projector():
    g, h, b = z6_projector()
    tilde = tilde_op(rb_operator(h, b))
    # Bt(g) = g * B(g^-1) at the group level
    for i in range(6):
        expected = g.mul(i, (0, 3, 0, 3, 0, 3)[g.inverse[i]])
        assert tilde.col(i) == h.basis_vec(expected)


def test_derived_bundle_dimensions():
    _, h, b = z6_projector()
    d = derive_all(rb_operator(h, b))
    assert d.h_plus.space.dim == 2
    assert d.h_minus.space.dim == 3
    assert d.k_plus.dim == 3
    assert d.k_minus.dim == 4
    assert verify_hopf(d.descendent).ok


def test_descendent_of_abelian_algebra_is_the_original_product():
    # over a commutative algebra, B(x1) y S(B(x2)) x3 collapses to x y
    _, h, b = z6_projector()
    d = descendent(rb_operator(h, b))
    assert d.mult == h.mult
    assert d.antipode == h.antipode


def test_descendent_nonabelian_differs_but_is_hopf():
    g = make_symmetric(3)
    h = group_algebra(g)
    images = (0, 0, 3, 3, 4, 4)
    d = descendent(rb_operator(h, lift_group_map(g, GroupMap(g, images))))
    assert verify_hopf(d).ok
    assert d.mult != h.mult
    ok, _ = descendent_rb_check(
        rb_operator(h, lift_group_map(g, GroupMap(g, images))), d)
    assert ok


def test_pointwise_star_and_antipode_match_the_matrices():
    g = make_symmetric(3)
    h = group_algebra(g)
    rb = rb_operator(h, lift_group_map(g, GroupMap(g, (0, 0, 3, 3, 4, 4))))
    d = derive_all(rb)
    for i in range(6):
        x = HopfElement(h, h.basis_vec(i))
        assert s_b(rb, x).coords == d.descendent_antipode.col(i)
        for j in range(6):
            y = HopfElement(h, h.basis_vec(j))
            assert star_product(rb, x, y).coords == \
                d.descendent.mul_vec(h.basis_vec(i), h.basis_vec(j))


def test_identity_and_counit_unit_degenerate_operators():
    for g in (make_cyclic(4), make_symmetric(3)):
        h = group_algebra(g)
        ident = derive_all(rb_operator(h, Matrix.identity(g.order)))
        assert ident.h_minus.space.dim == 1  # Im Bt = span{1}
        triv_images = tuple(g.identity_index for _ in range(g.order))
        triv = derive_all(rb_operator(
            h, lift_group_map(g, GroupMap(g, triv_images))))
        assert triv.h_plus.space.dim == 1  # Im B = span{1}


def test_derive_all_passes_on_all_s3_operators():
    g = make_symmetric(3)
    h = group_algebra(g)
    ops = enumerate_group_rb(g)
    assert len(ops) == 8
    for f in ops:
        derive_all(rb_operator(h, lift_group_map(g, f)))


def test_companion_of_companion_is_the_operator():
    _, h, b = z6_projector()
    rb = rb_operator(h, b)
    tilde = tilde_op(rb)
    assert tilde_op(RBOperator(h, tilde)) == b
