import itertools

import pytest

from hopfrb.groups import (EnumerationCapError, GroupMap, InvalidGroupError,
                           abelian_rb_equals_endomorphisms,
                           automorphism_orbit_count, catalog, catalog_group,
                           companion_group_map, direct_product, endomorphisms,
                           enumerate_group_rb, from_cayley_table,
                           group_rb_check, make_cyclic, make_dihedral,
                           make_klein_four, make_quaternion8, make_symmetric)


def naive_rb_maps(g):
    """All B: G -> G with B(g)B(h) = B(B(g) h B(g)^-1 g), by |G|^|G| scan."""
    out = []
    for images in itertools.product(range(g.order), repeat=g.order):
        ok, _ = group_rb_check(GroupMap(g, images))
        if ok:
            out.append(images)
    return sorted(out)


def test_cayley_validation_names_the_axiom():
    with pytest.raises(InvalidGroupError, match="Latin square"):
        from_cayley_table([[0, 0], [1, 1]])
    with pytest.raises(InvalidGroupError, match="identity"):
        from_cayley_table([[0, 1, 2], [2, 0, 1], [1, 2, 0]])
    # a Latin square with two-sided identity that is not associative
    rows = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(InvalidGroupError, match="associative"):
        from_cayley_table(rows)


def test_constructors_have_expected_shape():
    assert make_cyclic(6).order == 6 and make_cyclic(6).is_abelian()
    assert not make_symmetric(3).is_abelian()
    assert make_dihedral(4).order == 8
    q8 = make_quaternion8()
    assert q8.order == 8 and not q8.is_abelian()
    assert sorted(q8.element_order(i) for i in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert make_klein_four().element_order(3) == 2
    prod = direct_product(make_cyclic(2), make_cyclic(3))
    assert prod.order == 6 and prod.is_abelian()


def test_catalog_is_deterministic_and_contains_the_staples():
    names = [g.name for g in catalog()]
    assert names == sorted(names, key=lambda n: (catalog_group(n).order, n))
    for n in ("Z1", "Z2", "S3", "Q8", "D4", "Z2xZ2"):
        assert n in names
    with pytest.raises(KeyError):
        catalog_group("E8")


@pytest.mark.parametrize("g", [g for g in catalog() if g.order <= 4],
                         ids=lambda g: g.name)
def test_enumeration_matches_naive_oracle(g):
    fast = sorted(f.images for f in enumerate_group_rb(g))
    assert fast == naive_rb_maps(g)


def test_z2_has_exactly_two_operators():
    assert len(enumerate_group_rb(make_cyclic(2))) == 2


def test_identity_is_forced_at_identity():
    for f in enumerate_group_rb(make_symmetric(3)):
        assert f.images[f.group.identity_index] == f.group.identity_index


def test_abelian_operators_are_exactly_the_endomorphisms():
    assert abelian_rb_equals_endomorphisms(make_cyclic(4))
    assert abelian_rb_equals_endomorphisms(make_klein_four())


def test_nonabelian_operators_not_all_endomorphisms():
    g = make_symmetric(3)
    ops = {f.images for f in enumerate_group_rb(g)}
    ends = {f.images for f in endomorphisms(g)}
    assert ops != ends


def test_group_rb_check_witness_is_first_lexicographic():
    g = make_cyclic(4)
    ok, wit = group_rb_check(GroupMap(g, (0, 2, 1, 3)))
    assert not ok and wit == (1, 1)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_group_rb(make_cyclic(6), cap=4)


def test_companion_group_map_is_again_an_operator():
    g = make_symmetric(3)
    for f in enumerate_group_rb(g):
        ok, _ = group_rb_check(companion_group_map(f))
        assert ok


def test_automorphism_orbits_do_not_exceed_operator_count():
    g = make_symmetric(3)
    ops = enumerate_group_rb(g)
    orbits = automorphism_orbit_count(g, ops)
    assert 1 <= orbits <= len(ops)
