from fractions import Fraction

import pytest

from hopfrb.groups import make_quaternion8, make_symmetric
from hopfrb.hopf import HopfAxiomError, group_algebra
from hopfrb.serialize import (frac_from_str, frac_to_str, hopf_from_json,
                              hopf_to_json, load_cayley_table,
                              save_cayley_table)


def test_fraction_strings_are_exact():
    x = Fraction(-22, 7)
    assert frac_from_str(frac_to_str(x)) == x
    assert frac_to_str(Fraction(3)) == "3/1"


def test_cayley_roundtrip(tmp_path):
    g = make_quaternion8()
    path = tmp_path / "q8.txt"
    save_cayley_table(g, str(path))
    g2 = load_cayley_table(str(path), name="Q8")
    assert g2.mult == g.mult
    assert g2.identity_index == g.identity_index
    assert g2.inverse == g.inverse


def test_cayley_loader_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1\n1 0\n")
    with pytest.raises(ValueError, match="order"):
        load_cayley_table(str(path))


def test_cayley_loader_rejects_wrong_row_count(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("order 3\n0 1 2\n1 2 0\n")
    with pytest.raises(ValueError, match="rows"):
        load_cayley_table(str(path))


def test_hopf_json_roundtrip_is_exact():
    h = group_algebra(make_symmetric(3))
    doc = hopf_to_json(h)
    h2 = hopf_from_json(doc)
    assert h2.dim == h.dim
    assert h2.mult == h.mult
    assert h2.comult == h.comult
    assert h2.unit == h.unit
    assert h2.counit == h.counit
    assert h2.antipode == h.antipode


def test_hopf_json_entries_are_rational_strings():
    h = group_algebra(make_symmetric(3))
    doc = hopf_to_json(h)
    assert all(isinstance(row[3], str) and "/" in row[3]
               for row in doc["mult"])
    assert all(isinstance(s, str) for s in doc["unit"])


def test_hopf_from_json_verifies_axioms():
    h = group_algebra(make_symmetric(3))
    doc = hopf_to_json(h)
    doc["antipode"] = [[i, i, "1/1"] for i in range(6)]  # identity: not valid
    with pytest.raises(HopfAxiomError):
        hopf_from_json(doc)
