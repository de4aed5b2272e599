"""Acceptance gate: eight criteria, each printing one pass/fail line.

The corpus is every group-level operator on every catalog group of order at
most 8. All checks are exact equalities over the rationals; there are no
tolerances anywhere.
"""

import itertools
import json
import time

from hopfrb.cli import EXIT_OK, main
from hopfrb.groups import (GroupMap, abelian_rb_equals_endomorphisms, catalog,
                           enumerate_group_rb, group_rb_check, make_cyclic,
                           make_klein_four, make_symmetric)
from hopfrb.hopf import group_algebra, lift_group_map, verify_hopf
from hopfrb.linalg import unit_vec
from hopfrb.matched_pair import (double_cross, matched_pair_check, mm3_check,
                                 mp_from_rb, mrbe_check, trivial_actions)
from hopfrb.projection import (build_c_pair, cmm_check, lemma_suite, phi_iso,
                               pi_hom)
from hopfrb.report import run_verification
from hopfrb.rota_baxter import derive_all, rb_check, rb_operator

CORPUS_GROUPS = [g for g in catalog() if g.order <= 8]

_algebras = {}
_derived = {}
_matched = {}


def _algebra(g):
    if g.name not in _algebras:
        _algebras[g.name] = group_algebra(g)
    return _algebras[g.name]


def corpus():
    for g in CORPUS_GROUPS:
        for f in enumerate_group_rb(g):
            yield g, f


def announce(capsys, num, name, ok, secs):
    with capsys.disabled():
        print(f"\n[criterion {num}] {name}: {'PASS' if ok else 'FAIL'} "
              f"({secs:.1f}s)", flush=True)


def test_criterion_1_enumeration_matches_naive_oracle(capsys):
    t0 = time.perf_counter()
    ok = True
    for g in [g for g in catalog() if g.order <= 4]:
        naive = sorted(
            images for images in itertools.product(range(g.order),
                                                    repeat=g.order)
            if group_rb_check(GroupMap(g, images))[0])
        fast = sorted(f.images for f in enumerate_group_rb(g))
        ok = ok and fast == naive
    ok = ok and len(enumerate_group_rb(make_cyclic(2))) == 2
    secs = time.perf_counter() - t0
    announce(capsys, 1, "enumeration soundness and completeness", ok, secs)
    assert ok and secs < 1.0


def test_criterion_2_abelian_operators_are_endomorphisms(capsys):
    t0 = time.perf_counter()
    ok = (abelian_rb_equals_endomorphisms(make_cyclic(4))
          and abelian_rb_equals_endomorphisms(make_klein_four()))
    secs = time.perf_counter() - t0
    announce(capsys, 2, "abelian reduction to endomorphisms", ok, secs)
    assert ok and secs < 1.0


def test_criterion_3_operator_identity_suite(capsys):
    t0 = time.perf_counter()
    count = 0
    for g, f in corpus():
        h = _algebra(g)
        d = derive_all(rb_operator(h, lift_group_map(g, f)))
        _derived[(g.name, f.images)] = d
        count += 1
    secs = time.perf_counter() - t0
    ok = count == 124
    announce(capsys, 3, f"operator/companion/descendent suite on {count} operators",
             ok, secs)
    assert ok and secs < 120.0


def test_criterion_4_matched_pair_suite(capsys):
    t0 = time.perf_counter()
    ok = True
    for g, f in corpus():
        d = _derived[(g.name, f.images)]
        mp = mp_from_rb(d)
        _matched[(g.name, f.images)] = mp
        dc = mp.dcross.product_space
        ok = ok and dc.dim == d.h_minus.space.dim * d.h_plus.space.dim
        ok = ok and verify_hopf(dc).ok
        ok = ok and mm3_check(mp)[0] and mrbe_check(mp)[0]
    secs = time.perf_counter() - t0
    announce(capsys, 4, "matched pair and double cross suite", ok, secs)
    assert ok and secs < 300.0


def test_criterion_5_projection_pair_suite(capsys):
    t0 = time.perf_counter()
    ok = True
    for g, f in corpus():
        mp = _matched[(g.name, f.images)]
        pp = build_c_pair(mp)
        a, b = cmm_check(mp.dcross, pp.p)
        ok = ok and a and b
        ok = ok and lemma_suite(mp).ok
        ok = ok and phi_iso(mp, pp).bijective
        ok = ok and pi_hom(mp, pp).surjective
    secs = time.perf_counter() - t0
    announce(capsys, 5, "projection pair, isomorphism, and surjection suite", ok, secs)
    assert ok and secs < 600.0


def test_criterion_6_degenerate_paths_on_every_catalog_group(capsys):
    t0 = time.perf_counter()
    ok = True
    for g in catalog():
        ident = tuple(range(g.order))
        trivial = tuple(g.identity_index for _ in range(g.order))
        for images in (ident, trivial):
            rep = run_verification(g, images, with_timing=False)
            ok = ok and rep.ok
    secs = time.perf_counter() - t0
    announce(capsys, 6, "degenerate operators on every catalog group", ok, secs)
    assert ok


def test_criterion_7_negative_controls(capsys):
    t0 = time.perf_counter()
    # (i) a non-operator group map is rejected with the defining-identity
    # witness pair
    g4 = make_cyclic(4)
    ok_a, wit = rb_check(_algebra(g4),
                         lift_group_map(g4, GroupMap(g4, (0, 2, 1, 3))))
    control_1 = (not ok_a) and wit == (1, 1)
    # (ii) a perturbed trivial action fails the compatibility axioms with a
    # witness and is refused by the double cross constructor
    mp = trivial_actions(group_algebra(make_cyclic(2)),
                         group_algebra(make_cyclic(3)))
    mp.act_left[1][1] = unit_vec(3, 1)
    mp.act_left[1][2] = unit_vec(3, 0)
    rep = matched_pair_check(mp)
    failed = {name: w for name, okk, w in rep.failures()}
    control_2 = ("action-multiplicativity-left" in failed
                 and failed["action-multiplicativity-left"] is not None)
    try:
        double_cross(mp)
        control_2 = False
    except Exception:
        pass
    # (iii) a non-commuting idempotent Hopf endomorphism makes both
    # equivalent projection-pair statements false
    gs3 = make_symmetric(3)
    dc = double_cross(trivial_actions(group_algebra(gs3),
                                      group_algebra(make_cyclic(1))))
    parity = tuple(0 if gs3.element_order(i) in (1, 3) else 1
                   for i in range(6))
    p = lift_group_map(gs3, GroupMap(gs3, parity))
    a, b = cmm_check(dc, p)
    control_3 = (not a) and (not b)
    ok = control_1 and control_2 and control_3
    secs = time.perf_counter() - t0
    announce(capsys, 7, "negative controls rejected at the correct stage", ok, secs)
    assert ok


def test_criterion_8_sweep_reports_are_reproducible(capsys, tmp_path):
    t0 = time.perf_counter()
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    rc1 = main(["sweep", "--max-order", "6", "--json", str(p1)])
    rc2 = main(["sweep", "--max-order", "6", "--json", str(p2)])
    d1, d2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    d1.pop("timing"), d2.pop("timing")
    blob1 = json.dumps(d1, sort_keys=True).encode()
    blob2 = json.dumps(d2, sort_keys=True).encode()
    ok = rc1 == rc2 == EXIT_OK and blob1 == blob2
    secs = time.perf_counter() - t0
    announce(capsys, 8, "byte-identical sweep reports outside timing", ok, secs)
    assert ok
