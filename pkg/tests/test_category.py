import pytest

from assemblage.category import (FiniteCategory, cones, identity_id,
                                 monomorphism_flags, pack_category,
                                 pullback, validate_category)
from assemblage.fixtures import fixture


def test_identities_autogenerated():
    cat = FiniteCategory(["a", "b"], {"f": ("a", "b")}, {})
    assert cat.src(identity_id("a")) == "a"
    assert cat.compose(identity_id("a"), "f") == "f"
    assert cat.compose("f", identity_id("b")) == "f"


def test_validate_flags_missing_composite():
    cat = FiniteCategory(["a", "b", "c"],
                         {"f": ("a", "b"), "g": ("b", "c")}, {})
    report = validate_category(cat)
    assert not report.ok
    assert ("composition-missing", ("f", "g")) in report.errors


def test_validate_flags_bad_endpoints():
    cat = FiniteCategory(["a", "b", "c"],
                         {"f": ("a", "b"), "g": ("b", "c"),
                          "h": ("a", "b")},
                         {("f", "g"): "h"})
    report = validate_category(cat)
    assert ("composition-bad-endpoints", ("f", "g", "h")) in report.errors


def test_validate_flags_associativity():
    # e.e = id on a one-object category with morphisms {id, e}; then
    # forcing e.e = e elsewhere is impossible, so build a genuinely
    # non-associative table on three parallel arrows
    mor = {"e": ("a", "a"), "f": ("a", "a")}
    ida = identity_id("a")
    comp = {("e", "e"): "f", ("e", "f"): "e", ("f", "e"): "e",
            ("f", "f"): "f"}
    cat = FiniteCategory(["a"], mor, comp)
    report = validate_category(cat)
    # (e.e).e = f.e = e but e.(e.e) = e.f = e -- fine; check the table
    # anyway: (e.e).f vs e.(e.f): f.f = f vs e.e = f -- also fine.
    # (f.e).e = e.e = f vs f.(e.e) = f.f = f. This table is associative
    # iff validate agrees with the brute force below.
    brute_ok = all(
        cat.compose(cat.compose(x, y), z) == cat.compose(x,
                                                         cat.compose(y, z))
        for x in mor for y in mor for z in mor)
    assert report.ok == brute_ok


def test_monos_match_brute_force():
    for name in ["sphere-s3", "finite-sets-2", "preorder5", "poset-sink"]:
        asm = fixture(name)
        cat = asm.cat
        flags = monomorphism_flags(cat)
        for f in cat.morphisms:
            a = cat.src(f)
            is_mono = True
            for x in cat.objects:
                for g in cat.hom(x, a):
                    for h in cat.hom(x, a):
                        if g != h and cat.compose(g, f) == \
                                cat.compose(h, f):
                            is_mono = False
            assert flags[f] == is_mono, (name, f)


def test_pack_category_roundtrip():
    cat = fixture("preorder5").cat
    packed = pack_category(cat)
    assert len(packed.mor_ids) == len(cat.morphisms)
    for m in cat.morphisms:
        i = packed.index[m]
        assert packed.obj_ids[packed.src[i]] == cat.src(m)
        assert packed.obj_ids[packed.tgt[i]] == cat.tgt(m)


def test_pullback_in_poset_is_meet():
    cat = fixture("preorder5").cat
    pb = pullback(cat, "le:B<D", "le:C<D")
    assert pb is not None
    assert pb.apex == "A"
    # cone legs commute
    assert cat.compose(pb.left, "le:B<D") == cat.compose(pb.right,
                                                         "le:C<D")


def test_pullback_absent_for_disjoint_cospan():
    asm = fixture("discrete-2")
    cat = asm.cat
    # two opens with empty intersection: the only cone apex is initial
    cs = cones(cat, "sub:{a}<{a,b}", "sub:{b}<{a,b}")
    assert cs
    assert all(apex == asm.initial for (apex, p, q) in cs)


def test_isomorphic_objects():
    cat = fixture("sphere-z2").cat
    assert cat.is_isomorphism(identity_id("pt"))
    for m, (a, b) in cat.morphisms.items():
        if a == b == "pt":
            assert cat.is_isomorphism(m)  # a group
