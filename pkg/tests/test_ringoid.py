import pytest

from ringoids import (FinAbGroup, FiniteRingoid, RingoidHom, StructuralError,
                      cyclic_ring, identity_hom, one_object_ringoid, validate,
                      validate_hom, zero_moduloid)


def test_validate_accepts_standard_rings(f2, f3, z4, m2f2, f2c2, f2xf2):
    for ring in (f2, f3, z4, m2f2, f2c2, f2xf2):
        report = validate(ring)
        assert report.ok, (ring.name, report.failures)


def test_validate_rejects_nonassociative():
    bad = one_object_ringoid((2, 2), (
        ((0, 1), (1, 0)),   # e1.e1 = e2, e1.e2 = e1
        ((0, 0), (0, 0)),
    ), name="bad-assoc")
    report = validate(bad)
    assert "associativity" in report.axioms_violated()
    witness = next(f for f in report.failures if f.axiom == "associativity")
    assert witness.witness == ((1, 0), (1, 0), (1, 0))


def test_validate_rejects_nonbilinear():
    # an order-2 generator pair whose product has order 4
    groups = {("a", "a"): FinAbGroup((4,)), ("a", "b"): FinAbGroup((2,)),
              ("b", "a"): FinAbGroup((2,)), ("b", "b"): FinAbGroup((4,))}
    bad = FiniteRingoid(("a", "b"), groups,
                        {("a", "b", "a"): (((1,),),)}, name="bad-bilinear")
    report = validate(bad)
    assert "bilinearity" in report.axioms_violated()
    witness = next(f for f in report.failures if f.axiom == "bilinearity")
    assert witness.location == ("a", "b", "a")


def test_validate_rejects_bad_identity():
    bad = one_object_ringoid((4,), (((1,),),), identity=(2,), name="bad-ident")
    violated = validate(bad).axioms_violated()
    assert "left identity" in violated and "right identity" in violated


def test_validate_moduloid_axioms_z4(z4):
    report = validate(z4)
    assert report.ok
    assert z4.scalar is not None


def test_structural_error_distinct_from_axiom_failure():
    groups = {("a", "a"): FinAbGroup((2,))}
    bad = FiniteRingoid(("a",), groups, {("a", "a", "a"): (((7,),),)})
    with pytest.raises(StructuralError):
        validate(bad)


def test_zero_moduloid(f2, z4):
    zm = zero_moduloid(("a",), f2.scalar)
    assert validate(zm).ok
    assert zm.hom("a", "a").is_trivial()
    zm2 = zero_moduloid(("a", "b"), z4.scalar)
    assert validate(zm2).ok
    assert all(zm2.hom(a, b).is_trivial() for a in "ab" for b in "ab")


def test_validate_hom_identity(f2):
    assert validate_hom(identity_hom(f2)).ok


def test_validate_hom_reduction(z4, f2):
    red = RingoidHom(z4, f2, {"*": "*"}, {("*", "*"): ((1,),)}, name="red")
    assert validate_hom(red).ok


def test_validate_hom_doubling_fails(z4):
    dbl = RingoidHom(z4, z4, {"*": "*"}, {("*", "*"): ((2,),)}, name="x->2x")
    report = validate_hom(dbl)
    assert "multiplicativity" in report.axioms_violated()
    witness = next(f for f in report.failures if f.axiom == "multiplicativity")
    assert witness.witness == ((1,), (1,))  # 2*(1*1) != (2*1)(2*1)


def test_hom_composition_of_clean_is_clean(z4, f2):
    red1 = RingoidHom(z4, f2, {"*": "*"}, {("*", "*"): ((1,),)})
    ident = identity_hom(f2)
    comp = ident.compose_with(red1)
    assert validate_hom(comp).ok


def test_object_map_out_of_range_is_structural(f2):
    bad = RingoidHom(f2, f2, {"*": "nowhere"}, {("*", "*"): ((1,),)})
    with pytest.raises(StructuralError):
        validate_hom(bad)


def test_compose_bilinearity_generates_full_product(z4):
    # structure constants on generators determine all 16 products
    h = z4.hom("*", "*")
    for x in h.elements():
        for y in h.elements():
            assert z4.compose("*", "*", "*", x, y) == ((x[0] * y[0]) % 4,)
