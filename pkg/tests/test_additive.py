import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ringoids import (FinAbGroup, FiniteRingoid, IsoWitness, MatMorphism,
                      RingoidHom, Undecided, complete, cyclic_ring,
                      enumerate_objsums, iso_class_table, map_completion,
                      product_ring, validate)


def test_hom_orders(f2):
    view = complete(f2)
    assert view.hom_order(("*",), ("*",)) == 2
    assert view.hom_order(("*", "*"), ("*", "*")) == 16
    assert view.hom_order((), ("*",)) == 1


def test_biproduct_equations(f2):
    view = complete(f2)
    s = t = ("*",)
    i_s, i_t, p_s, p_t = view.biproduct(s, t)
    assert view.compose(p_s, i_s) == view.identity(s)
    assert view.compose(p_t, i_t) == view.identity(t)
    assert view.add(view.compose(i_s, p_s),
                    view.compose(i_t, p_t)) == view.identity(s + t)


def _random_matrix(view, src, dst, rng):
    entries = []
    for b in dst:
        row = []
        for a in src:
            hom = view.base.hom(a, b)
            row.append(rng.choice(list(hom.elements())))
        entries.append(row)
    return MatMorphism(src, dst, entries)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from([2, 4]))
def test_matrix_composition_associative_and_bilinear(rng, modulus):
    base = cyclic_ring(modulus)
    view = complete(base)
    shapes = [(), ("*",), ("*", "*")]
    a, b, c, d = (rng.choice(shapes) for _ in range(4))
    f = _random_matrix(view, a, b, rng)
    g = _random_matrix(view, b, c, rng)
    h = _random_matrix(view, c, d, rng)
    assert view.compose(h, view.compose(g, f)) == view.compose(view.compose(h, g), f)
    g2 = _random_matrix(view, b, c, rng)
    lhs = view.compose(view.add(g, g2), f)
    rhs = view.add(view.compose(g, f), view.compose(g2, f))
    assert lhs == rhs


def test_find_isomorphism_identity(f2):
    view = complete(f2)
    w = view.find_isomorphism(("*",), ("*",))
    assert isinstance(w, IsoWitness)
    assert view.compose(w.forward, w.backward) == view.identity(("*",))


def test_find_isomorphism_none_across_ranks(f2):
    view = complete(f2)
    assert view.find_isomorphism(("*",), ("*", "*")) is None


def test_find_isomorphism_permutation():
    from ringoids.abgroup import TRIVIAL_GROUP
    homs = {("a", "a"): FinAbGroup((2,)), ("b", "b"): FinAbGroup((2,)),
            ("a", "b"): TRIVIAL_GROUP, ("b", "a"): TRIVIAL_GROUP}
    table = {("a", "a", "a"): (((1,),),), ("b", "b", "b"): (((1,),),)}
    diag = FiniteRingoid(("a", "b"), homs, table,
                         identities={"a": (1,), "b": (1,)}, name="diag")
    assert validate(diag).ok
    view = complete(diag)
    w = view.find_isomorphism(("a", "b"), ("b", "a"))
    assert isinstance(w, IsoWitness)
    assert view.compose(w.forward, w.backward) == view.identity(("b", "a"))
    assert view.compose(w.backward, w.forward) == view.identity(("a", "b"))


def test_find_isomorphism_symmetric(f2):
    view = complete(f2)
    pairs = [(("*",), ("*", "*")), (("*",), ("*",)), ((), ("*",))]
    for a, b in pairs:
        fwd = view.find_isomorphism(a, b)
        bwd = view.find_isomorphism(b, a)
        assert isinstance(fwd, IsoWitness) == isinstance(bwd, IsoWitness)


def test_undecided_at_tiny_ceiling(f2):
    view = complete(f2)
    res = view.find_isomorphism(("*", "*"), ("*", "*"), ceiling=0)
    # equal tuples short-circuit to the identity; force a search instead
    assert isinstance(res, IsoWitness)
    diag = product_ring(cyclic_ring(2, scalar=False), cyclic_ring(2, scalar=False))
    pv = complete(diag)
    res = pv.find_isomorphism(("*",), ("*", "*"), ceiling=0)
    assert res is None  # pruned by cardinality before the ceiling applies
    # a genuinely searched pair under a zero ceiling reports undecided
    from ringoids.abgroup import TRIVIAL_GROUP
    homs = {("a", "a"): FinAbGroup((2,)), ("b", "b"): FinAbGroup((2,)),
            ("a", "b"): FinAbGroup((2,)), ("b", "a"): FinAbGroup((2,))}
    table = {key: (((1,),),) for key in itertools.product("ab", repeat=3)}
    pair_ring = FiniteRingoid(("a", "b"), homs, table,
                              identities={"a": (1,), "b": (1,)}, name="pair")
    assert validate(pair_ring).ok
    pw = complete(pair_ring)
    res = pw.find_isomorphism(("a",), ("b",), ceiling=0)
    assert isinstance(res, Undecided)


def test_iso_class_table_f2(f2):
    view = complete(f2)
    table = iso_class_table(view, 3)
    assert len(table.reps) == 4  # ranks 0..3, no collapse
    assert table.oplus[(1, 1)] == 2
    assert table.oplus[(1, 2)] == 3
    assert not table.undecided


def test_iso_class_table_product_ring():
    pr = product_ring(cyclic_ring(2, scalar=False), cyclic_ring(2, scalar=False))
    view = complete(pr)
    table = iso_class_table(view, 2)
    assert len(table.reps) == 3  # the single object is free of rank 1


def test_iso_class_table_zero_ring(zero):
    view = complete(zero)
    table = iso_class_table(view, 2)
    assert len(table.reps) == 1  # everything is isomorphic to 0


def test_oplus_commutative(f2, z4):
    for ring in (f2, z4):
        view = complete(ring)
        table = iso_class_table(view, 3)
        for (i, j), cls in table.oplus.items():
            assert table.oplus[(j, i)] == cls


def test_objsum_enumeration_order(f2):
    sums = enumerate_objsums(f2.objects, 2)
    assert sums == [(), ("*",), ("*", "*")]


def test_map_completion_entrywise(z4, f2):
    red = RingoidHom(z4, f2, {"*": "*"}, {("*", "*"): ((1,),)})
    functor = map_completion(red)
    m = MatMorphism(("*", "*"), ("*", "*"), [[(3,), (2,)], [(1,), (0,)]])
    fm = functor.apply(m)
    assert fm.entries == (((1,), (0,)), ((1,), (0,)))


def test_map_completion_functorial(z4, f2, zero):
    red1 = RingoidHom(z4, f2, {"*": "*"}, {("*", "*"): ((1,),)})
    red2 = RingoidHom(f2, zero, {"*": "*"}, {("*", "*"): ((0,),)})
    f1 = map_completion(red1)
    f2_ = map_completion(red2)
    comp = map_completion(red2.compose_with(red1))
    import random
    rng = random.Random(7)
    view = complete(z4)
    for _ in range(10):
        m = _random_matrix(view, ("*", "*"), ("*",), rng)
        assert f2_.apply(f1.apply(m)) == comp.apply(m)


def test_nonunital_view_restricted(f2):
    from ringoids import forget_units, StructuralError
    view = complete(forget_units(f2))
    assert not view.has_identities
    with pytest.raises(StructuralError):
        view.identity(("*",))
