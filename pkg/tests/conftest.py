import pytest

from ringoids import (FinAbGroup, FiniteRingoid, FinGroup, cyclic_ring,
                      group_as_groupoid, group_ringoid, matrix_ring,
                      product_ring, with_self_scalar)


@pytest.fixture(scope="session")
def f2():
    return cyclic_ring(2, name="F2")


@pytest.fixture(scope="session")
def f3():
    return cyclic_ring(3, name="F3")


@pytest.fixture(scope="session")
def z4():
    return cyclic_ring(4, name="Z/4")


@pytest.fixture(scope="session")
def zero():
    return cyclic_ring(1, name="0")


@pytest.fixture(scope="session")
def m2f2():
    return matrix_ring(cyclic_ring(2, scalar=False), 2)


@pytest.fixture(scope="session")
def f2xf2():
    return product_ring(cyclic_ring(2, scalar=False),
                        cyclic_ring(2, scalar=False), name="F2xF2")


@pytest.fixture(scope="session")
def c2_groupoid():
    return group_as_groupoid(FinGroup.cyclic(2), name="C2")


@pytest.fixture(scope="session")
def f2c2(c2_groupoid, f2):
    return group_ringoid(c2_groupoid, f2)


@pytest.fixture(scope="session")
def ideal_two_moduloid(z4):
    """The ideal (2) in Z/4 as an abstract non-unital Z/4-moduloid: its
    hom-group is Z/2 generated by the class of 2, squares to zero, and the
    scalar r acts by r*2."""
    return FiniteRingoid(("a",), {("a", "a"): FinAbGroup((2,))},
                         {("a", "a", "a"): (((0,),),)},
                         scalar=z4.scalar, action={("a", "a"): (((1,),),)},
                         unital=False, name="(2)")


@pytest.fixture(scope="session")
def f2xf2_moduloid(f2):
    """F2 x F2 as a unital F2-moduloid with the diagonal scalar action."""
    ring = product_ring(cyclic_ring(2, scalar=False),
                        cyclic_ring(2, scalar=False), name="F2xF2")
    action = {("*", "*"): (((1, 0), (0, 1)),)}
    return FiniteRingoid(ring.objects, ring.homs, ring.compose_table,
                         identities=ring.identities, scalar=f2.scalar,
                         action=action, name="F2xF2/F2")
