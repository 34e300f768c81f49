import pytest

from ringoids.groups import FinGroup, abelianization
from ringoids.intlinalg import AbPresentation


def test_cyclic_group_valid():
    g = FinGroup.cyclic(6)
    assert g.is_valid()
    assert g.identity == 0
    assert g.inv(g.index(1)) == g.index(5)


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        FinGroup([0, 1], [[0, 0], [0, 0]])  # no identity at all
    # identity exists but 1 has no inverse: full validity fails
    assert not FinGroup([0, 1], [[0, 1], [1, 1]]).is_valid()


def test_abelianization_trivial():
    pres, _ = abelianization(FinGroup.cyclic(1))
    assert pres.is_trivial()


def test_abelianization_s3():
    s3 = FinGroup.symmetric3()
    assert s3.is_valid()
    commutators = s3.commutator_subgroup()
    assert len(commutators) == 3  # brute-force closure gives A3
    pres, _ = abelianization(s3)
    assert pres == AbPresentation.cyclic(2)


def test_abelianization_fixes_abelian_input():
    c4 = FinGroup.cyclic(4)
    pres, _ = abelianization(c4)
    assert pres == AbPresentation.cyclic(4)
    klein = FinGroup.from_mult(
        [(a, b) for a in range(2) for b in range(2)],
        lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2))
    pres, _ = abelianization(klein)
    assert pres == AbPresentation(2, [(2, 0), (0, 2)])


def test_abelianization_coords_are_homomorphic():
    s3 = FinGroup.symmetric3()
    pres, coords = abelianization(s3)
    # the coset map must be a homomorphism into the presented group: the
    # coordinates of a product differ from the sum of coordinates by a
    # relation of the presentation
    from ringoids.intlinalg import lattice_contains
    k = pres.generators
    for i in range(len(s3)):
        for j in range(len(s3)):
            prod = coords[s3.mul(i, j)]
            added = [a + b for a, b in zip(coords[i], coords[j])]
            diff = [a - b for a, b in zip(added, prod)]
            assert lattice_contains([list(r) for r in pres.relations], k, diff)


def test_subgroup_closure():
    c6 = FinGroup.cyclic(6)
    sub = c6.subgroup_closure([2])
    assert sub == [0, 2, 4]
