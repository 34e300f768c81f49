import pytest
from hypothesis import given, settings, strategies as st

from ringoids.intlinalg import (AbPresentation, IntMatrix, cokernel,
                                determinant, hom_is_isomorphism,
                                hom_kernel_lattice, kernel_presentation,
                                lattice_basis, lattice_contains,
                                left_kernel_rows, smith_normal_form,
                                solve_row_combination)

small_matrices = st.integers(0, 4).flatmap(
    lambda r: st.integers(0, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r, max_size=r).map(
                lambda rows: IntMatrix(r, c, rows))))


def test_snf_diag_2_3():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    U, D, V = smith_normal_form(m)
    assert D.diagonal() == [1, 6]
    assert U.mul(m).mul(V) == D


def test_snf_zero_matrix():
    U, D, V = smith_normal_form(IntMatrix.from_rows([[0]]))
    assert D.diagonal() == [0]


def test_snf_identity():
    m = IntMatrix.identity(3)
    _, D, _ = smith_normal_form(m)
    assert D == IntMatrix.identity(3)


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_snf_properties(m):
    U, D, V = smith_normal_form(m)
    assert U.mul(m).mul(V) == D
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diag = D.diagonal()
    for i in range(len(diag) - 1):
        if diag[i]:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0
    assert all(d >= 0 for d in diag)
    assert all(D.entry(i, j) == 0
               for i in range(D.rows) for j in range(D.cols) if i != j)


def test_cokernel_examples():
    assert cokernel(IntMatrix.from_rows([[2]])) == AbPresentation.cyclic(2)
    assert cokernel(IntMatrix.zeros(0, 2)) == AbPresentation.free(2)
    assert cokernel(IntMatrix.from_rows([[2, 0], [0, 3]])) == AbPresentation.cyclic(6)


@settings(max_examples=100, deadline=None)
@given(small_matrices, st.randoms(use_true_random=False))
def test_cokernel_unimodular_invariance(m, rng):
    # random elementary row/column operations do not change the cokernel
    rows = [list(r) for r in m.data]
    for _ in range(6):
        if m.rows >= 2:
            i, j = rng.randrange(m.rows), rng.randrange(m.rows)
            if i != j:
                q = rng.randint(-3, 3)
                for k in range(m.cols):
                    rows[i][k] += q * rows[j][k]
    transformed = IntMatrix(m.rows, m.cols, rows)
    assert cokernel(transformed) == cokernel(m)
    cols = [list(r) for r in transformed.data]
    for _ in range(6):
        if m.cols >= 2:
            i, j = rng.randrange(m.cols), rng.randrange(m.cols)
            if i != j:
                q = rng.randint(-3, 3)
                for row in cols:
                    row[i] += q * row[j]
    assert cokernel(IntMatrix(m.rows, m.cols, cols)) == cokernel(m)


def test_presentation_equality_is_normal_form():
    a = AbPresentation(2, [(2, 0), (0, 3)])
    b = AbPresentation(1, [(6,)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != AbPresentation(1, [(2,)])
    assert str(b) == "Z/6"
    assert str(AbPresentation(3, [(2, 0, 0)])) == "Z^2 + Z/2"
    assert str(AbPresentation.zero()) == "0"


def test_presentation_torsion_chain():
    p = AbPresentation(3, [(2, 0, 0), (0, 4, 0), (0, 0, 8)])
    assert p.rank == 0
    for a, b in zip(p.torsion, p.torsion[1:]):
        assert b % a == 0


def test_lattice_solvers():
    rows = [[2, 0], [0, 3]]
    assert solve_row_combination(rows, 2, [4, 3]) == [2, 1]
    assert solve_row_combination(rows, 2, [1, 0]) is None
    assert lattice_contains(rows, 2, [2, 3])
    assert not lattice_contains(rows, 2, [1, 1])


def test_left_kernel():
    rows = [[1, 2], [2, 4], [0, 0]]
    kern = left_kernel_rows(rows, 2)
    for z in kern:
        assert all(sum(z[i] * rows[i][j] for i in range(3)) == 0 for j in range(2))
    assert len(kern) == 2


def test_lattice_basis_is_equivalent():
    rows = [[2, 0], [0, 3], [2, 3], [4, 6]]
    basis = lattice_basis(rows, 2)
    assert len(basis) == 2
    for r in rows:
        assert lattice_contains(basis, 2, r)
    for b in basis:
        assert lattice_contains(rows, 2, b)


def test_kernel_presentation_of_mod2_reduction():
    # ker(Z -> Z/2) = 2Z, free of rank 1
    pres, basis = kernel_presentation([], [(2,)], [(1,)], 1, 1)
    assert pres == AbPresentation.free(1)
    assert basis == [[2]] or basis == [[-2]]


def test_hom_iso_checks():
    assert hom_is_isomorphism([], [], [(0, 1), (1, 0)], 2, 2)
    assert not hom_is_isomorphism([], [], [(2,)], 1, 1)
    # Z/2 -> Z/4 by x -> 2x is injective but not surjective
    assert not hom_is_isomorphism([(2,)], [(4,)], [(2,)], 1, 1)
    # Z/4 -> Z/2 reduction is surjective but not injective
    assert not hom_is_isomorphism([(4,)], [(2,)], [(1,)], 1, 1)
    # Z/4 -> Z/4 identity
    assert hom_is_isomorphism([(4,)], [(4,)], [(1,)], 1, 1)
