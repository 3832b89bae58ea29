import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticegb.algebra import Grading, TermOrder, compare, monomial_key
from latticegb.errors import EnumerationLimitError, NotHomogeneousError
from latticegb.oracle import (
    basis_initial_slice,
    binomial_multiple,
    build_toric_matrix,
    enumerate_monomials,
    ideal_slice_contains,
    initial_slice,
    kernel_lattice_basis,
    lattice_contains,
    table_variable_names,
    toric_initial_oracle,
    toric_kernel_contains,
    truncated_initial_oracle,
)
from suite import EX_GRADING, EX_ORDER, RUN1, RUN3, Y2_XZ, YZ_X3, Z2_X2Y


def brute_monomials(s, grading):
    top = [s // a for a in grading.weights]
    return {m for m in itertools.product(*(range(t + 1) for t in top)) if grading(m) == s}


@pytest.mark.parametrize("s", range(0, 16))
def test_enumerate_matches_brute_force(s):
    got = enumerate_monomials(s, EX_GRADING, EX_ORDER)
    assert set(got) == brute_monomials(s, EX_GRADING)
    assert len(got) == len(set(got))
    keys = [monomial_key(m, EX_GRADING, EX_ORDER) for m in got]
    assert keys == sorted(keys, reverse=True)


def test_degree_8():
    assert enumerate_monomials(8, EX_GRADING, EX_ORDER) == [(0, 2, 0), (1, 0, 1)]


def test_enumeration_limit():
    g = Grading.standard(18)
    with pytest.raises(EnumerationLimitError):
        enumerate_monomials(8, g, limit=1000)


class TestInitialSlice:
    def test_degree_8(self):
        assert initial_slice([Y2_XZ], EX_GRADING, EX_ORDER, 8).monomials == {(0, 2, 0)}

    def test_degree_12_of_saturated_ideal(self):
        expected = {m for m in brute_monomials(12, EX_GRADING)
                    if any(all(a <= b for a, b in zip(l, m))
                           for l in [(0, 2, 0), (0, 1, 1), (0, 0, 2)])}
        assert expected == {(0, 3, 0), (1, 1, 1)}
        assert initial_slice(RUN3, EX_GRADING, EX_ORDER, 12).monomials == expected
        assert initial_slice(RUN1, EX_GRADING, EX_ORDER, 12).monomials == expected

    def test_low_degrees_are_empty(self):
        for sl in truncated_initial_oracle(RUN1, EX_GRADING, EX_ORDER, 8):
            assert sl.monomials == frozenset()

    def test_inhomogeneous(self):
        with pytest.raises(NotHomogeneousError):
            initial_slice([(1, 0, 0)], EX_GRADING, EX_ORDER, 5)

    def test_basis_slice(self):
        leads = [(0, 2, 0), (0, 1, 1)]
        assert basis_initial_slice(leads, EX_GRADING, 9).monomials == {(0, 1, 1)}


class TestIdealSliceContains:
    def test_witness_multiples(self):
        # x*(yz - x^3) is in <y^2 - xz, x^4 - y^3>, yz - x^3 itself is not
        assert ideal_slice_contains(RUN1, EX_GRADING, EX_ORDER, binomial_multiple(YZ_X3, (1, 0, 0)))
        assert not ideal_slice_contains(RUN1, EX_GRADING, EX_ORDER,
                                        binomial_multiple(YZ_X3, (0, 0, 0)))

    def test_second_witness(self):
        B = [Y2_XZ, YZ_X3]
        assert ideal_slice_contains(B, EX_GRADING, EX_ORDER, binomial_multiple(Z2_X2Y, (1, 0, 0)))
        assert not ideal_slice_contains(B, EX_GRADING, EX_ORDER, binomial_multiple(Z2_X2Y, (0, 0, 0)))

    def test_zero_polynomial(self):
        assert ideal_slice_contains(RUN1, EX_GRADING, EX_ORDER, {(1, 0, 0): 0})

    def test_inhomogeneous_polynomial(self):
        with pytest.raises(NotHomogeneousError):
            ideal_slice_contains(RUN1, EX_GRADING, EX_ORDER, {(1, 0, 0): 1, (0, 1, 0): -1})


class TestLattice:
    def test_examples(self):
        assert not lattice_contains([(2, -2)], (1, -1))
        assert lattice_contains([(2, -2)], (-4, 4))
        assert lattice_contains([(1, -2, 1), (4, -3, 0)], (-3, 1, 1))
        assert lattice_contains([], (0, 0))
        assert not lattice_contains([], (0, 1))

    def test_kernel_basis_of_example_grading(self):
        K = kernel_lattice_basis([EX_GRADING.weights])
        assert len(K) == 2
        assert all(EX_GRADING(v) == 0 for v in K)
        for v in RUN3 + [(4, -3, 0)]:
            assert lattice_contains(K, v)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=3),
           st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_kernel_basis_property(self, A, x):
        K = kernel_lattice_basis(A)
        for v in K:
            assert all(sum(a * e for a, e in zip(row, v)) == 0 for row in A)
        inside = all(sum(a * e for a, e in zip(row, x)) == 0 for row in A)
        assert lattice_contains(K, x) == inside

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), max_size=3),
           st.lists(st.integers(-2, 2), max_size=3))
    def test_combinations_are_members(self, basis, coeffs):
        v = [0, 0, 0]
        for c, b in zip(coeffs, basis):
            v = [x + c * y for x, y in zip(v, b)]
        assert lattice_contains(basis, tuple(v))


class TestToric:
    @pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 3), (3, 3, 3)])
    def test_shape_and_sums(self, dims):
        I, J, K = dims
        A = build_toric_matrix(I, J, K)
        assert A.shape == (I * J + I * K + J * K, I * J * K)
        assert all(sum(col) == 3 for col in zip(*A.matrix))
        assert sum(map(sum, A.matrix[:I * J])) == I * J * K
        assert A.col_labels == tuple(table_variable_names(I, J, K))

    def test_kernel_ranks(self):
        assert len(kernel_lattice_basis(build_toric_matrix(2, 2, 2).matrix)) == 1
        assert len(kernel_lattice_basis(build_toric_matrix(3, 3, 3).matrix)) == 8

    def test_2x2x2_move(self):
        A = build_toric_matrix(2, 2, 2)
        names = list(A.col_labels)
        # x111 x122 x212 x221 - x112 x121 x211 x222
        v = [0] * 8
        for s in ("x111", "x122", "x212", "x221"):
            v[names.index(s)] = 1
        for s in ("x112", "x121", "x211", "x222"):
            v[names.index(s)] = -1
        assert toric_kernel_contains(A, tuple(v))
        (k,) = kernel_lattice_basis(A.matrix)
        assert tuple(v) in (k, tuple(-e for e in k))

    def test_non_member(self):
        A = build_toric_matrix(2, 2, 2)
        assert not toric_kernel_contains(A, (1, -1, 0, 0, 0, 0, 0, 0))

    def test_fibre_oracle_agrees_with_linear_algebra(self):
        A = build_toric_matrix(2, 2, 2)
        g, o = Grading.standard(8), TermOrder.revlex(8)
        K = kernel_lattice_basis(A.matrix)
        for s, sl in enumerate(toric_initial_oracle(A, g, o, 6)):
            assert sl.monomials == initial_slice(K, g, o, s).monomials

    def test_fibre_minimum_is_standard(self):
        A = build_toric_matrix(2, 2, 3)
        g, o = Grading.standard(12), TermOrder.revlex(12)
        sl = toric_initial_oracle(A, g, o, 4)[3]
        mons = enumerate_monomials(3, g)
        standard = [m for m in mons if m not in sl.monomials]
        images = [A(m) for m in standard]
        assert len(images) == len(set(images))
        for m in sl.monomials:
            same = [u for u in standard if A(u) == A(m)]
            assert len(same) == 1 and compare(m, same[0], g, o) > 0
