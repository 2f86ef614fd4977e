import itertools
import random

import pytest

from invschub.permutations import Permutation
from invschub.pfaffian import (
    SkewSymMatrix,
    determinant,
    ell_plus,
    fixed_point_free_involutions,
    generic_skew_matrix,
    grass_entry,
    igrass_involution,
    pfaffian,
    pfaffian_definitional,
    pfaffian_recursive,
    pfaffian_schubert_matrix,
    schurP_pfaffian_check,
    verify_pfaffian_theorem,
)
from invschub.polynomials import IntPolynomial, prod, x
from invschub.schubert import inv_schubert_poly, schurP_truncation
from invschub.symfunc import strict_partitions_of


def sym(i, j):
    return IntPolynomial.variable(10 * i + j)


class TestPfaffianCore:
    def test_two_by_two(self):
        a = generic_skew_matrix(2, lambda i, j: 10 * i + j)
        assert pfaffian(a) == sym(1, 2)

    def test_four_by_four(self):
        a = generic_skew_matrix(4, lambda i, j: 10 * i + j)
        expect = sym(1, 2) * sym(3, 4) - sym(1, 3) * sym(2, 4) + sym(1, 4) * sym(2, 3)
        assert pfaffian(a) == expect

    def test_odd_size_is_zero(self):
        a = generic_skew_matrix(3, lambda i, j: 10 * i + j)
        assert pfaffian(a) == IntPolynomial.zero()
        assert not list(fixed_point_free_involutions(3))

    def test_all_ones(self):
        for n in range(2, 9, 2):
            a = SkewSymMatrix.from_entries(
                n, {(i, j): 1 for i in range(1, n + 1) for j in range(i + 1, n + 1)}
            )
            assert pfaffian(a) == IntPolynomial.one(), n

    def test_square_is_determinant(self):
        rng = random.Random(13)
        for n in (2, 4, 6):
            a = SkewSymMatrix.from_entries(
                n,
                {
                    (i, j): rng.randrange(-9, 10)
                    for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)
                },
            )
            assert pfaffian(a) * pfaffian(a) == determinant(a), n

    def test_recursive_matches_definitional(self):
        rng = random.Random(14)
        for n in (2, 4, 6, 8):
            a = SkewSymMatrix.from_entries(
                n,
                {
                    (i, j): rng.randrange(-5, 6)
                    for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)
                },
            )
            assert pfaffian_definitional(a) == pfaffian_recursive(a), n


class TestMatrixBuilders:
    def test_ell_plus(self):
        assert ell_plus((2, 3)) == 2
        assert ell_plus((1, 2, 3)) == 4

    def test_single_index_matrix(self):
        for n in range(1, 5):
            m = pfaffian_schubert_matrix((1,), n)
            assert m.n == 2
            d = prod([x(1)] + [x(1) + x(j) for j in range(2, n + 1)])
            assert pfaffian(m) == d

    def test_bad_phi(self):
        with pytest.raises(ValueError):
            pfaffian_schubert_matrix((2, 2), 3)
        with pytest.raises(ValueError):
            pfaffian_schubert_matrix((1, 4), 3)

    def test_worked_four_by_four(self):
        m = pfaffian_schubert_matrix((1, 2, 3), 3)
        assert m.n == 4
        table = dict(m.upper)
        assert table[(1, 4)] == inv_schubert_poly(Permutation.from_cycles([(1, 4)]))
        assert table[(1, 2)] == inv_schubert_poly(
            Permutation.from_cycles([(1, 4), (2, 5)])
        )
        common = inv_schubert_poly(Permutation.from_cycles([(1, 4), (2, 5), (3, 6)]))
        expect = x(1) * x(2) * x(3) * (x(1) + x(2)) * (x(1) + x(3)) * (x(2) + x(3))
        assert common == expect
        assert pfaffian(m) == expect


class TestPfaffianTheorem:
    def test_smallest(self):
        assert verify_pfaffian_theorem((1,), 1)

    def test_worked_example(self):
        assert verify_pfaffian_theorem((1, 2, 3), 3)

    def test_sweep_small(self):
        for n in range(1, 5):
            for r in range(1, n + 1):
                for phi in itertools.combinations(range(1, n + 1), r):
                    assert verify_pfaffian_theorem(phi, n), (phi, n)

    def test_derivative_rule(self):
        # the divided difference of the pfaffian advances one index, and
        # vanishes when the advanced sequence is no longer strict
        for n in (3, 4):
            for r in range(1, n + 1):
                for phi in itertools.combinations(range(1, n + 1), r):
                    pfm = pfaffian(pfaffian_schubert_matrix(phi, n))
                    for p in range(1, n):
                        d = pfm.divided_difference(p)
                        if p in phi:
                            i = phi.index(p)
                            moved = tuple(
                                v + 1 if k == i else v for k, v in enumerate(phi)
                            )
                            if all(
                                moved[k] < moved[k + 1] for k in range(len(moved) - 1)
                            ):
                                assert d == pfaffian(
                                    pfaffian_schubert_matrix(moved, n)
                                ), (phi, n, p)
                            else:
                                assert d == IntPolynomial.zero(), (phi, n, p)
                        else:
                            assert d == IntPolynomial.zero(), (phi, n, p)

    def test_least_term_factorization(self):
        for n in (3, 4, 5):
            for i in range(1, n + 1):
                c, e = grass_entry(i, 0, n).least_term()
                mono = [0] * n
                for k in range(i, n + 1):
                    mono[k - 1] = 1
                assert (c, e) == (1, tuple(mono)), (i, n)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    c, e = grass_entry(i, j, n).least_term()
                    mono = [0] * n
                    for k in range(i, n + 1):
                        mono[k - 1] += 1
                    for k in range(j, n + 1):
                        mono[k - 1] += 1
                    assert (c, e) == (1, tuple(mono)), (i, j, n)


class TestSchurPPfaffian:
    def test_three_two_one(self):
        assert schurP_pfaffian_check((3, 2, 1), 6)

    def test_single_row(self):
        assert schurP_pfaffian_check((4,), 5)

    def test_explicit_expansion(self):
        width = 6
        p = lambda lam: schurP_truncation(lam, width).poly
        lhs = p((3, 2, 1))
        rhs = p((3, 2)) * p((1,)) - p((3, 1)) * p((2,)) + p((2, 1)) * p((3,))
        assert lhs == rhs

    def test_sweep_medium(self):
        for d in range(1, 7):
            for lam in strict_partitions_of(d):
                assert schurP_pfaffian_check(lam, 6), lam


def test_igrass_involution_builder():
    y = igrass_involution((1, 3), 3)
    assert y == Permutation.from_cycles([(1, 4), (3, 5)])
