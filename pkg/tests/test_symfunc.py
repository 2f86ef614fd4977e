import itertools

import pytest

from invschub.involutions import FalsificationError, inv_length, involution_words, y_mu_n
from invschub.permutations import Permutation, reverse_permutation
from invschub.polynomials import IntPolynomial, x
from invschub.schubert import inv_stanley_truncation
from invschub.symfunc import (
    NotInSpanError,
    SymFunExpansion,
    TruncatedSymFun,
    check_strict,
    contains,
    dominance_key,
    dominance_leq,
    expand_in_schur,
    expand_in_schurP,
    fundamental_qsym,
    partitions_of,
    schur_to_monomials,
    schurP_to_monomials,
    schurP_via_operators,
    schurQ_scale,
    skew_schur,
    staircase,
    strict_partitions_of,
    transpose,
    word_quasisym_sum,
)

x1, x2, x3 = x(1), x(2), x(3)


class TestDominance:
    def test_extremes(self):
        assert dominance_leq((1, 1, 1), (3,))
        assert not dominance_leq((3,), (1, 1, 1))

    def test_partial_sums(self):
        assert dominance_leq((2, 2), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))

    def test_different_sizes_incomparable(self):
        assert not dominance_leq((2,), (3,))

    def test_transpose_reverses_on_small_partitions(self):
        for n in range(1, 9):
            parts = list(partitions_of(n))
            for lam in parts:
                for mu in parts:
                    assert dominance_leq(lam, mu) == dominance_leq(
                        transpose(mu), transpose(lam)
                    )

    def test_dominance_key_is_linear_extension(self):
        for n in range(1, 9):
            parts = sorted(partitions_of(n), key=dominance_key)
            for i, lam in enumerate(parts):
                for mu in parts[i + 1:]:
                    assert not (dominance_leq(lam, mu) and lam != mu)


class TestPartitions:
    def test_transpose(self):
        assert transpose((3, 1)) == (2, 1, 1)
        assert transpose(()) == ()
        assert transpose(transpose((4, 2, 1))) == (4, 2, 1)

    def test_contains(self):
        assert contains((3, 2), (2, 2))
        assert not contains((3, 2), (1, 1, 1))

    def test_strict_check(self):
        check_strict((3, 1))
        with pytest.raises(ValueError):
            check_strict((2, 2))

    def test_staircase(self):
        assert staircase(4) == (3, 2, 1)

    def test_strict_partitions(self):
        assert list(strict_partitions_of(4)) == [(4,), (3, 1)]


class TestSchur:
    def test_ss_column(self):
        got = schur_to_monomials((1, 1), 3).poly
        assert got == x1 * x2 + x1 * x3 + x2 * x3

    def test_empty(self):
        assert schur_to_monomials((), 3).poly == IntPolynomial.one()

    def test_pieri_square(self):
        n = 3
        e1 = x1 + x2 + x3
        total = schur_to_monomials((2,), n).poly + schur_to_monomials((1, 1), n).poly
        assert total == e1 * e1


class TestSchurP:
    def test_two_one_expansion(self):
        got = schurP_to_monomials((2, 1), 3).poly
        expect = IntPolynomial.zero()
        xs = [x1, x2, x3]
        for i in range(3):
            for j in range(i + 1, 3):
                expect = expect + xs[i] ** 2 * xs[j] + xs[i] * xs[j] ** 2
        expect = expect + 2 * x1 * x2 * x3
        assert got == expect

    def test_empty(self):
        assert schurP_to_monomials((), 4).poly == IntPolynomial.one()

    def test_quasisymmetric_route(self):
        # standard marked tableaux of shape (2,1) have descent sets {2}, {1}
        got = fundamental_qsym(3, {2}, 3) + fundamental_qsym(3, {1}, 3)
        assert got == schurP_to_monomials((2, 1), 3).poly

    def test_two_routes_agree(self):
        for d in range(1, 7):
            for lam in strict_partitions_of(d):
                for n in range(len(lam), 7):
                    a = schurP_to_monomials(lam, n).poly
                    b = schurP_via_operators(lam, n).poly
                    assert a == b, (lam, n)

    def test_schur_positive_with_dominance_window(self):
        for d in range(1, 7):
            for lam in strict_partitions_of(d):
                f = schurP_to_monomials(lam, d)
                exp = expand_in_schur(f).as_dict()
                assert exp.get(lam) == 1
                assert all(c > 0 for c in exp.values())
                assert all(dominance_leq(mu, lam) for mu in exp)


class TestExpandInSchurP:
    def test_basis_recovery(self):
        f = schurP_to_monomials((3, 1), 4)
        assert expand_in_schurP(f).as_dict() == {(3, 1): 1}

    def test_figure_expansion(self):
        y = Permutation.from_cycles([(2, 4), (5, 7)])
        f = inv_stanley_truncation(y, 4)
        assert expand_in_schurP(f).as_dict() == {(3, 1): 2, (4,): 1}

    def test_reverse_w5(self):
        f = inv_stanley_truncation(reverse_permutation(5), 6)
        assert expand_in_schurP(f).as_dict() == {(4, 2): 1}

    def test_staircase_schur_is_schur_p(self):
        # s of a staircase lies in the span: it equals the matching P
        f = TruncatedSymFun(schur_to_monomials((2, 1), 3).poly, 3, 3)
        assert expand_in_schurP(f).as_dict() == {(2, 1): 1}

    def test_not_in_span(self):
        f = TruncatedSymFun(schur_to_monomials((1, 1), 2).poly, 2, 2)
        with pytest.raises(NotInSpanError):
            expand_in_schurP(f)


class TestSkewSchur:
    def test_trivial_skew(self):
        assert skew_schur((2, 1), (2, 1), 3).poly == IntPolynomial.one()

    def test_full_shape(self):
        assert skew_schur((2, 1), (), 3).poly == schur_to_monomials((2, 1), 3).poly

    def test_staircase_complement_matches_inv_stanley(self):
        n = 3
        delta = staircase(n + 1)
        for mu in [(), (1,), (2,), (1, 1), (2, 1)]:
            y = y_mu_n(mu, n)
            d = inv_length(y)
            a = skew_schur(delta, mu, d)
            b = inv_stanley_truncation(y, d)
            assert a.poly == b.poly, mu

    def test_containment_error(self):
        with pytest.raises(ValueError):
            skew_schur((2,), (3,), 2)


class TestSchurQScale:
    def test_single_cycle(self):
        e = SymFunExpansion.from_dict("SchurP", {(1,): 1})
        assert schurQ_scale(e, 1).as_dict() == {(1,): 1}

    def test_w3(self):
        e = SymFunExpansion.from_dict("SchurP", {(2,): 1})
        assert schurQ_scale(e, 1).as_dict() == {(2,): 1}

    def test_figure_values(self):
        e = SymFunExpansion.from_dict("SchurP", {(3, 1): 2, (4,): 1})
        assert schurQ_scale(e, 2).as_dict() == {(3, 1): 2, (4,): 2}

    def test_divisibility_failure_raises(self):
        e = SymFunExpansion.from_dict("SchurP", {(1,): 1})
        with pytest.raises(FalsificationError):
            schurQ_scale(e, 0)


class TestQuasisym:
    def test_linear_independence_small(self):
        from fractions import Fraction

        for n in (3, 4):
            subsets = [
                tuple(sorted(S))
                for k in range(n)
                for S in itertools.combinations(range(1, n), k)
            ]
            monomials = sorted(
                {
                    e
                    for S in subsets
                    for e in fundamental_qsym(n, set(S), n).terms()
                }
            )
            rows = [
                [
                    Fraction(fundamental_qsym(n, set(S), n).coefficient(e))
                    for e in monomials
                ]
                for S in subsets
            ]
            rank = 0
            for col in range(len(monomials)):
                pivot = next(
                    (r for r in range(rank, len(rows)) if rows[r][col]), None
                )
                if pivot is None:
                    continue
                rows[rank], rows[pivot] = rows[pivot], rows[rank]
                lead = rows[rank][col]
                for r in range(len(rows)):
                    if r != rank and rows[r][col]:
                        factor = rows[r][col] / lead
                        rows[r] = [
                            a - factor * b for a, b in zip(rows[r], rows[rank])
                        ]
                rank += 1
            assert rank == len(subsets) == 2 ** (n - 1)

    def test_word_sum_route(self):
        y = Permutation.from_one_line([3, 2, 1])
        f = word_quasisym_sum(involution_words(y), 2)
        assert f.poly == x1**2 + 2 * x1 * x2 + x2**2


class TestSerialization:
    def test_sorted_by_dominance_then_lex(self):
        e = SymFunExpansion.from_dict("SchurP", {(3, 1): 2, (4,): 1})
        assert e.support() == ((4,), (3, 1))
        payload = e.to_payload()
        assert payload == {
            "basis": "SchurP",
            "terms": [
                {"shape": [4], "coeff": 1},
                {"shape": [3, 1], "coeff": 2},
            ],
        }

    def test_str(self):
        e = SymFunExpansion.from_dict("Schur", {(2, 1): 3})
        assert str(e) == "3*s(2,1)"
