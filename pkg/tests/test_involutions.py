import itertools

import pytest

from invschub.involutions import (
    EnumerationGuardError,
    atoms,
    check_involution,
    count_involutions,
    cycles,
    inv_code,
    inv_diagram,
    inv_length,
    involution_words,
    involutions,
    is_dominant,
    is_i_grassmannian,
    igrassmannian_shape,
    kappa,
    min_atom,
    parse_involution,
    shape_mu,
    visible_descents,
    visible_inversions,
    y_mu_n,
)
from invschub.permutations import (
    Permutation,
    code,
    demazure_product,
    inversions,
    length,
    reverse_permutation,
    right_descents,
    shift,
)
from invschub.symfunc import shapes_equivalent, staircase, transpose

C = Permutation.from_cycles


class TestCycles:
    def test_identity(self):
        assert cycles(Permutation()) == []

    def test_sorted_output(self):
        y = C([(1, 6), (2, 7), (3, 4)])
        assert cycles(y) == [(1, 6), (2, 7), (3, 4)]

    def test_kappa(self):
        assert kappa(C([(2, 3), (4, 7)])) == 2

    def test_fixed_window(self):
        y = C([(2, 3)])
        assert cycles(y, fixed_window=(1, 4)) == [(1, 1), (2, 3), (4, 4)]

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError):
            check_involution(Permutation.from_one_line([2, 3, 1]))


class TestInvLength:
    def test_identity(self):
        assert inv_length(Permutation()) == 0

    def test_321(self):
        y = Permutation.from_one_line([3, 2, 1])
        assert length(y) == 3 and kappa(y) == 1
        assert inv_length(y) == 2

    def test_w4(self):
        w4 = reverse_permutation(4)
        assert length(w4) == 6 and kappa(w4) == 2
        assert inv_length(w4) == 4

    def test_matches_word_length(self):
        for y in involutions(4):
            words = involution_words(y)
            assert {len(a) for a in words} == {inv_length(y)}


class TestAtoms:
    def test_321(self):
        got = atoms(Permutation.from_one_line([3, 2, 1]))
        assert got == frozenset(
            {Permutation.from_one_line([2, 3, 1]), Permutation.from_one_line([3, 1, 2])}
        )

    def test_identity(self):
        assert atoms(Permutation()) == frozenset({Permutation()})

    def test_transposition(self):
        assert atoms(C([(1, 2)])) == frozenset({Permutation.s(1)})

    def test_atoms_satisfy_demazure_relation(self):
        for y in involutions(5):
            for w in atoms(y):
                assert length(w) == inv_length(y)
                assert demazure_product(w.inverse(), w) == y

    def test_guard(self):
        with pytest.raises(EnumerationGuardError):
            atoms(reverse_permutation(8), guard=12)


class TestMinAtom:
    def test_single_long_cycle(self):
        assert min_atom(C([(1, 4)])) == Permutation.from_one_line([2, 3, 4, 1])

    def test_identity(self):
        assert min_atom(Permutation()) == Permutation()

    def test_lex_least_atom_on_i5(self):
        for y in involutions(5):
            all_atoms = atoms(y)
            lex_min = min(all_atoms, key=lambda w: w.one_line(5))
            assert min_atom(y) == lex_min, y


class TestInvolutionWords:
    def test_counts_for_reverse(self):
        assert len(involution_words(reverse_permutation(4))) == 8
        assert len(involution_words(reverse_permutation(5))) == 80

    def test_identity(self):
        assert involution_words(Permutation()) == frozenset({()})

    def test_union_of_atom_words(self):
        from invschub.permutations import reduced_words

        for y in involutions(4):
            via_atoms = frozenset(
                word for w in atoms(y) for word in reduced_words(w)
            )
            assert involution_words(y) == via_atoms

    def test_brute_force_oracle_on_i4(self):
        # independent oracle: all words of length inv_length(y) whose nested
        # Demazure conjugation product gives y
        def fold(word):
            y = Permutation()
            for i in word:
                s = Permutation.s(i)
                y = demazure_product(demazure_product(s, y), s)
            return y

        for y in involutions(4):
            d = inv_length(y)
            expect = frozenset(
                w for w in itertools.product((1, 2, 3), repeat=d) if fold(w) == y
            )
            assert involution_words(y) == expect, y


class TestVisible:
    def test_identity(self):
        assert visible_inversions(Permutation()) == set()

    def test_transposition(self):
        assert visible_inversions(C([(1, 2)])) == {(1, 2)}

    def test_matches_min_atom_inversions_on_i6(self):
        for y in involutions(6):
            assert visible_inversions(y) == inversions(min_atom(y)), y

    def test_descents_from_definition(self):
        # direct from the defining inequality; note the window (2,3)(4,7)
        assert visible_descents(C([(2, 3), (4, 7)])) == {2, 6}

    def test_identity_descents(self):
        assert visible_descents(Permutation()) == set()

    def test_long_cycle_descent(self):
        for n in (1, 2, 5):
            assert visible_descents(C([(1, n + 1)])) == {n}

    def test_descents_match_min_atom_on_i6(self):
        for y in involutions(6):
            assert visible_descents(y) == right_descents(min_atom(y)), y


class TestDiagramAndCode:
    def test_cycle_14(self):
        assert inv_diagram(C([(1, 4)])) == {(1, 1), (2, 1), (3, 1)}
        assert inv_code(C([(1, 4)])) == (1, 1, 1)

    def test_identity(self):
        assert inv_diagram(Permutation()) == set()
        assert inv_code(Permutation()) == ()

    def test_size_is_rank_on_i6(self):
        for y in involutions(6):
            assert len(inv_diagram(y)) == inv_length(y)

    def test_code_matches_min_atom_on_i6(self):
        for y in involutions(6):
            assert inv_code(y) == code(min_atom(y)), y


class TestShape:
    def test_reverse_permutations(self):
        for n in range(1, 8):
            expect = tuple(k for k in range(n - 1, 0, -2))
            assert shape_mu(reverse_permutation(n)) == expect

    def test_identity(self):
        assert shape_mu(Permutation()) == ()

    def test_igrassmannian_shape_formula(self):
        # (phi_1, n+1)...(phi_r, n+r) has shape (n+1-phi_1, ..., n+1-phi_r)
        y = C([(2, 5), (4, 6)])
        assert igrassmannian_shape(y) == (3, 1)
        assert shape_mu(y) == (3, 1)

    def test_two_shape_routes_agree_on_igrassmannians(self):
        for y in involutions(6):
            flag, _ = is_i_grassmannian(y)
            if flag and not y.is_identity():
                assert shape_mu(y) == igrassmannian_shape(y), y

    def test_transpose_of_min_atom_code(self):
        for y in involutions(6):
            nu = tuple(v for v in sorted(code(min_atom(y)), reverse=True) if v)
            assert transpose(shape_mu(y)) == nu, y


class TestIGrassmannian:
    def test_identity(self):
        flag, data = is_i_grassmannian(Permutation())
        assert flag and data == ((), 0, 0)

    def test_counts(self):
        expect = [1, 2, 4, 8, 15, 27, 47, 80]
        got = [
            sum(1 for y in involutions(n) if is_i_grassmannian(y)[0])
            for n in range(1, 9)
        ]
        assert got == expect

    def test_figure_root_is_not(self):
        assert not is_i_grassmannian(C([(2, 4), (5, 7)]))[0]

    def test_equivalent_conditions_on_i6(self):
        # visible-descent, cycle-form, code and minimal-atom descriptions
        for y in involutions(6):
            flag, data = is_i_grassmannian(y)
            des = visible_descents(y)
            assert flag == (len(des) <= 1)
            if flag and not y.is_identity():
                phi, n, r = data
                assert des == {n}
                assert y == C([(p, n + 1 + k) for k, p in enumerate(phi)])
                c = inv_code(y)
                assert all(c[i] <= c[i + 1] for i in range(len(c) - 1))
                assert len(c) == n and c[-1] != 0
                assert len(right_descents(min_atom(y))) <= 1


class TestStaircaseComplement:
    def test_worked_example(self):
        y = y_mu_n((5, 3, 2, 2), 6)
        b = (3, 4, 7, 9, 10, 12)
        a = (1, 2, 5, 6, 8, 11)
        assert y == C(list(zip(a, b)))

    def test_empty_shape(self):
        assert y_mu_n((), 1) == C([(1, 2)])

    def test_rejects_loose_containment(self):
        with pytest.raises(ValueError):
            y_mu_n((4,), 4)  # needs mu_1 < 4

    def test_diagram_equivalent_to_skew_shape(self):
        for n in (2, 3):
            delta = staircase(n + 1)
            for mu in _strict_inside(n):
                y = y_mu_n(mu, n)
                skew = {
                    (i + 1, j + 1)
                    for i in range(len(delta))
                    for j in range((mu[i] if i < len(mu) else 0), delta[i])
                }
                assert shapes_equivalent(inv_diagram(y), skew), (mu, n)

    def test_is_321_avoiding(self):
        y = y_mu_n((2, 1), 3)
        vals = [y(k) for k in range(1, 9)]
        n = len(vals)
        has_321 = any(
            vals[i] > vals[j] > vals[k]
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(j + 1, n)
        )
        assert not has_321


def _strict_inside(n):
    """Partitions strictly inside the (n+1)-staircase."""
    shapes = set()
    bounds = [n - i for i in range(n)]
    for vals in itertools.product(*(range(0, b) for b in bounds)):
        if all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            shapes.add(tuple(v for v in vals if v))
    return sorted(shapes)


class TestEnumeration:
    def test_involution_counts(self):
        assert [count_involutions(n) for n in range(1, 7)] == [1, 2, 4, 10, 26, 76]

    def test_shift_invariance_of_visible_data(self):
        y = C([(2, 3), (4, 7)])
        moved = shift(y, 5)
        assert visible_descents(moved) == {i + 5 for i in visible_descents(y)}

    def test_parse_involution(self):
        assert parse_involution("(1,4)(2,3)") == C([(1, 4), (2, 3)])
        with pytest.raises(ValueError):
            parse_involution("(1,2,3)")


def test_dominant_examples():
    assert is_dominant(Permutation())
    assert is_dominant(C([(1, 4), (2, 5), (3, 6)]))
    assert is_dominant(reverse_permutation(5))
    assert not is_dominant(C([(4, 5)]))  # fixed points 1,2,3 make a 132
