import itertools
import random

from invschub.involutions import (
    inv_length,
    involutions,
    random_involution,
    y_mu_n,
)
from invschub.permutations import Permutation, reverse_permutation, shift
from invschub.transition import expand_Fhat
from invschub.vexillary import (
    ELEVEN_P,
    FIVE_Q,
    TWO_321,
    contains_2143,
    contains_inv_pattern,
    is_p_vexillary,
    is_q_vexillary,
)

C = Permutation.from_cycles


class TestPatternContainment:
    def test_empty_pattern(self):
        assert contains_inv_pattern(C([(1, 2)]), Permutation())

    def test_self_containment(self):
        z = C([(1, 2), (3, 4), (5, 6)])
        assert contains_inv_pattern(z, z)

    def test_witness_points(self):
        z = C([(1, 3), (2, 6), (4, 5)])
        hit, pts = contains_inv_pattern(z, C([(1, 2)]), witness=True)
        assert hit and len(pts) == 2

    def test_interior_fixed_points(self):
        # the pattern (1,2)(3,5) needs a fixed point between the cycles
        z = C([(1, 2), (4, 6)])
        assert contains_inv_pattern(z, C([(1, 2), (3, 5)]))

    def test_outer_fixed_points(self):
        # leading and trailing fixed points come from outside the support
        z = C([(2, 3)])
        assert contains_inv_pattern(z, C([(2, 3)]))
        assert contains_inv_pattern(shift(z, -5), C([(2, 3)]))

    def test_rectangle_complement_avoids_triple(self):
        y = y_mu_n((2, 2), 4)
        assert not contains_inv_pattern(y, C([(1, 2), (3, 4), (5, 6)]))

    def test_pattern_lists_are_involutions(self):
        for p in ELEVEN_P + FIVE_Q + TWO_321:
            assert p.is_involution()
        assert len(ELEVEN_P) == 11 and len(FIVE_Q) == 5 and len(TWO_321) == 2


class TestPVexillary:
    def test_counts(self):
        expect = [1, 2, 4, 10, 24, 63, 159, 423]
        got = [
            sum(1 for y in involutions(n) if is_p_vexillary(y, "direct"))
            for n in range(1, 9)
        ]
        assert got == expect

    def test_reverse_permutations(self):
        for n in range(1, 8):
            assert is_p_vexillary(reverse_permutation(n), "patterns")

    def test_first_listed_pattern(self):
        assert not is_p_vexillary(C([(1, 2), (3, 5)]), "patterns")
        assert not is_p_vexillary(C([(1, 2), (3, 5)]), "direct")

    def test_routes_agree_on_i6(self):
        for y in involutions(6):
            assert is_p_vexillary(y, "patterns") == is_p_vexillary(y, "direct"), y

    def test_routes_agree_on_random_i10(self):
        rng = random.Random(101)
        found = 0
        while found < 12:
            z = random_involution(10, rng)
            if inv_length(z) > 12:
                continue
            found += 1
            assert is_p_vexillary(z, "patterns") == is_p_vexillary(z, "direct"), z

    def test_igrassmannian_implies_p_vexillary(self):
        from invschub.involutions import is_i_grassmannian

        for y in involutions(6):
            if is_i_grassmannian(y)[0]:
                assert is_p_vexillary(y, "patterns"), y


class TestQVexillary:
    def test_two_cycles_up_down(self):
        assert not is_q_vexillary(C([(1, 2), (3, 4)]), "patterns")
        assert not is_q_vexillary(C([(1, 2), (3, 4)]), "direct")
        assert not is_q_vexillary(C([(1, 2), (3, 4)]), "vexillary")

    def test_reverse_permutations(self):
        for n in range(1, 8):
            assert is_q_vexillary(reverse_permutation(n), "vexillary"), n

    def test_2143_detector(self):
        assert contains_2143(Permutation.from_one_line([2, 1, 4, 3]))
        assert not contains_2143(Permutation.from_one_line([3, 2, 1]))
        assert contains_2143(C([(1, 2), (3, 4)]))

    def test_three_routes_agree_on_i6(self):
        for y in involutions(6):
            a = is_q_vexillary(y, "patterns")
            b = is_q_vexillary(y, "direct")
            c = is_q_vexillary(y, "vexillary")
            assert a == b == c, y

    def test_q_vexillary_implies_p_vexillary_on_i6(self):
        for y in involutions(6):
            if is_q_vexillary(y, "vexillary"):
                assert is_p_vexillary(y, "direct"), y


class Test321Avoiding:
    @staticmethod
    def _is_321_avoiding(z):
        hi = z.max_support(default=1)
        vals = [z(k) for k in range(1, hi + 1)]
        n = len(vals)
        return not any(
            vals[i] > vals[j] > vals[k]
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(j + 1, n)
        )

    def test_two_pattern_specialization_on_i7(self):
        for z in involutions(7):
            if not self._is_321_avoiding(z):
                continue
            via_two = not any(contains_inv_pattern(z, p) for p in TWO_321)
            assert via_two == is_p_vexillary(z, "direct"), z


class TestRectangleCriterion:
    @staticmethod
    def _strict_inside(n):
        shapes = set()
        for vals in itertools.product(*(range(0, n - i) for i in range(n))):
            if all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
                shapes.add(tuple(v for v in vals if v))
        return sorted(shapes)

    def test_single_p_iff_rectangle(self):
        n = 4
        for mu in self._strict_inside(n):
            y = y_mu_n(mu, n)
            exp = expand_Fhat(y).as_dict()
            single = len(exp) == 1 and next(iter(exp.values())) == 1
            nonzero = [p for p in mu if p]
            is_rect = len(set(nonzero)) <= 1
            assert single == is_rect, (mu, exp)
