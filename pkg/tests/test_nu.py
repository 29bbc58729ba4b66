from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import metric_spaces, space
from ghspace import (
    LengthMismatch,
    LinfBall,
    NotGeneric,
    NotStructurallyIsomorphic,
    OutsideBall,
    SinglePoint,
    delta,
    gh_distance_exact,
    incompressibility_check,
    is_generic,
    linf_distance,
    local_isometry_check,
    nu,
    nu_inverse,
    simplex,
    single_point,
)
from ghspace.errors import AnchorNotGeneric
from ghspace.nu import isometry_sample
from ghspace.sampling import make_rng, random_generic_space, sample_generic

half = Fraction(1, 2)


class TestNu:
    def test_345(self, triangle345):
        v = nu(triangle345)
        assert v.coords == (Fraction(3, 2), 2, Fraction(5, 2))
        assert v.pair_order == ((0, 1), (0, 2), (1, 2))

    def test_segment(self):
        assert nu(simplex(2)).coords == (half,)

    def test_ties_follow_pair_order(self, equilateral):
        v = nu(equilateral)
        assert v.coords == (half, half, half)
        assert v.pair_order == ((0, 1), (0, 2), (1, 2))

    def test_single_point(self):
        with pytest.raises(SinglePoint):
            nu(single_point())

    @settings(max_examples=80, deadline=None)
    @given(metric_spaces(min_n=2, max_n=6), st.randoms(use_true_random=False))
    def test_label_invariant(self, X, rnd):
        perm = list(range(X.n))
        rnd.shuffle(perm)
        assert nu(X.relabel(perm)).coords == nu(X).coords

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 6), st.integers(0, 2**32))
    def test_generic_gaps(self, n, seed):
        X = random_generic_space(make_rng(seed), n)
        c = nu(X).coords
        d = delta(X).value
        assert all(b - a >= d / 2 for a, b in zip(c, c[1:]))


class TestLinf:
    def test_values(self, triangle345):
        u = nu(triangle345)
        assert linf_distance(u, u) == 0
        assert linf_distance([Fraction(3, 2), 2, Fraction(5, 2)], [Fraction(3, 2), 3, Fraction(5, 2)]) == 1
        # (3/2, 2, 5/2) against (15, 20, 25)
        assert linf_distance(u, nu(triangle345.scaled(10))) == Fraction(45, 2)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            linf_distance([1, 2], [1])

    def test_open_ball(self):
        ball = LinfBall((0, 0), 1)
        assert (Fraction(99, 100), 0) in ball
        assert (1, 0) not in ball


class TestIncompressibility:
    def test_self(self, triangle345):
        assert incompressibility_check(triangle345, triangle345) == (0, 0, True)

    def test_nearby_triangle(self, triangle345):
        Y = space([0, 3, 4], [3, 0, "11/2"], [4, "11/2", 0])
        gh, lin, ok = incompressibility_check(triangle345, Y)
        assert lin == Fraction(1, 4) and ok and gh == gh_distance_exact(triangle345, Y).distance

    def test_scaled(self, triangle345):
        gh, lin, ok = incompressibility_check(triangle345, triangle345.scaled(10))
        assert lin == Fraction(45, 2) and gh <= lin and ok

    def test_requires_isomorphism(self, triangle345, equilateral):
        with pytest.raises(NotStructurallyIsomorphic):
            incompressibility_check(triangle345, equilateral)


class TestInverse:
    def test_center(self, triangle345):
        Y = nu_inverse(nu(triangle345), triangle345)
        assert Y.dist == triangle345.dist

    def test_inside(self, triangle345):
        z = (Fraction(3, 2) + Fraction(1, 12), 2, Fraction(5, 2))
        Y = nu_inverse(z, triangle345)
        assert sorted(Y.distances()) == [Fraction(19, 6), 4, 5]
        assert nu(Y).coords == z

    def test_outside(self, triangle345):
        with pytest.raises(OutsideBall):
            nu_inverse((Fraction(3, 2) + Fraction(1, 4), 2, Fraction(5, 2)), triangle345)
        with pytest.raises(OutsideBall):
            nu_inverse((Fraction(3, 2) + Fraction(1, 6), 2, Fraction(5, 2)), triangle345)

    def test_anchor_must_be_generic(self, equilateral):
        with pytest.raises(AnchorNotGeneric):
            nu_inverse(nu(equilateral), equilateral)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 6), st.integers(0, 2**32))
    def test_roundtrip_surjectivity(self, n, seed):
        rng = make_rng(seed)
        X = random_generic_space(rng, n)
        r = delta(X).value / 6
        offsets = rng.integers(-63, 64, size=n * (n - 1) // 2)
        z = tuple(c + int(k) * r / 64 for c, k in zip(nu(X).coords, offsets))
        Y = nu_inverse(z, X)
        assert nu(Y).coords == z
        assert is_generic(Y)


class TestLocalIsometry:
    def test_345(self, triangle345):
        report = local_isometry_check(triangle345, 25, seed=3)
        assert report.all_passed and len(report.samples) == 25
        assert all(s.n_points == 3 and s.gh == s.linf for s in report.samples)

    def test_center_point(self, triangle345):
        s = isometry_sample(triangle345, nu(triangle345))
        assert s.gh == s.linf == 0 and s.passed

    def test_not_generic(self, equilateral):
        with pytest.raises(NotGeneric):
            local_isometry_check(equilateral, 5)

    def test_segment(self):
        report = local_isometry_check(simplex(2), 10, seed=1)
        assert report.all_passed

    def test_deterministic(self):
        X = sample_generic(4, seed=11)
        a = local_isometry_check(X, 8, seed=5).to_json()
        b = local_isometry_check(X, 8, seed=5, workers=2).to_json()
        assert a == b
        assert a["generator"] == "PCG64"
