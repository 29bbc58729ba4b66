from fractions import Fraction

import pytest

from conftest import space
from oracles import all_correspondences, minimal_correspondences
from ghspace import (
    Correspondence,
    NotIrreducible,
    Relation,
    decompose_irreducible,
    distortion,
    enumerate_correspondences,
    enumerate_irreducible,
    is_irreducible,
    simplex,
    single_point,
)
from ghspace.correspondence import full_correspondence, identity_correspondence
from ghspace.errors import IndexOutOfRange, NotACorrespondence, SizeCapExceeded

SHAPES = [(n, m) for n in range(1, 4) for m in range(1, 4)]


def C(n, m, *pairs):
    return Correspondence(n, m, frozenset(pairs))


class TestRelations:
    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            Relation(2, 2, frozenset({(0, 2)}))

    def test_not_surjective(self):
        with pytest.raises(NotACorrespondence):
            C(2, 2, (0, 0), (1, 0))

    def test_masks_roundtrip(self):
        R = C(2, 3, (0, 0), (0, 1), (1, 2))
        assert R.masks == (0b011, 0b100)
        assert Correspondence.from_masks(3, R.masks) == R

    def test_transpose(self):
        R = C(2, 3, (0, 0), (0, 1), (1, 2))
        assert R.transpose().sorted_pairs() == ((0, 0), (1, 0), (2, 1))


class TestDistortion:
    def test_identity(self, triangle345):
        assert distortion(identity_correspondence(3), triangle345, triangle345) == 0

    def test_point_to_segment(self):
        assert distortion(full_correspondence(1, 2), single_point(), simplex(2)) == 1

    def test_two_bijective_pairs(self):
        assert distortion(C(2, 2, (0, 0), (1, 1)), simplex(2, 3), simplex(2, 5)) == 2

    def test_single_pair(self, triangle345):
        assert distortion(Relation(3, 3, frozenset({(1, 2)})), triangle345, triangle345) == 0

    def test_index_check(self):
        with pytest.raises(IndexOutOfRange):
            distortion(full_correspondence(3, 1), simplex(2), single_point())


class TestEnumeration:
    def test_small_counts(self):
        assert [R.sorted_pairs() for R in enumerate_correspondences(1, 1)] == [((0, 0),)]
        assert [R.sorted_pairs() for R in enumerate_correspondences(1, 2)] == [((0, 0), (0, 1))]

    def test_two_by_two(self):
        # 16 subsets of the grid, 9 of which miss a row or a column
        assert len(all_correspondences(2, 2)) == 7
        assert len(list(enumerate_correspondences(2, 2))) == 7

    @pytest.mark.parametrize("n, m", SHAPES)
    def test_matches_brute_force_in_lex_order(self, n, m):
        got = [R.sorted_pairs() for R in enumerate_correspondences(n, m)]
        assert got == sorted(tuple(sorted(R)) for R in all_correspondences(n, m))

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            next(enumerate_correspondences(6, 1))
        assert len(list(enumerate_correspondences(1, 6, cap=6))) == 1


class TestIrreducible:
    def test_row(self):
        assert is_irreducible(C(1, 2, (0, 0), (0, 1)))

    def test_full_grid(self):
        assert not is_irreducible(full_correspondence(2, 2))

    def test_three_pairs_on_two_by_two(self):
        # dropping (1, 0) still leaves a correspondence
        R = C(2, 2, (0, 0), (1, 0), (1, 1))
        assert not is_irreducible(R)
        assert Correspondence(2, 2, R.pairs - {(1, 0)}).is_correspondence()

    def test_two_by_two_count(self):
        # only the two bijections are minimal
        assert len(minimal_correspondences(2, 2)) == 2
        assert [R.sorted_pairs() for R in enumerate_irreducible(2, 2)] == [((0, 0), (1, 1)), ((0, 1), (1, 0))]

    @pytest.mark.parametrize("n, m", SHAPES + [(2, 4), (4, 2), (3, 4), (4, 4)])
    def test_structural_matches_brute_force(self, n, m):
        got = [R.sorted_pairs() for R in enumerate_irreducible(n, m)]
        assert len(set(got)) == len(got)
        assert got == sorted(tuple(sorted(R)) for R in minimal_correspondences(n, m))
        assert all(is_irreducible(R) for R in enumerate_irreducible(n, m))

    @pytest.mark.parametrize("n, m", SHAPES)
    def test_every_correspondence_contains_one(self, n, m):
        irreducible = [R.pairs for R in enumerate_irreducible(n, m)]
        for R in enumerate_correspondences(n, m):
            assert any(S <= R.pairs for S in irreducible)

    def test_single_row(self):
        for m in range(1, 5):
            assert len(list(enumerate_irreducible(1, m))) == 1


class TestDecompose:
    def test_identity(self):
        dec = decompose_irreducible(identity_correspondence(3))
        assert dec.left_matched == (0, 1, 2) and dec.right_matched == (0, 1, 2)
        assert dec.left_blocks == () and dec.left_spread == ()
        assert [tuple(map(min, part)) for part in dec.bijection] == [(0, 0), (1, 1), (2, 2)]

    def test_block_to_singleton(self):
        dec = decompose_irreducible(C(2, 1, (0, 0), (1, 0)))
        assert dec.left_blocks == (frozenset({0, 1}),)
        assert dec.right_centers == (0,)

    def test_mixed(self):
        dec = decompose_irreducible(C(2, 3, (0, 0), (0, 1), (1, 2)))
        assert dec.left_spread == (0,) and dec.right_blocks == (frozenset({0, 1}),)
        assert dec.left_matched == (1,) and dec.right_matched == (2,)

    def test_rejects_reducible(self):
        with pytest.raises(NotIrreducible):
            decompose_irreducible(full_correspondence(2, 2))

    @pytest.mark.parametrize("n, m", SHAPES + [(3, 4), (4, 3)])
    def test_roundtrip_and_partition(self, n, m):
        for R in enumerate_irreducible(n, m):
            dec = decompose_irreducible(R)
            assert dec.to_correspondence() == R
            left = [x for b in dec.left_blocks for x in b] + list(dec.left_matched) + list(dec.left_spread)
            right = list(dec.right_centers) + list(dec.right_matched) + [y for b in dec.right_blocks for y in b]
            assert sorted(left) == list(range(n))
            assert sorted(right) == list(range(m))


def test_distortion_is_monotone_under_inclusion():
    X = space([0, 2, 3], [2, 0, 4], [3, 4, 0])
    Y = space([0, 1, 2], [1, 0, 2], [2, 2, 0])
    every = list(enumerate_correspondences(3, 3))
    for R in every[::7]:
        for S in every[::11]:
            if S.pairs <= R.pairs:
                assert distortion(S, X, Y) <= distortion(R, X, Y)
    # frozen from oracles.brute_gh: distance 1, so least distortion 2
    assert min(distortion(R, X, Y) for R in every) == Fraction(2)
