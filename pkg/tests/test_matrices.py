import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snomat.matrices import (
    FULL_FRAME,
    BlockPartition,
    Matrix,
    PartitionWitness,
    are_strong_non_overlapping_matrices,
    contains_submatrix,
    frame_of_block,
    is_self_overlapping,
    is_self_overlapping_by_partition,
    overlap_by_partition,
    overlap_by_translation,
    partitions,
    translations,
    validate_matrix_set,
)
from snomat.words import is_bifix_free

import oracles

A = Matrix.of(["12112", "01030", "32102", "01313"])


def grids(max_rows, max_cols, k):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, k - 1), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    ).map(lambda rows: Matrix(tuple(map(tuple, rows))))


class TestFrames:
    def test_one_by_three(self):
        p = BlockPartition(1, 3, (), (1, 2))
        assert frame_of_block(p, 1, 1) == {"t", "b", "l"}
        assert frame_of_block(p, 1, 2) == {"t", "b"}
        assert frame_of_block(p, 1, 3) == {"t", "b", "r"}

    def test_three_by_three(self):
        p = BlockPartition(3, 3, (1, 2), (1, 2))
        assert frame_of_block(p, 1, 1) == {"t", "l"}
        assert frame_of_block(p, 1, 2) == {"t"}
        assert frame_of_block(p, 1, 3) == {"t", "r"}
        assert frame_of_block(p, 2, 2) == frozenset()

    def test_trivial(self):
        assert frame_of_block(BlockPartition(2, 3), 1, 1) == FULL_FRAME

    def test_bounds(self):
        with pytest.raises(IndexError):
            frame_of_block(BlockPartition(3, 3, (1,), ()), 3, 1)
        with pytest.raises(ValueError):
            BlockPartition(3, 3, (2, 1), ())
        with pytest.raises(ValueError):
            BlockPartition(3, 3, (3,), ())

    def test_partition_count(self):
        # row cuts of 4: 1 + 3 + 3 with at most three bands
        assert sum(1 for _ in partitions(4, 1)) == 7
        assert sum(1 for _ in partitions(4, 3, max_bands=None)) == 8 * 4


class TestWorkedPairs:
    def test_bottom_block_of_b(self):
        B = Matrix.of(["21", "11", "03"])
        w = overlap_by_partition(A, B)
        assert w is not None and w.check(A, B)
        t = overlap_by_translation(A, B)
        assert t is not None and t.check(A, B)
        # B's lower two rows lie on A's rows 1-2, columns 3-4; B's top row sits above A
        assert t.offset == (-1, 2) and t.rect == (0, 2, 2, 4)
        # the block pair named in the worked example is itself a witness
        named = PartitionWitness(BlockPartition(4, 5, (2,), (2, 4)), (1, 2), BlockPartition(3, 2, (1,), ()), (2, 1))
        assert named.check(A, B)
        assert frame_of_block(named.partition_a, 1, 2) == {"t"}
        assert frame_of_block(named.partition_b, 2, 1) == {"l", "b", "r"}

    def test_right_block_of_b(self):
        B = Matrix.of(["312", "201"])
        named = PartitionWitness(BlockPartition(4, 5, (2,), (2, 4)), (1, 1), BlockPartition(2, 3, (), (1,)), (1, 2))
        assert named.check(A, B)
        assert overlap_by_partition(A, B) is not None
        assert overlap_by_translation(A, B) is not None

    def test_finer_partition_needed(self):
        B = Matrix.of(["123", "012"])
        coarse = PartitionWitness(BlockPartition(4, 5, (2,), (2, 4)), (1, 1), BlockPartition(2, 3, (), (2,)), (1, 1))
        assert A.block(0, 2, 0, 2) == B.block(0, 2, 0, 2)
        assert not coarse.check(A, B)
        fine = PartitionWitness(BlockPartition(4, 5, (1,), (2,)), (1, 1), BlockPartition(2, 3, (1,), (1,)), (2, 2))
        assert fine.check(A, B)
        assert overlap_by_partition(A, B) is not None
        assert overlap_by_translation(A, B) is not None

    def test_contained_matrix(self):
        inner = Matrix.of(["103", "210"])
        assert contains_submatrix(A, inner)
        w = overlap_by_partition(inner, A)
        assert w is not None and w.check(inner, A)
        assert overlap_by_translation(A, inner) is not None

    def test_not_overlapping(self):
        B = Matrix.of(["123", "011", "103"])
        assert A.block(0, 2, 0, 2) == B.block(0, 2, 0, 2)
        assert overlap_by_partition(A, B) is None
        assert overlap_by_translation(A, B) is None
        assert not oracles.canvas_overlap(A.entries, B.entries)
        assert are_strong_non_overlapping_matrices(A, B)


def test_containment_center_entry():
    m = Matrix.of(["123", "456", "789"])
    c = Matrix.of(["5"])
    assert overlap_by_translation(m, c).rect == (1, 2, 1, 2)
    assert overlap_by_partition(m, c) is not None
    assert not are_strong_non_overlapping_matrices(m, c)


def test_disjoint_symbols():
    assert overlap_by_translation(Matrix.of(["01", "10"]), Matrix.of(["23", "32"])) is None
    assert overlap_by_partition(Matrix.of(["01", "10"]), Matrix.of(["23", "32"])) is None


def test_strong_rejects_identical():
    with pytest.raises(ValueError):
        are_strong_non_overlapping_matrices(A, Matrix(A.entries))


class TestSelfOverlap:
    def test_constant(self):
        assert is_self_overlapping(Matrix.of(["11", "11"]))

    def test_worked_two_row(self):
        m = Matrix.of(["110", "320"])
        assert not is_self_overlapping(m)
        assert not is_self_overlapping_by_partition(m)
        assert not oracles.canvas_overlap(m.entries, m.entries, skip_zero=True)

    def test_identity_object_excludes_zero_offset(self):
        m = Matrix.of(["110", "320"])
        assert overlap_by_translation(m, m) is None
        assert overlap_by_translation(m, Matrix(m.entries)).offset == (0, 0)

    def test_single_row_is_border_test(self):
        for s in range(1, 9):
            for w in itertools.product((0, 1), repeat=s):
                m = Matrix((w,))
                assert is_self_overlapping(m) == (not is_bifix_free(w)), w
                assert is_self_overlapping_by_partition(m) == is_self_overlapping(m)

    @settings(max_examples=300, deadline=None)
    @given(grids(4, 4, 2))
    def test_self_matches_canvas(self, m):
        expected = oracles.canvas_overlap(m.entries, m.entries, skip_zero=True)
        assert is_self_overlapping(m) == expected
        assert is_self_overlapping_by_partition(m) == expected


@settings(max_examples=400, deadline=None)
@given(grids(4, 5, 3), grids(4, 5, 3))
def test_equivalence_and_symmetry(a, b):
    wp = overlap_by_partition(a, b, self_test=False)
    wt = overlap_by_translation(a, b, self_test=False)
    assert (wp is None) == (wt is None) == (not oracles.canvas_overlap(a.entries, b.entries))
    assert (overlap_by_partition(b, a, self_test=False) is None) == (wp is None)
    assert (overlap_by_translation(b, a, self_test=False) is None) == (wt is None)
    if wp is not None:
        assert wp.check(a, b)
        # the partition witness induces an agreeing translation
        dr, dc = wp.offset
        assert any(t.offset == (dr, dc) for t in translations(a, b))
    if wt is not None:
        assert wt.check(a, b)


@settings(max_examples=150, deadline=None)
@given(grids(4, 4, 2), grids(4, 4, 2))
def test_three_band_bound_loses_nothing(a, b):
    restricted = overlap_by_partition(a, b, self_test=False) is not None
    assert restricted == oracles.literal_partition_overlap(a.entries, b.entries)
    assert restricted == oracles.literal_partition_overlap(a.entries, b.entries, max_bands=3)
    assert restricted == (overlap_by_partition(a, b, self_test=False, max_bands=None) is not None)


@settings(max_examples=100, deadline=None)
@given(grids(4, 4, 3), st.data())
def test_submatrix_always_overlaps(m, data):
    r0 = data.draw(st.integers(0, m.rows - 1))
    r1 = data.draw(st.integers(r0 + 1, m.rows))
    c0 = data.draw(st.integers(0, m.cols - 1))
    c1 = data.draw(st.integers(c0 + 1, m.cols))
    sub = Matrix(m.block(r0, r1, c0, c1))
    assert overlap_by_partition(m, sub, self_test=False) is not None
    assert overlap_by_translation(m, sub, self_test=False) is not None


class TestValidateSet:
    def test_submatrix_invalid(self):
        r = validate_matrix_set([A, Matrix.of(["103", "210"])])
        assert "overlap" in r.kinds()
        v = [v for v in r.violations if v.kind == "overlap"][0]
        assert v.witness.check(*v.subjects)

    def test_singleton_self_overlap(self):
        r = validate_matrix_set([Matrix.of(["11", "11"])])
        assert r.kinds() == ["self_overlap"]

    def test_order_independent(self):
        ms = [A, Matrix.of(["11", "11"]), Matrix.of(["103", "210"]), Matrix.of(["123", "011", "103"])]
        assert validate_matrix_set(ms) == validate_matrix_set(ms[::-1])

    def test_duplicates_structural(self):
        r = validate_matrix_set([A, Matrix(A.entries)])
        assert r.structural and not r.ok

    @pytest.mark.parametrize("method", ["translation", "partition", "both"])
    def test_methods(self, method):
        ms = [Matrix.of(["110", "320"]), Matrix.of(["22000", "33000"])]
        assert validate_matrix_set(ms, method=method).ok

    def test_bad_method(self):
        with pytest.raises(ValueError):
            validate_matrix_set([A], method="nope")
