from fractions import Fraction

import pytest
from hypothesis import given, settings

from conehelly.cone import lineality_space
from conehelly.gens import gen_axis_pairs, gen_simplex_like
from conehelly.posbasis import (
    PositiveBasis,
    ReayPartition,
    extract_positive_basis,
    extract_positive_basis_indices,
    is_positive_basis,
    positive_circuits,
    reay_partition,
    verify_reay,
)
from conehelly.ratlin import SubspaceBasis, VectorSet, span_basis, vec

from conftest import int_vector_sets

F = Fraction


def vs(rows, d):
    return VectorSet.from_rows(rows, d)


def line(d, axis=0):
    basis = [0] * d
    basis[axis] = 1
    return SubspaceBasis(d, (vec(basis),))


class TestIsPositiveBasis:
    def test_opposite_pair(self):
        assert is_positive_basis(vs([[1, 0], [-1, 0]], 2), line(2))

    def test_redundant_triple_is_not_minimal(self):
        assert not is_positive_basis(vs([[1, 0], [-1, 0], [2, 0]], 2), line(2))

    def test_simplex_like_is_positive_basis_of_everything(self):
        for d in (2, 3, 4):
            a = gen_simplex_like(d)
            full = span_basis(a)
            assert full.dim == d
            assert is_positive_basis(a, full)

    def test_wrong_target(self):
        assert not is_positive_basis(vs([[1, 0], [-1, 0]], 2), line(2, axis=1))

    def test_empty_set_is_basis_of_zero_subspace(self):
        assert is_positive_basis(VectorSet(2, ()), SubspaceBasis(2, ()))


class TestExtract:
    def test_drops_unreversible(self):
        pb = extract_positive_basis(vs([[1, 0], [-1, 0], [0, 1]], 2))
        assert pb.elements.vectors == (vec([1, 0]), vec([-1, 0]))
        assert pb.target.dim == 1

    def test_axis_pairs_already_minimal(self):
        for d in (1, 2, 3):
            a = gen_axis_pairs(d, d)
            pb = extract_positive_basis(a)
            assert pb.elements == a

    def test_greedy_deletion_order(self):
        # Trace: e1 deletes (since -e1 and 2e1 still span the line both
        # ways), then nothing else can go.
        pb = extract_positive_basis(vs([[1, 0], [-1, 0], [2, 0], [0, 1]], 2))
        assert pb.elements.vectors == (vec([-1, 0]), vec([2, 0]))

    def test_indices_follow_input_order(self):
        kept = extract_positive_basis_indices(vs([[1, 0], [-1, 0], [2, 0], [0, 1]], 2))
        assert kept == (1, 2)

    @settings(max_examples=80, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=6, bound=2))
    def test_output_is_positive_basis_of_the_lineality(self, a):
        pb = extract_positive_basis(a)  # construction re-certifies
        target = lineality_space(a)
        assert pb.target.dim == target.dim
        assert is_positive_basis(pb.elements, target)
        m = target.dim
        if m == 0:
            assert len(pb) == 0
        else:
            assert m + 1 <= len(pb) <= 2 * m


class TestReayPartition:
    def test_single_pair(self):
        pb = PositiveBasis(target=line(2), elements=vs([[1, 0], [-1, 0]], 2))
        p = reay_partition(pb)
        assert len(p.parts) == 1
        assert verify_reay(p)

    def test_axis_pairs_split_into_pairs(self):
        pb = extract_positive_basis(gen_axis_pairs(2, 2))
        p = reay_partition(pb)
        assert [len(part) for part in p.parts] == [2, 2]
        assert verify_reay(p)
        groups = {frozenset(part.vectors) for part in p.parts}
        assert groups == {
            frozenset({vec([1, 0]), vec([-1, 0])}),
            frozenset({vec([0, 1]), vec([0, -1])}),
        }

    def test_simplex_like_is_one_part(self):
        for d in (2, 3, 4):
            pb = extract_positive_basis(gen_simplex_like(d))
            p = reay_partition(pb)
            assert len(p.parts) == 1
            assert len(p.parts[0]) == d + 1
            assert verify_reay(p)

    def test_mixed_structure(self):
        a = vs([[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [0, 0, -1]], 3)
        pb = extract_positive_basis(a)
        p = reay_partition(pb)
        assert [len(part) for part in p.parts] == [3, 2]
        assert verify_reay(p)

    def test_rejects_non_basis_input(self):
        with pytest.raises(ValueError):
            PositiveBasis(target=line(2), elements=vs([[1, 0], [-1, 0], [2, 0]], 2))

    @settings(max_examples=50, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=6, bound=2))
    def test_partition_always_verifies(self, a):
        pb = extract_positive_basis(a)
        p = reay_partition(pb)
        assert verify_reay(p)
        assert sorted(p.union().vectors) == sorted(pb.elements.vectors)
        # prefix dimension grows at least linearly in the part count
        prefix = []
        for j, part in enumerate(p.parts, start=1):
            prefix.extend(part.vectors)
            assert span_basis(VectorSet(a.ambient_dim, tuple(prefix))).dim >= j


class TestVerifyReay:
    def test_bad_split_rejected(self):
        p = ReayPartition(2, (vs([[1, 0], [0, 1]], 2), vs([[-1, 0], [0, -1]], 2)))
        assert not verify_reay(p)

    def test_single_part_of_non_basis_rejected(self):
        p = ReayPartition(2, (vs([[1, 0], [0, 1]], 2),))
        assert not verify_reay(p)

    def test_size_ordering_enforced(self):
        p = ReayPartition(3, (
            vs([[0, 0, 1], [0, 0, -1]], 3),
            vs([[1, 0, 0], [0, 1, 0], [-1, -1, 0]], 3),
        ))
        assert not verify_reay(p)

    def test_undersized_part_rejected(self):
        p = ReayPartition(2, (vs([[1, 0]], 2),))
        assert not verify_reay(p)

    def test_empty_partition_is_valid(self):
        assert verify_reay(ReayPartition(2, ()))


class TestCircuits:
    def test_opposite_pair_is_a_circuit(self):
        a = vs([[1, 0], [-1, 0], [0, 1]], 2)
        assert positive_circuits(a) == (0b011,)

    def test_simplex_like_single_circuit(self):
        a = gen_simplex_like(2)
        assert positive_circuits(a) == (0b111,)

    def test_duplicate_vectors_are_not_a_circuit(self):
        a = vs([[1, 0], [1, 0]], 2)
        assert positive_circuits(a) == ()

    def test_scaled_opposites(self):
        a = vs([[2, 0], [-3, 0]], 2)
        assert positive_circuits(a) == (0b11,)
