from fractions import Fraction

import pytest
from hypothesis import given, settings

from conehelly.errors import CapacityError
from conehelly.cone import HalfspaceSystem, lineality_space, max_cone_dim
from conehelly.gens import gen_axis_pairs, gen_example2, gen_simplex_like
from conehelly.helly import (
    HellyBounds,
    Witness,
    bound_h,
    bound_m,
    check_flat_helly,
    check_lineality_hypothesis,
    corollary_check,
    verify_cone_helly,
    witness_lineality_enum,
    witness_lineality_reay,
)
from conehelly.ratlin import VectorSet, vec

from conftest import int_vector_sets
from oracles import oracle_check_hypothesis, oracle_minimal_witness

F = Fraction


def vs(rows, d):
    return VectorSet.from_rows(rows, d)


class TestBounds:
    def test_halfline_bound_is_twice_d(self):
        for d in range(1, 21):
            assert bound_m(1, d) == 2 * d

    def test_top_k(self):
        for d in range(1, 21):
            assert bound_m(d, d) == d + 1

    def test_direct_substitution(self):
        assert bound_m(2, 5) == 8
        assert bound_h(1, 3) == 4
        assert bound_h(3, 4) == 8

    def test_dominated_branch(self):
        assert bound_h(1, 5) == 6  # d+1 beats 2(k+1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            bound_m(0, 3)
        with pytest.raises(ValueError):
            bound_h(4, 3)

    def test_bound_duality(self):
        for d in range(2, 21):
            for k in range(1, d):
                assert bound_m(k, d) == bound_h(d - k, d)

    def test_claim_inequality(self):
        # jk/(j-1) + j <= h(k,d) for 2 <= j <= k+1 <= d+1 <= 21, j-1 <= k
        for d in range(1, 21):
            for k in range(1, d + 1):
                h = bound_h(k, d)
                for j in range(2, k + 2):
                    assert F(j * k, j - 1) + j <= h, (j, k, d)

    def test_bounds_record(self):
        b = HellyBounds.of(2, 5)
        assert (b.m, b.h) == (8, 6)
        with pytest.raises(ValueError):
            HellyBounds(k=2, d=5, m=7, h=6)


class TestWitnessType:
    def test_size_bound_enforced(self):
        with pytest.raises(ValueError):
            Witness(subset_indices=(0, 1, 2), property="x", size_bound=2)


class TestLinealityHypothesis:
    def test_simplex_like_fails_below_top_dimension(self):
        for d in (2, 3, 4):
            a = gen_simplex_like(d)
            for k in range(1, d):
                assert not check_lineality_hypothesis(a, k)
            assert check_lineality_hypothesis(a, d)

    def test_axis_pairs_fail_one_below(self):
        for k in (2, 3):
            a = gen_axis_pairs(k, k)
            assert not check_lineality_hypothesis(a, k - 1)

    def test_trivially_true_when_lineality_small(self):
        a = vs([[1, 0], [0, 1]], 2)
        assert check_lineality_hypothesis(a, 1)

    def test_capacity_cutoff(self):
        a = vs([[1, 0]] * 25, 2)
        with pytest.raises(CapacityError):
            check_lineality_hypothesis(a, 1)

    @settings(max_examples=60, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=5, bound=2))
    def test_matches_direct_subset_scan(self, a):
        for k in range(1, a.ambient_dim + 1):
            cap = min(bound_h(k, a.ambient_dim), len(a))
            assert check_lineality_hypothesis(a, k) == \
                oracle_check_hypothesis(a, k, cap)


class TestWitnessExtractors:
    def test_simplex_like_whole_set(self):
        for d in (2, 3):
            a = gen_simplex_like(d)
            w = witness_lineality_enum(a, d - 1)
            assert w.subset_indices == tuple(range(d + 1))
            assert w.size_bound == bound_h(d - 1, d)

    def test_axis_pairs_need_all_vectors(self):
        for k in (2, 3):
            a = gen_axis_pairs(k, k)
            w = witness_lineality_enum(a, k - 1)
            assert len(w.subset_indices) == 2 * k
            assert 2 * k <= bound_h(k - 1, k)

    def test_reay_witness_on_axis_pairs(self):
        a = gen_axis_pairs(2, 2)
        w = witness_lineality_reay(a, 1)
        assert len(w.subset_indices) == 4

    def test_embedded_pairs_in_three_dims(self):
        a = vs([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]], 3)
        w = witness_lineality_reay(a, 1)
        assert len(w.subset_indices) == 4
        assert bound_h(1, 3) == 4

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            witness_lineality_enum(vs([[1, 0], [-1, 0]], 2), 0)

    def test_rejects_satisfied_conclusion(self):
        with pytest.raises(ValueError):
            witness_lineality_enum(vs([[1, 0], [0, 1]], 2), 1)

    @settings(max_examples=50, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=5, bound=2))
    def test_enum_witness_is_lex_first_minimal(self, a):
        d = a.ambient_dim
        ldim = lineality_space(a).dim
        for k in range(1, d + 1):
            if ldim <= k:
                continue
            w = witness_lineality_enum(a, k)
            expect = oracle_minimal_witness(a, k, bound_h(k, d))
            assert w.subset_indices == expect


class TestConeHelly:
    def test_example1_whole_family_witness(self):
        for d in (2, 3, 4):
            h = HalfspaceSystem(gen_simplex_like(d))
            rep = verify_cone_helly(h, 1)
            assert not rep.conclusion
            assert not rep.hypothesis
            assert rep.witness.subset_indices == tuple(range(d + 1))
            assert d + 1 <= rep.bounds.m == bound_m(1, d)

    def test_example2_meets_bound_exactly(self):
        for d in (3, 5):
            for k in range(1, d + 1):
                h = gen_example2(d, k)
                rep = verify_cone_helly(h, k)
                assert not rep.conclusion
                size = len(rep.witness.subset_indices)
                assert size == 2 * (d - k + 1)
                assert size <= rep.bounds.m

    def test_single_halfspace_all_good(self):
        rep = verify_cone_helly(HalfspaceSystem(vs([[-1, 0]], 2)), 1)
        assert rep.hypothesis and rep.conclusion
        assert rep.witness is None

    def test_k_equals_d(self):
        rep = verify_cone_helly(HalfspaceSystem(vs([[1, 0], [-1, 0]], 2)), 2)
        assert not rep.conclusion
        assert rep.witness is not None
        assert max_cone_dim(HalfspaceSystem(
            vs([[1, 0], [-1, 0]], 2).subset(rep.witness.subset_indices))) < 2

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            verify_cone_helly(HalfspaceSystem(vs([[-1, 0]], 2)), 0)


class TestCorollary:
    def test_example2(self):
        for d in (3, 5):
            for k in range(1, d + 1):
                rep = corollary_check(gen_example2(d, k), k)
                assert rep.rank == k - 1
                assert not rep.global_holds
                assert not rep.subsystems_hold
                assert len(rep.witness.subset_indices) <= rep.bounds.m

    def test_empty_system(self):
        h = HalfspaceSystem(VectorSet(3, ()))
        for k in (1, 2, 3):
            rep = corollary_check(h, k)
            assert rep.rank == 3
            assert rep.global_holds and rep.subsystems_hold
            assert rep.witness is None

    def test_example1(self):
        for d in (2, 3):
            rep = corollary_check(HalfspaceSystem(gen_simplex_like(d)), 1)
            assert rep.rank == 0
            assert rep.witness.subset_indices == tuple(range(d + 1))
            assert d + 1 <= 2 * d or d == 1


class TestFlatHelly:
    def test_independent_normals_witnessed(self):
        h = HalfspaceSystem(vs([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3))
        rep = check_flat_helly(h, 2)
        assert not rep.subspace_conclusion
        assert rep.witness.subset_indices == (0, 1, 2)

    def test_rank_two_normals_hold(self):
        h = HalfspaceSystem(vs([[1, 0, 0], [2, 0, 0], [1, 1, 0]], 3))
        rep = check_flat_helly(h, 2)
        assert rep.normal_rank == 2
        assert rep.subspace_conclusion
        assert rep.all_small_subsets_dependent
        assert rep.witness is None

    def test_example2_rank_consistency(self):
        for d in (3, 4):
            for k in range(1, d + 1):
                h = gen_example2(d, k)
                m = d - k + 1
                rep = check_flat_helly(h, m)
                # rank of the normals is exactly m, so m+1 normals are
                # always dependent and the conclusion holds
                assert rep.normal_rank == m
                assert rep.subspace_conclusion

    def test_k_zero_accepted(self):
        h = HalfspaceSystem(vs([[1, 0]], 2))
        rep = check_flat_helly(h, 0)
        assert not rep.subspace_conclusion
        assert rep.witness.subset_indices == (0,)

    def test_k_zero_empty_system(self):
        rep = check_flat_helly(HalfspaceSystem(VectorSet(2, ())), 0)
        assert rep.subspace_conclusion
        assert rep.all_small_subsets_dependent


class TestTheoremAsProperty:
    @settings(max_examples=60, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=6, bound=2))
    def test_pos_hypothesis_implies_conclusion(self, a):
        for k in range(1, a.ambient_dim + 1):
            if check_lineality_hypothesis(a, k):
                assert lineality_space(a).dim <= k

    @settings(max_examples=60, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=6, bound=2, min_n=1, nonzero=True))
    def test_cone_hypothesis_implies_conclusion(self, a):
        h = HalfspaceSystem(a)
        for k in range(1, a.ambient_dim + 1):
            rep = verify_cone_helly(h, k)
            if rep.hypothesis:
                assert rep.conclusion

    @settings(max_examples=40, deadline=None)
    @given(int_vector_sets(max_d=3, max_n=6, bound=2))
    def test_witness_soundness(self, a):
        d = a.ambient_dim
        ldim = lineality_space(a).dim
        for k in range(1, d + 1):
            if ldim <= k:
                continue
            w_enum = witness_lineality_enum(a, k)
            w_reay = witness_lineality_reay(a, k)
            for w in (w_enum, w_reay):
                assert len(w.subset_indices) <= bound_h(k, d)
                assert lineality_space(a.subset(w.subset_indices)).dim > k
            assert len(w_enum.subset_indices) <= len(w_reay.subset_indices)
