"""Row stabilizer, column-set map, injectivity audit, full-design witness."""

import itertools
from math import factorial

import numpy as np
import pytest

from munchhausen import (
    RowPermutation,
    WeighingMatrix,
    apply_row_permutation,
    audit_injectivity,
    chain_construction,
    counterexample_full,
    f_image,
    full_matrix,
    identity_assignment,
    stabilizer,
    verify_fast,
    verify_oracle,
    weigh,
)
from munchhausen.proofkit import (
    NoEqualSignRowsError,
    StabilizerLimitError,
    _enumerate_stabilizer,
    column_set,
)


def mat(rows):
    return WeighingMatrix(np.array(rows, dtype=np.int8).reshape(len(rows), -1))


class TestStabilizer:
    def test_two_plus_one_minus(self):
        # outcome [+,+,-] -> 2! * 1!
        M = mat([[0, 1], [1, 0], [-1, -1]])
        assert weigh(M, identity_assignment(2)).render() == "++-"
        assert stabilizer(M).size == 2

    def test_all_distinct_signs(self):
        M = mat([[-1, 0], [0, 0], [0, 1]])
        assert weigh(M, identity_assignment(2)).render() == "-0+"
        assert stabilizer(M).size == 1

    def test_chain_n4(self):
        assert stabilizer(chain_construction(4)).size == 6  # 3!

    def test_pigeonhole_floor(self):
        rng = np.random.default_rng(3)
        for _ in range(60):
            k, n = int(rng.integers(1, 13)), int(rng.integers(1, 7))
            M = WeighingMatrix(rng.integers(-1, 2, size=(k, n)).astype(np.int8))
            assert stabilizer(M).size >= factorial(-(-k // 3))

    def test_members_preserve_outcome(self):
        M = mat([[-1, 1, 0], [0, -1, 1], [1, 0, -1]])
        stab = stabilizer(M)
        out = weigh(M, identity_assignment(3))
        for sigma in _enumerate_stabilizer(stab, M.k):
            assert weigh(apply_row_permutation(M, sigma), identity_assignment(3)) == out

    def test_enumeration_size(self):
        M = chain_construction(4)
        stab = stabilizer(M)
        sigmas = list(_enumerate_stabilizer(stab, M.k))
        assert len(sigmas) == stab.size
        assert len({tuple(s.image) for s in sigmas}) == stab.size


class TestFImage:
    def test_identity_gives_own_columns(self):
        M = chain_construction(3)
        assert f_image(M, RowPermutation([0, 1])) == column_set(M)

    def test_row_swap_changes_column_set(self):
        M = chain_construction(3)
        swapped = f_image(M, RowPermutation([1, 0]))
        assert swapped != column_set(M)
        assert swapped == column_set(apply_row_permutation(M, RowPermutation([1, 0])))

    def test_rejects_non_stabilizer(self):
        M = mat([[-1, 0], [0, 0], [0, 1]])  # outcome -0+, all classes singleton
        with pytest.raises(ValueError):
            f_image(M, RowPermutation([1, 0, 2]))

    def test_duplicate_columns_collapse(self):
        # equal columns collapse in the set representation
        M = mat([[1, 1, -1], [0, 0, 1]])
        assert len(column_set(M)) == 2
        M2 = mat([[1, 1, -1], [1, 1, -1]])  # outcome '00', swap is in the stabilizer
        img = f_image(M2, RowPermutation([1, 0]))
        assert len(img) == 2 < M2.n


class TestAudit:
    def test_full_matrix_collision(self):
        audit = audit_injectivity(full_matrix(4))
        assert not audit.injective
        s1, s2 = audit.collision
        assert s1 != s2

    def test_singleton_stabilizer_vacuous(self):
        M = mat([[-1, 0], [0, 0], [0, 1]])
        assert stabilizer(M).size == 1
        assert audit_injectivity(M).injective

    def test_solver_witnesses_injective(self):
        from munchhausen import sequence

        for r in sequence(4):
            if r.witness.k == 0:
                continue
            assert audit_injectivity(r.witness).injective

    def test_limit(self):
        with pytest.raises(StabilizerLimitError):
            audit_injectivity(full_matrix(4), limit=1)

    def test_collision_implies_ambiguous_2x3(self):
        # contrapositive sweep: no unique design may collide
        for ent in itertools.product((-1, 0, 1), repeat=6):
            M = WeighingMatrix(np.array(ent, dtype=np.int8).reshape(2, 3))
            if verify_fast(M).unique:
                assert audit_injectivity(M).injective


class TestFullMatrix:
    def test_k1(self):
        assert full_matrix(1).entries.tolist() == [[-1, 0, 1]]

    def test_k2_distinct_lexicographic(self):
        M = full_matrix(2)
        codes = list(M.column_codes())
        assert codes == sorted(codes) == list(range(9))

    def test_k4_shape(self):
        M = full_matrix(4)
        assert (M.k, M.n) == (4, 81)
        assert len(set(map(int, M.column_codes()))) == 81

    def test_range(self):
        with pytest.raises(ValueError):
            full_matrix(0)
        with pytest.raises(ValueError):
            full_matrix(9)


class TestCounterexample:
    @pytest.mark.parametrize("k", [4, 5])
    def test_matches_identity_outcome(self, k):
        M = full_matrix(k)
        w = counterexample_full(k)
        assert not w.is_identity()
        assert weigh(M, w) == weigh(M, identity_assignment(M.n))

    def test_certifies_ambiguity(self):
        # constructive version of the exclusion of n = 81 at k = 4
        assert not verify_fast(full_matrix(4)).unique

    def test_small_k_with_equal_signs(self):
        # full k=1 outcome is a single sign; k=2/3 rows all '+': swap exists
        w = counterexample_full(2)
        assert not w.is_identity()

    def test_deterministic(self):
        assert np.array_equal(counterexample_full(4).weights, counterexample_full(4).weights)
