"""Oracle and fast verifier: examples, differential agreement, properties."""

import itertools

import numpy as np
import pytest

from munchhausen import (
    BudgetExceededError,
    RowPermutation,
    VerifyBudget,
    WeighingMatrix,
    apply_row_permutation,
    chain_construction,
    counterexample_full,
    full_matrix,
    identity_assignment,
    trivial_lower,
    verify_fast,
    verify_oracle,
    weigh,
)


def mat(rows):
    return WeighingMatrix(np.array(rows, dtype=np.int8).reshape(len(rows), -1))


def all_matrices(k, n):
    for ent in itertools.product((-1, 0, 1), repeat=k * n):
        yield WeighingMatrix(np.array(ent, dtype=np.int8).reshape(k, n))


class TestOracle:
    def test_n2_unique(self):
        # both assignments: [1,2] -> '+', [2,1] -> '-'
        r = verify_oracle(mat([[-1, 1]]))
        assert r.unique
        assert r.outcome.render() == "+"

    def test_zero_row_ambiguous(self):
        # matching assignments in lex order: (1,2,3), (1,3,2), (2,3,1);
        # smallest non-identity is (1,3,2)
        r = verify_oracle(mat([[-1, 1, 0], [0, 0, 0]]))
        assert not r.unique
        assert list(r.witness.weights) == [1, 3, 2]

    def test_chain_n3_unique(self):
        # only the ascending order yields [+,+] over all 6 assignments
        r = verify_oracle(chain_construction(3))
        assert r.unique
        assert r.outcome.render() == "++"

    def test_witness_is_lex_smallest(self):
        M = mat([[0, 0, 0], [0, 0, 0]])
        r = verify_oracle(M)
        assert list(r.witness.weights) == [1, 3, 2]

    def test_empty_design_single_coin(self):
        M = WeighingMatrix(np.zeros((0, 1), dtype=np.int8))
        assert verify_oracle(M).unique

    def test_rejects_large_n(self):
        with pytest.raises(ValueError):
            verify_oracle(WeighingMatrix(np.zeros((1, 10), dtype=np.int8)))


class TestFast:
    def test_duplicate_columns_short_circuit(self):
        r = verify_fast(mat([[1, 1, -1], [0, 0, 1]]))
        assert not r.unique
        assert list(r.witness.weights) == [2, 1, 3]

    def test_chain_n10_unique(self):
        assert verify_fast(chain_construction(10)).unique

    def test_full_matrix_k4_ambiguous(self):
        r = verify_fast(full_matrix(4))
        assert not r.unique
        # independently constructed witness agrees on the outcome
        w = counterexample_full(4)
        assert weigh(full_matrix(4), w) == r.outcome

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError) as exc:
            verify_fast(chain_construction(9), VerifyBudget(max_nodes=3))
        assert exc.value.nodes > 3 - 1

    def test_empty_design(self):
        assert verify_fast(WeighingMatrix(np.zeros((0, 1), dtype=np.int8))).unique
        r = verify_fast(WeighingMatrix(np.zeros((0, 3), dtype=np.int8)))
        assert not r.unique


class TestAgreement:
    def test_exhaustive_2x3(self):
        for M in all_matrices(2, 3):
            assert verify_oracle(M).unique == verify_fast(M).unique

    def test_witness_soundness_2x3(self):
        for M in all_matrices(2, 3):
            r = verify_fast(M)
            if not r.unique:
                assert not r.witness.is_identity()
                assert weigh(M, r.witness) == r.outcome


class TestProperties:
    def test_row_order_invariance(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            k, n = int(rng.integers(1, 4)), int(rng.integers(2, 6))
            M = WeighingMatrix(rng.integers(-1, 2, size=(k, n)).astype(np.int8))
            sigma = RowPermutation(rng.permutation(k))
            assert verify_fast(M).unique == verify_fast(apply_row_permutation(M, sigma)).unique

    def test_monotone_row_deletion_2x3(self):
        # deleting a weighing can only lose information
        for M in all_matrices(2, 3):
            if verify_fast(M).unique:
                continue
            for drop in (0, 1):
                sub = WeighingMatrix(np.delete(M.entries, drop, axis=0))
                assert not verify_fast(sub).unique

    @pytest.mark.parametrize("n", range(2, 10))
    def test_too_few_weighings_ambiguous(self, n):
        # k < ceil(log3 n) forces two coins into identical roles
        k = trivial_lower(n) - 1
        rng = np.random.default_rng(n)
        for _ in range(20):
            M = WeighingMatrix(rng.integers(-1, 2, size=(max(k, 0), n)).astype(np.int8))
            assert not verify_fast(M).unique

    def test_outcome_is_identity_outcome(self):
        M = mat([[-1, 1, 0], [0, -1, 1]])
        r = verify_fast(M)
        assert r.outcome == weigh(M, identity_assignment(3))
