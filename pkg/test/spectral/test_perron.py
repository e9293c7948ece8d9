"""
Unit tests for the Perron value, topological entropy and exact counts
In core/spectral/perron.py and core/spectral/counts.py
"""

import math

import numpy as np
import pytest

from core import (
    ConvergenceError,
    Edge,
    NoiseMachine,
    adjacency_matrix,
    count_all_noise_sequences,
    count_bounds,
    count_noise_sequences,
    count_union_sequences,
    perron,
    spectral_summary,
    topological_entropy,
)


# ============================================================================
# topological_entropy Tests
# ============================================================================

class TestTopologicalEntropy:
    """Tests for the topological_entropy function"""

    # --- Basic Cases (4) ---

    def test_golden_ratio(self, fig2, golden):
        """Test that isolated errors give log2 of the golden ratio"""
        assert abs(topological_entropy(fig2) - math.log2(golden)) < 1e-9

    def test_tribonacci(self, fig1, tribonacci):
        """Test that runs of at most two errors give the tribonacci constant"""
        summary = spectral_summary(fig1)
        assert abs(summary.perron_value - tribonacci) < 1e-9

    def test_full_shift(self):
        """Test that a state emitting every symbol has entropy log2 q"""
        machine = NoiseMachine(q=4, num_states=1, edges=tuple(Edge(0, 0, z) for z in range(4)))
        assert abs(topological_entropy(machine) - 2.0) < 1e-9

    def test_noiseless(self, noiseless):
        """Test that a single deterministic loop has zero entropy"""
        assert abs(topological_entropy(noiseless)) < 1e-12

    # --- Edge Cases (3) ---

    def test_periodic_graph(self):
        """Test that a periodic two-cycle still converges"""
        machine = NoiseMachine(q=2, num_states=2, edges=(Edge(0, 1, 0), Edge(1, 0, 0)))
        summary = spectral_summary(machine)

        assert abs(summary.perron_value - 1.0) < 1e-9
        assert np.allclose(summary.perron_vector, [1.0, 1.0])

    def test_iteration_cap(self, fig1):
        """Test that hitting the cap raises ConvergenceError"""
        with pytest.raises(ConvergenceError) as info:
            perron(fig1.adjacency(), tol=1e-15, max_iter=2)

        assert info.value.iterations == 2

    def test_vector_normalization(self, fig2, golden):
        """Test that the vector is positive with max component 1"""
        summary = spectral_summary(fig2)

        assert summary.perron_vector.max() == pytest.approx(1.0)
        assert summary.perron_vector.min() > 0
        assert summary.beta == pytest.approx(golden, rel=1e-9)


# ============================================================================
# Count Tests
# ============================================================================

class TestCounts:
    """Tests for exact noise-sequence counts and their bounds"""

    # --- Basic Cases (4) ---

    def test_fig2_counts(self, fig2):
        """Test the Fibonacci counts of fig2 from state 0"""
        assert [count_noise_sequences(fig2, 0, n) for n in range(7)] == [1, 2, 3, 5, 8, 13, 21]

    def test_all_states(self, fig1):
        """Test the count vector of fig1 at n = 2"""
        assert count_all_noise_sequences(fig1, 2) == [4, 3, 2]

    def test_bounds_hold(self, fig1, fig2, fig6):
        """Test alpha lambda^n <= |Z(s0, n)| <= beta lambda^n"""
        for machine in (fig1, fig2, fig6):
            summary = spectral_summary(machine)
            for n in range(11):
                lower, upper = count_bounds(machine, n, summary=summary)
                for count in count_all_noise_sequences(machine, n):
                    assert lower * (1 - 1e-6) <= count <= upper * (1 + 1e-6)

    def test_union_counts(self, fig2):
        """Test that the union over initial states counts shared sequences once"""
        assert [count_union_sequences(fig2, n) for n in range(1, 6)] == [2, 3, 5, 8, 13]

    # --- Edge Cases (3) ---

    def test_length_zero(self, fig1):
        """Test that the empty sequence is counted once"""
        assert count_all_noise_sequences(fig1, 0) == [1, 1, 1]
        assert count_union_sequences(fig1, 0) == 1

    def test_exact_big_counts(self):
        """Test that counts stay exact past 64-bit range"""
        machine = NoiseMachine(q=4, num_states=1, edges=tuple(Edge(0, 0, z) for z in range(4)))
        assert count_noise_sequences(machine, 0, 40) == 4 ** 40

    def test_negative_length(self, fig2):
        """Test that negative lengths are rejected"""
        with pytest.raises(ValueError):
            count_noise_sequences(fig2, 0, -1)


# ============================================================================
# Spectral invariant Tests
# ============================================================================

def _residual(adjacency, lam, v):
    """Max-norm of A v - lambda v."""
    return float(np.abs(adjacency @ v - lam * v).max())


class TestSpectralInvariants:
    """Tests for the Perron residual and the growth of counts"""

    # --- Basic Cases (4) ---

    def test_residual_corpus(self, fig1, fig2, fig6):
        """Test |A v - lambda v| <= 10 tol |v| on the corpus machines"""
        tol = 1e-12
        for machine in (fig1, fig2, fig6):
            A = adjacency_matrix(machine)
            lam, v = perron(A, tol=tol)
            assert _residual(A, lam, v) <= 10 * tol * np.abs(v).max()

    def test_residual_random(self, random_machines):
        """Test the Perron residual bound on seeded random machines"""
        tol = 1e-12
        for machine in random_machines:
            A = adjacency_matrix(machine)
            lam, v = perron(A, tol=tol)
            assert _residual(A, lam, v) <= 10 * tol * np.abs(v).max(), machine.name

    def test_counts_grow_corpus(self, fig1, fig2, fig6):
        """Test count(s0, n + 1) >= count(s0, n) on the corpus machines"""
        for machine in (fig1, fig2, fig6):
            previous = count_all_noise_sequences(machine, 0)
            for n in range(1, 13):
                current = count_all_noise_sequences(machine, n)
                assert all(b >= a for a, b in zip(previous, current))
                previous = current

    def test_counts_grow_random(self, random_machines):
        """Test that counts never shrink with n on seeded random machines"""
        for machine in random_machines:
            previous = count_all_noise_sequences(machine, 0)
            for n in range(1, 13):
                current = count_all_noise_sequences(machine, n)
                assert all(b >= a for a, b in zip(previous, current)), machine.name
                previous = current

    # --- Edge Cases (3) ---

    def test_residual_loose_tolerance(self, fig1):
        """Test that the residual bound scales with a loose tolerance"""
        tol = 1e-6
        A = adjacency_matrix(fig1)
        lam, v = perron(A, tol=tol)

        assert _residual(A, lam, v) <= 10 * tol * np.abs(v).max()

    def test_single_state_exact(self, noiseless):
        """Test a zero residual when one state makes the iteration exact"""
        A = adjacency_matrix(noiseless)
        lam, v = perron(A)

        assert lam == 1.0
        assert _residual(A, lam, v) == 0.0

    def test_union_counts_grow(self, fig1, fig6, random_machines):
        """Test that the union count grows with n and covers every single-state count"""
        for machine in [fig1, fig6] + random_machines[:10]:
            unions = [count_union_sequences(machine, n) for n in range(9)]
            assert all(b >= a for a, b in zip(unions, unions[1:])), machine.name
            for n in range(9):
                assert unions[n] >= max(count_all_noise_sequences(machine, n))
