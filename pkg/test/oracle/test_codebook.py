"""
Unit tests for confusability and maximum zero-error codebooks
In core/oracle/confusability.py and core/oracle/codebook.py
"""

import itertools

import pytest

from core import (
    LengthMismatchError,
    ResourceGuardError,
    build_coupled,
    capacity_report,
    confusable,
    confusable_by_enumeration,
    is_zero_error_codebook,
    max_codebook,
    realizable_differences,
)


# ============================================================================
# Confusability Tests
# ============================================================================

class TestConfusable:
    """Tests for the two confusability oracles"""

    # --- Basic Cases (4) ---

    def test_equal_words(self, fig2):
        """Test that a word is confusable with itself"""
        assert confusable(fig2, (0, 1), (0, 1))

    def test_single_symbol(self, fig2):
        """Test that neighbouring symbols collide at n = 1"""
        assert confusable(fig2, (0,), (1,))

    def test_isolated_errors_separate(self, fig2):
        """Test that 00 and 11 cannot be confused without consecutive errors"""
        assert not confusable(fig2, (0, 0), (1, 1))
        assert not confusable_by_enumeration(fig2, (0, 0), (1, 1))

    def test_oracles_agree(self, fig1, fig2, fig6):
        """Test coupled-graph realizability against output-set intersection"""
        for machine, max_n in ((fig1, 3), (fig2, 3), (fig6, 2)):
            coupled = build_coupled(machine)
            for n in range(1, max_n + 1):
                words = list(itertools.product(range(machine.q), repeat=n))
                for x, x2 in itertools.product(words, repeat=2):
                    assert confusable(machine, x, x2, coupled=coupled) == confusable_by_enumeration(machine, x, x2)

    # --- Edge Cases (3) ---

    def test_length_mismatch(self, fig2):
        """Test that inputs must have equal length"""
        with pytest.raises(LengthMismatchError):
            confusable(fig2, (0,), (0, 0))

    def test_difference_vector(self, fig2):
        """Test the realizable share of length-2 differences"""
        bad = realizable_differences(build_coupled(fig2), 2)

        assert bad.shape == (9,)
        assert int(bad.sum()) == 7
        assert not bad[1 * 3 + 1] and not bad[2 * 3 + 2]

    def test_difference_guard(self, fig6):
        """Test that q^n above the cap raises"""
        with pytest.raises(ResourceGuardError):
            realizable_differences(build_coupled(fig6), 6, cap=4096)


# ============================================================================
# max_codebook Tests
# ============================================================================

class TestMaxCodebook:
    """Tests for the max_codebook function"""

    # --- Basic Cases (4) ---

    def test_fig2_sizes(self, fig2):
        """Test sizes 1 and 3 at n = 1 and 2"""
        assert max_codebook(fig2, 1).size == 1
        assert max_codebook(fig2, 2).words == ((0, 0), (1, 1), (2, 2))

    def test_fig6_first_block(self, fig6):
        """Test the lexicographically least pair at n = 1"""
        assert max_codebook(fig6, 1).words == ((0,), (2,))

    def test_fig6_pentagon(self, fig6):
        """Test at least Shannon's five pentagon words at n = 2"""
        codebook = max_codebook(fig6, 2)

        assert codebook.size >= 5
        assert is_zero_error_codebook(fig6, codebook.words)

    def test_rates_below_c0f(self, fig1, fig2, fig6):
        """Test log2 |C| / n <= C0f on the corpus, and that fig2 gets near its lower bound"""
        for machine, max_n in ((fig1, 4), (fig2, 4), (fig6, 3)):
            c0f = capacity_report(machine).c0f_bits
            for n in range(1, max_n + 1):
                assert max_codebook(machine, n).rate <= c0f + 1e-9

        best = max(max_codebook(fig2, n).rate for n in range(1, 5))
        assert best >= capacity_report(fig2).c0_lower_bits - 0.35

    # --- Edge Cases (3) ---

    def test_capacity_zero(self, fig2_binary):
        """Test that a zero-capacity machine never gets two codewords"""
        for n in range(1, 7):
            assert max_codebook(fig2_binary, n).size == 1

    def test_doubling_never_hurts(self, fig2):
        """Test rate(n) <= rate(2n)"""
        for n in (1, 2):
            assert max_codebook(fig2, n).rate <= max_codebook(fig2, 2 * n).rate + 1e-12

    def test_bad_blocklength(self, fig2):
        """Test that n must be positive"""
        with pytest.raises(ValueError):
            max_codebook(fig2, 0)


# ============================================================================
# is_zero_error_codebook Tests
# ============================================================================

class TestIsZeroErrorCodebook:
    """Tests for the is_zero_error_codebook function"""

    # --- Basic Cases (4) ---

    def test_valid(self, fig2):
        """Test the diagonal codebook at n = 2"""
        assert is_zero_error_codebook(fig2, [(0, 0), (1, 1), (2, 2)])

    def test_invalid(self, fig2):
        """Test two words one error apart"""
        assert not is_zero_error_codebook(fig2, [(0, 0), (0, 1)])

    def test_found_codebooks_are_valid(self, fig1, fig2):
        """Test every codebook max_codebook returns"""
        for machine in (fig1, fig2):
            for n in range(1, 4):
                assert is_zero_error_codebook(machine, max_codebook(machine, n).words)

    def test_maximal(self, fig2):
        """Test that no word can join the n = 2 codebook"""
        words = list(max_codebook(fig2, 2).words)
        for extra in itertools.product(range(3), repeat=2):
            if extra not in words:
                assert not is_zero_error_codebook(fig2, words + [extra])

    # --- Edge Cases (3) ---

    def test_single_word(self, fig2):
        """Test that one word is always a codebook"""
        assert is_zero_error_codebook(fig2, [(1, 2)])

    def test_duplicates_ignored(self, fig2):
        """Test that repeated words count once"""
        assert is_zero_error_codebook(fig2, [(0, 0), (0, 0), (1, 1)])

    def test_empty(self, fig2):
        """Test the empty codebook"""
        assert is_zero_error_codebook(fig2, [])
