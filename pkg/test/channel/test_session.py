"""
Unit tests for channel sessions and word arithmetic
In core/channel/session.py and core/channel/symbols.py
"""

import pytest

from core import (
    InfeasibleNoiseError,
    LengthMismatchError,
    add_words,
    all_words,
    digits_needed,
    from_digits,
    open_session,
    render_transcript,
    step,
    sub_words,
    to_digits,
)


# ============================================================================
# step Tests
# ============================================================================

class TestStep:
    """Tests for the step function"""

    # --- Basic Cases (4) ---

    def test_output_is_sum_mod_q(self, fig2):
        """Test y = x + z (mod q)"""
        session = open_session(fig2, 0)
        assert step(session, 2, 1) == 0

    def test_follows_noise_edge(self, fig2):
        """Test that the state moves along the edge labeled z"""
        session = open_session(fig2, 0)
        step(session, 0, 1)

        assert session.current_state == 1

    def test_transcript_records_use(self, fig2):
        """Test that each use lands in the transcript"""
        session = open_session(fig2, 0)
        step(session, 1, 1)
        step(session, 1, 0)
        use = session.transcript[0]

        assert session.uses == 2
        assert (use.x, use.z, use.y, use.state, use.next_state) == (1, 1, 2, 0, 1)
        assert session.outputs() == [2, 1]

    def test_render_transcript(self, fig2):
        """Test the line-oriented transcript format"""
        session = open_session(fig2, 0)
        step(session, 1, 1)
        lines = render_transcript(session).splitlines()

        assert lines[0] == "# t x z y state next_state"
        assert lines[1] == "0 1 1 2 0 1"

    # --- Edge Cases (3) ---

    def test_infeasible_noise(self, fig2):
        """Test that a label not leaving the state raises"""
        session = open_session(fig2, 1)
        with pytest.raises(InfeasibleNoiseError) as info:
            step(session, 0, 1)

        assert (info.value.state, info.value.noise) == (1, 1)
        assert session.uses == 0

    def test_input_out_of_range(self, fig2):
        """Test that x must be a channel symbol"""
        with pytest.raises(ValueError):
            step(open_session(fig2, 0), 3, 0)

    def test_bad_initial_state(self, fig2):
        """Test that sessions start in a real state"""
        with pytest.raises(ValueError):
            open_session(fig2, 2)


# ============================================================================
# Symbol helper Tests
# ============================================================================

class TestSymbols:
    """Tests for modulo-q words and base-q digits"""

    # --- Basic Cases (4) ---

    def test_add_and_sub(self):
        """Test that subtraction undoes addition"""
        x, z = (0, 2, 1), (1, 1, 2)
        y = add_words(x, z, 3)

        assert y == (1, 0, 0)
        assert sub_words(y, x, 3) == z

    def test_digits(self):
        """Test most-significant-first digit conversion"""
        assert to_digits(5, 3, 3) == (0, 1, 2)
        assert from_digits((0, 1, 2), 3) == 5

    def test_digits_needed(self):
        """Test smallest t with radix^t >= count"""
        assert [digits_needed(c, 3) for c in (1, 2, 3, 4, 9, 10)] == [0, 1, 1, 2, 2, 3]

    def test_all_words_lexicographic(self):
        """Test that rows come out in lexicographic order"""
        words = all_words(2, 2)
        assert words.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]

    # --- Edge Cases (3) ---

    def test_length_mismatch(self):
        """Test that words of different lengths cannot be combined"""
        with pytest.raises(LengthMismatchError):
            add_words((0, 1), (1,), 2)

    def test_value_too_large(self):
        """Test that a value must fit in the digit count"""
        with pytest.raises(ValueError):
            to_digits(9, 3, 2)

    def test_empty_words(self):
        """Test length-zero words"""
        assert all_words(3, 0).shape == (1, 0)
        assert to_digits(0, 3, 0) == ()
