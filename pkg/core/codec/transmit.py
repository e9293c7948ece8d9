"""
Running a feedback scheme over a channel session, and checking it against
every noise schedule the machine allows.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Protocol, Sequence, Tuple

import numpy as np

from core.channel.machine import NoiseMachine
from core.channel.session import ChannelSession, open_session, step
from core.channel.symbols import Word, from_digits, sub_words, to_digits
from core.codec.scheme import FeedbackScheme, StageKind
from core.config.constants import ENUMERATION_CAP
from core.oracle.noise import enumerate_noise

log = logging.getLogger(__name__)


# ============================================================================
# Noise schedules
# ============================================================================

class NoiseSchedule(Protocol):
    """Noise source for one transmission; it may look at the true state."""

    initial_state: int

    def next_noise(self, t: int, state: int) -> int:
        ...


class FixedSchedule:
    """Replays a given noise sequence."""

    def __init__(self, initial_state: int, noise: Sequence[int]):
        self.initial_state = initial_state
        self.noise = tuple(noise)

    def next_noise(self, t: int, state: int) -> int:
        if t >= len(self.noise):
            raise ValueError(f"Noise schedule has {len(self.noise)} symbols; use {t} needs more")
        return self.noise[t]

    def __repr__(self) -> str:
        return f"FixedSchedule(s0={self.initial_state}, z={self.noise})"


class RandomSchedule:
    """Picks a uniformly random feasible noise symbol at every use."""

    def __init__(self, machine: NoiseMachine, initial_state: int = 0, seed: Optional[int] = None):
        self.machine = machine
        self.initial_state = initial_state
        self.rng = np.random.default_rng(seed)

    def next_noise(self, t: int, state: int) -> int:
        out = self.machine.out_edges(state)
        return out[int(self.rng.integers(len(out)))].noise


def exhaustive_schedules(machine: NoiseMachine, length: int,
                         cap: int = ENUMERATION_CAP) -> Iterator[FixedSchedule]:
    """Every (initial state, feasible noise sequence) pair of the given length."""
    for s0 in machine.states:
        for z in enumerate_noise(machine, s0, length, cap=cap):
            yield FixedSchedule(s0, z)


# ============================================================================
# Transmission
# ============================================================================

@dataclass(frozen=True)
class TransmitResult:
    message: int
    decoded: int
    uses: int
    session: ChannelSession

    @property
    def ok(self) -> bool:
        return self.decoded == self.message


def _send(session: ChannelSession, schedule: NoiseSchedule, x: Sequence[int]) -> Word:
    received = []
    for symbol in x:
        z = schedule.next_noise(session.uses, session.current_state)
        received.append(step(session, symbol, z))
    return tuple(received)


def encode_and_send(scheme: FeedbackScheme, message: int, schedule: NoiseSchedule) -> Tuple[ChannelSession, List[Word]]:
    """
    Encoder side. Returns the session and the output block of each stage.

    Only the encoder sees the outputs as they arrive (ideal feedback); it
    never reads the noise directly.
    """
    q = scheme.machine.q
    session = open_session(scheme.machine, schedule.initial_state)
    blocks: List[Word] = []
    value = message
    for stage in scheme.stages:
        if stage.kind is StageKind.BASE:
            received = []
            for digit in to_digits(value, scheme.base.size, stage.digits):
                received.extend(_send(session, schedule, scheme.base.words[digit]))
            blocks.append(tuple(received))
            value = 0
        else:
            x = to_digits(value, q, stage.digits)
            y = _send(session, schedule, x)
            blocks.append(y)
            value = scheme.tables[stage.digits].index(sub_words(y, x, q))
    return session, blocks


def decode(scheme: FeedbackScheme, blocks: Sequence[Word]) -> int:
    """
    Decoder side: recover the message from the stage outputs alone, last
    stage first.
    """
    q, n0 = scheme.machine.q, scheme.base.n
    value = 0
    for stage, y in reversed(list(zip(scheme.stages, blocks))):
        if stage.kind is StageKind.BASE:
            digits = [scheme.base_lookup[tuple(y[i:i + n0])] for i in range(0, len(y), n0)]
            value = from_digits(digits, scheme.base.size)
        else:
            z = scheme.tables[stage.digits][value]
            value = from_digits(sub_words(y, z, q), q)
    return value


def transmit(scheme: FeedbackScheme, message: int, schedule: NoiseSchedule) -> TransmitResult:
    """
    Send `message` through a fresh channel session driven by `schedule`.

    scheme: Scheme from build_scheme
    message: Integer in 0..q^k-1
    schedule: Noise source with `initial_state` and `next_noise(t, state)`;
              infeasible symbols raise InfeasibleNoiseError

    Returns a TransmitResult with the decoded message and the channel uses.
    """
    if not 0 <= message < scheme.message_count:
        raise ValueError(f"Message {message} is outside 0..{scheme.message_count - 1}")
    session, blocks = encode_and_send(scheme, message, schedule)
    return TransmitResult(message=message, decoded=decode(scheme, blocks),
                          uses=session.uses, session=session)


# ============================================================================
# Exhaustive verification
# ============================================================================

@dataclass(frozen=True)
class VerificationSummary:
    messages: int
    schedules: int
    transmissions: int
    failures: Tuple[Tuple[int, str], ...]     # (message, schedule) pairs that decoded wrongly
    worst_case_uses: int
    planned_uses: int

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_exhaustive(scheme: FeedbackScheme, cap: int = ENUMERATION_CAP,
                      on_message: Optional[Callable[[int], None]] = None) -> VerificationSummary:
    """
    Transmit every message under every feasible noise schedule and initial
    state of the scheme's length.
    """
    schedules = list(exhaustive_schedules(scheme.machine, scheme.total_uses, cap=cap))
    failures = []
    worst = 0
    for message in range(scheme.message_count):
        for schedule in schedules:
            result = transmit(scheme, message, schedule)
            worst = max(worst, result.uses)
            if not result.ok:
                failures.append((message, repr(schedule)))
        if on_message is not None:
            on_message(message)

    log.debug("verified %d messages x %d schedules, %d failures",
              scheme.message_count, len(schedules), len(failures))
    return VerificationSummary(
        messages=scheme.message_count,
        schedules=len(schedules),
        transmissions=scheme.message_count * len(schedules),
        failures=tuple(failures),
        worst_case_uses=worst,
        planned_uses=scheme.total_uses,
    )
