"""
Channel sessions: one noisy channel, stepped one symbol at a time.
"""

from dataclasses import dataclass, field
from typing import List

from core.channel.machine import NoiseMachine
from core.errors import InfeasibleNoiseError


@dataclass(frozen=True)
class ChannelUse:
    x: int
    z: int
    y: int
    state: int          # state before the use
    next_state: int


@dataclass
class ChannelSession:
    """Single-owner mutable channel state; sessions are never shared."""

    machine: NoiseMachine
    current_state: int
    transcript: List[ChannelUse] = field(default_factory=list)

    @property
    def uses(self) -> int:
        return len(self.transcript)

    def outputs(self) -> List[int]:
        return [use.y for use in self.transcript]


def open_session(machine: NoiseMachine, initial_state: int = 0) -> ChannelSession:
    if initial_state not in machine.states:
        raise ValueError(f"Initial state {initial_state} is not in 0..{machine.num_states - 1}")
    return ChannelSession(machine=machine, current_state=initial_state)


def step(session: ChannelSession, x: int, z: int) -> int:
    """
    One channel use: y = x ⊕ z (mod q), following the edge labeled z.

    session: Channel session, advanced in place
    x: Input symbol in 0..q-1
    z: Noise symbol; must label an edge out of the current state

    Returns the output symbol y.
    """
    q = session.machine.q
    if not 0 <= x < q:
        raise ValueError(f"Input symbol {x} is outside 0..{q - 1}")
    edge = session.machine.edge_for(session.current_state, z)
    if edge is None:
        raise InfeasibleNoiseError(session.current_state, z)
    y = (x + z) % q
    session.transcript.append(ChannelUse(x=x, z=z, y=y, state=session.current_state, next_state=edge.target))
    session.current_state = edge.target
    return y


def render_transcript(session: ChannelSession) -> str:
    """
    Line-oriented transcript: a header, then "t x z y state next_state" per use.
    """
    lines = ["# t x z y state next_state"]
    for t, use in enumerate(session.transcript):
        lines.append(f"{t} {use.x} {use.z} {use.y} {use.state} {use.next_state}")
    return "\n".join(lines) + "\n"
