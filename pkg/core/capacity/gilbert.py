"""
Gilbert-Elliot channel over a q-ary alphabet.

Two hidden states: "good" (noise always 0) and "bad" (noise 1 with
probability r, else 0). Good -> bad with probability p; bad always returns to
good. The same state path can emit several noise sequences, so this is a
hidden Markov model rather than a noise machine; its support is exactly the
set of 0/1 sequences without two consecutive 1s, which the fig6 machine
generates.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.channel.machine import Edge, NoiseMachine
from core.errors import ParameterError

GOOD, BAD = 0, 1


@dataclass(frozen=True)
class GilbertElliotChannel:
    p: float
    r: float
    q: int = 5

    def __post_init__(self):
        for name, value in (("p", self.p), ("r", self.r)):
            if not 0.0 < value < 1.0:
                raise ParameterError(f"{name}={value} must lie strictly between 0 and 1")
        if self.q < 2:
            raise ParameterError("q must be at least 2")

    def sample_noise(self, n: int, seed: Optional[int] = None, initial_state: int = GOOD) -> np.ndarray:
        """Draw n noise symbols starting from `initial_state`."""
        if initial_state not in (GOOD, BAD):
            raise ValueError("initial_state must be 0 (good) or 1 (bad)")
        rng = np.random.default_rng(seed)
        draws = rng.random((n, 2))
        noise = np.zeros(n, dtype=np.int64)
        state = initial_state
        for t in range(n):
            if state == BAD:
                noise[t] = int(draws[t, 0] < self.r)
                state = GOOD
            else:
                state = BAD if draws[t, 1] < self.p else GOOD
        return noise

    def sample_output(self, x: np.ndarray, seed: Optional[int] = None) -> np.ndarray:
        """y = x + z (mod q) for one sampled noise sequence."""
        x = np.asarray(x, dtype=np.int64)
        return (x + self.sample_noise(len(x), seed=seed)) % self.q

    def topological_machine(self) -> NoiseMachine:
        """Noise machine with the same set of noise sequences."""
        edges = (Edge(0, 0, 0), Edge(0, 1, 1), Edge(1, 0, 0))
        return NoiseMachine(q=self.q, num_states=2, edges=edges, name="gilbert-elliot")
