"""
Exact noise-sequence counts and their Perron bounds.

Counts are computed with Python integers (numpy object arrays), so they are
exact for any length.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from core.channel.machine import NoiseMachine
from core.spectral.perron import SpectralSummary, spectral_summary


def _check_length(n: int) -> None:
    if n < 0:
        raise ValueError(f"Length must be nonnegative, got {n}")


def count_all_noise_sequences(machine: NoiseMachine, n: int) -> List[int]:
    """|Z(s0, n)| for every s0, i.e. the vector A^n 1."""
    _check_length(n)
    A = machine.adjacency().astype(object)
    counts = np.ones(machine.num_states, dtype=object)
    for _ in range(n):
        counts = A.dot(counts)
    return [int(c) for c in counts]


def count_noise_sequences(machine: NoiseMachine, s0: int, n: int) -> int:
    """
    |Z(s0, n)| = zeta^T A^n 1, the number of noise sequences of length n
    from initial state s0.
    """
    if s0 not in machine.states:
        raise ValueError(f"State {s0} is not in 0..{machine.num_states - 1}")
    return count_all_noise_sequences(machine, n)[s0]


def count_union_sequences(machine: NoiseMachine, n: int) -> int:
    """
    |∪_s0 Z(s0, n)|: noise sequences feasible from at least one initial state.

    Counted on the subset automaton started from all states, so sequences
    shared by several initial states are counted once.
    """
    _check_length(n)
    full = frozenset(machine.states)
    layer: Dict[frozenset, int] = {full: 1}
    for _ in range(n):
        nxt: Dict[frozenset, int] = {}
        for subset, ways in layer.items():
            by_label: Dict[int, set] = {}
            for state in subset:
                for edge in machine.out_edges(state):
                    by_label.setdefault(edge.noise, set()).add(edge.target)
            for targets in by_label.values():
                key = frozenset(targets)
                nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return sum(layer.values())


def count_bounds(machine: NoiseMachine, n: int,
                 summary: Optional[SpectralSummary] = None) -> Tuple[float, float]:
    """
    (alpha * lambda^n, beta * lambda^n), the bounds on |Z(s0, n)| for every s0.
    """
    _check_length(n)
    summary = summary or spectral_summary(machine)
    growth = summary.perron_value ** n
    return summary.alpha * growth, summary.beta * growth
