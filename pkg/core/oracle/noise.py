"""
Brute-force noise enumeration and the exact-count cross-check.
"""

from typing import List, Optional, Sequence

import pandas as pd

from core.channel.machine import NoiseMachine
from core.channel.symbols import Word, sub_words
from core.config.constants import ENUMERATION_CAP
from core.errors import ResourceGuardError
from core.spectral.counts import count_all_noise_sequences, count_bounds
from core.spectral.perron import spectral_summary

BOUNDS_RTOL = 1e-6


def _guard(machine: NoiseMachine, n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"Length must be nonnegative, got {n}")
    needed = machine.q ** n
    if needed > cap:
        raise ResourceGuardError("enumeration_cap", cap, needed)


def enumerate_noise(machine: NoiseMachine, s0: int, n: int, cap: int = ENUMERATION_CAP) -> List[Word]:
    """
    Every noise sequence of length n the machine can emit from s0, in
    lexicographic order.

    Walks are expanded in ascending noise order; labels out of a state are
    distinct, so each sequence is produced exactly once and already sorted.
    """
    if s0 not in machine.states:
        raise ValueError(f"State {s0} is not in 0..{machine.num_states - 1}")
    _guard(machine, n, cap)

    found: List[Word] = []
    stack = [(s0, ())]
    while stack:
        state, prefix = stack.pop()
        if len(prefix) == n:
            found.append(prefix)
            continue
        # reversed so the smallest label is popped first
        for edge in reversed(machine.out_edges(state)):
            stack.append((edge.target, prefix + (edge.noise,)))
    return found


def noise_union(machine: NoiseMachine, n: int, cap: int = ENUMERATION_CAP) -> List[Word]:
    """Union of Z(s0, n) over all initial states, sorted and deduplicated."""
    _guard(machine, n, cap)
    union = set()
    for s0 in machine.states:
        union.update(enumerate_noise(machine, s0, n, cap=cap))
    return sorted(union)


def is_feasible_noise(machine: NoiseMachine, z: Sequence[int], s0: Optional[int] = None) -> bool:
    """True iff z can be emitted from s0 (from some state when s0 is None)."""
    current = set(machine.states) if s0 is None else {s0}
    for symbol in z:
        current = {e.target for s in current for e in machine.out_edges(s) if e.noise == symbol}
        if not current:
            return False
    return True


def check_count(machine: NoiseMachine, s0: int, n: int, cap: int = ENUMERATION_CAP) -> bool:
    """Enumerated |Z(s0, n)| equals the matrix-power count."""
    return len(enumerate_noise(machine, s0, n, cap=cap)) == count_all_noise_sequences(machine, n)[s0]


def count_table(machine: NoiseMachine, max_n: int, cap: int = ENUMERATION_CAP) -> pd.DataFrame:
    """
    One row per (s0, n), n = 0..max_n: enumerated and exact counts plus the
    Perron bounds alpha * lambda^n and beta * lambda^n.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    summary = spectral_summary(machine)
    rows = []
    for n in range(max_n + 1):
        exact = count_all_noise_sequences(machine, n)
        lower, upper = count_bounds(machine, n, summary=summary)
        for s0 in machine.states:
            enumerated = len(enumerate_noise(machine, s0, n, cap=cap))
            rows.append({
                "s0": s0,
                "n": n,
                "enumerated": enumerated,
                "exact": exact[s0],
                "lower": lower,
                "upper": upper,
            })

    table = pd.DataFrame(rows)
    table["matches"] = table["enumerated"] == table["exact"]
    slack = BOUNDS_RTOL * table["exact"].astype(float)
    table["within_bounds"] = (table["lower"] - slack <= table["exact"]) & (table["exact"] <= table["upper"] + slack)
    return table


def output_fiber(machine: NoiseMachine, s0: int, y: Sequence[int], cap: int = ENUMERATION_CAP) -> List[Word]:
    """
    Inputs x that can produce output y from s0, i.e. {y ⊖ z : z in Z(s0, n)}.

    x -> z = y ⊖ x is a bijection, so the fiber has exactly |Z(s0, n)| elements.
    """
    noise = enumerate_noise(machine, s0, len(y), cap=cap)
    return sorted(sub_words(y, z, machine.q) for z in noise)
