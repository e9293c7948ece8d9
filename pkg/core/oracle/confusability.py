"""
Confusability of input words.

Two inputs x, x' are confusable when some pair of noise sequences (from any
initial states) maps them to the same output. That happens iff the difference
x' ⊖ x is realizable on the coupled graph, so confusability only depends on
the difference.
"""

from typing import Optional, Sequence

import numpy as np

from core.channel.machine import NoiseMachine
from core.channel.symbols import add_words, sub_words
from core.config.constants import CODEBOOK_CAP
from core.coupled.graph import CoupledGraph, build_coupled, realizable
from core.errors import LengthMismatchError, ResourceGuardError
from core.oracle.noise import noise_union


def _check_lengths(x: Sequence[int], x2: Sequence[int]) -> None:
    if len(x) != len(x2):
        raise LengthMismatchError(f"Inputs have lengths {len(x)} and {len(x2)}")


def confusable(machine: NoiseMachine, x: Sequence[int], x2: Sequence[int],
               coupled: Optional[CoupledGraph] = None) -> bool:
    """True iff x and x2 can produce the same output sequence."""
    _check_lengths(x, x2)
    coupled = coupled or build_coupled(machine)
    return realizable(coupled, sub_words(x2, x, machine.q))


def confusable_by_enumeration(machine: NoiseMachine, x: Sequence[int], x2: Sequence[int]) -> bool:
    """Same question answered by intersecting the two output sets directly."""
    _check_lengths(x, x2)
    noise = noise_union(machine, len(x))
    outputs = {add_words(x, z, machine.q) for z in noise}
    return any(add_words(x2, z, machine.q) in outputs for z in noise)


def realizable_differences(coupled: CoupledGraph, n: int, cap: int = CODEBOOK_CAP) -> np.ndarray:
    """
    Boolean vector over all q^n words (index order): entry i is True iff the
    word with index i is a realizable difference sequence.
    """
    needed = coupled.q ** n
    if needed > cap:
        raise ResourceGuardError("codebook_cap", cap, needed)

    masks = [coupled.full_mask]
    for _ in range(n):
        # word index grows as prev * q + d, so this keeps index order
        masks = [coupled.advance(m, d) if m else 0 for m in masks for d in range(coupled.q)]
    return np.array([bool(m) for m in masks], dtype=bool)
