"""
Zero-error feedback schemes.

A scheme moves a message in 0..q^k-1 through a fixed sequence of stages that
encoder and decoder both derive from the machine alone:

  round  send the current value as raw q-ary digits. Feedback tells the
         encoder the noise z that hit them; the next value is the index of z
         in the sorted union of noise sequences of that length.
  base   send the current value as base-|B| digits, one codeword of a
         zero-error base codebook B per digit. Nothing is left to resolve.

Each value of size N is sent either by another round (only when the residual
union is strictly smaller than N) or by base codewords, whichever costs fewer
channel uses; ties go to the round. The plan fixes the number of channel uses,
so every noise schedule takes the same time.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from core.channel.machine import NoiseMachine
from core.channel.symbols import Word, add_words, digits_needed
from core.config.constants import CODEBOOK_CAP, ENUMERATION_CAP, SCHEME_BLOCKLENGTH_CAP, SUBSET_CAP
from core.coupled.graph import build_coupled
from core.coupled.zerotest import zero_capacity_test
from core.errors import CapacityZeroError, ResourceGuardError
from core.oracle.codebook import Codebook, max_codebook
from core.oracle.noise import noise_union
from core.spectral.counts import count_union_sequences

log = logging.getLogger(__name__)

class StageKind(str, Enum):
    ROUND = "round"
    BASE = "base"


@dataclass(frozen=True)
class Stage:
    kind: StageKind
    count: int         # number of values this stage must carry
    digits: int        # q-ary digits (round) or base codewords (base)
    uses: int          # channel uses
    residual: int = 1  # values left after the stage (rounds only)


@dataclass(frozen=True)
class FeedbackScheme:
    machine: NoiseMachine
    k: int
    base: Codebook
    stages: Tuple[Stage, ...]
    # round length -> sorted union of noise sequences of that length
    tables: Dict[int, Tuple[Word, ...]] = field(repr=False)
    # received base block -> codeword index
    base_lookup: Dict[Word, int] = field(repr=False)

    @property
    def message_count(self) -> int:
        return self.machine.q ** self.k

    @property
    def total_uses(self) -> int:
        return sum(stage.uses for stage in self.stages)

    @property
    def base_blocklength(self) -> int:
        return self.base.n


def plan_stages(machine: NoiseMachine, k: int, base_size: int, base_blocklength: int) -> Tuple[Stage, ...]:
    """
    Cheapest stage sequence for q^k messages.

    Union sizes come from count_union_sequences, so planning never enumerates.
    """
    q = machine.q
    unions: Dict[int, int] = {}
    best: Dict[int, Tuple[int, Tuple[Stage, ...]]] = {}

    def union_size(length: int) -> int:
        if length not in unions:
            unions[length] = count_union_sequences(machine, length)
        return unions[length]

    def cheapest(count: int) -> Tuple[int, Tuple[Stage, ...]]:
        if count <= 1:
            return 0, ()
        if count in best:
            return best[count]
        blocks = digits_needed(count, base_size)
        choice = (blocks * base_blocklength,
                  (Stage(StageKind.BASE, count, blocks, blocks * base_blocklength),))
        length = digits_needed(count, q)
        residual = union_size(length)
        if residual < count:
            rest_cost, rest = cheapest(residual)
            if length + rest_cost <= choice[0]:
                choice = (length + rest_cost, (Stage(StageKind.ROUND, count, length, length, residual),) + rest)
        best[count] = choice
        return choice

    cost, stages = cheapest(q ** k)
    log.debug("plan for k=%d: %d uses, %s", k, cost, [(s.kind.value, s.count, s.uses) for s in stages])
    return stages


def build_scheme(machine: NoiseMachine, k: int, blocklength_cap: int = SCHEME_BLOCKLENGTH_CAP,
                 codebook_cap: int = CODEBOOK_CAP, enumeration_cap: int = ENUMERATION_CAP,
                 subset_cap: int = SUBSET_CAP) -> FeedbackScheme:
    """
    Zero-error feedback scheme for k-digit messages.

    machine: Validated noise machine with positive zero-error capacity
    k: Message length in q-ary digits (>= 1)
    blocklength_cap: Longest base blocklength tried

    Returns a FeedbackScheme whose base codebook is the smallest-blocklength
    maximum codebook with at least two words.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    coupled = build_coupled(machine)
    verdict = zero_capacity_test(machine, subset_cap=subset_cap, coupled=coupled)
    if not verdict.positive:
        raise CapacityZeroError(
            "Zero-error capacity is zero: every difference sequence is realizable, "
            "so no two inputs can be told apart; enlarge q or change the machine"
        )

    base = None
    for n0 in range(1, blocklength_cap + 1):
        candidate = max_codebook(machine, n0, cap=codebook_cap, coupled=coupled)
        if candidate.size >= 2:
            base = candidate
            break
    if base is None:
        raise ResourceGuardError("scheme_blocklength_cap", blocklength_cap)

    stages = plan_stages(machine, k, base.size, base.n)
    tables = {
        stage.digits: tuple(noise_union(machine, stage.digits, cap=enumeration_cap))
        for stage in stages if stage.kind is StageKind.ROUND
    }
    base_lookup: Dict[Word, int] = {}
    for z in noise_union(machine, base.n, cap=enumeration_cap):
        for index, word in enumerate(base.words):
            base_lookup[add_words(word, z, machine.q)] = index

    return FeedbackScheme(machine=machine, k=k, base=base, stages=stages,
                          tables=tables, base_lookup=base_lookup)


def achieved_rate(scheme: FeedbackScheme) -> float:
    """k log2 q over the (schedule-independent) number of channel uses."""
    return scheme.k * math.log2(scheme.machine.q) / scheme.total_uses


def rate_profile(machine: NoiseMachine, ks: List[int], **kwargs) -> Dict[int, float]:
    return {k: achieved_rate(build_scheme(machine, k, **kwargs)) for k in ks}
