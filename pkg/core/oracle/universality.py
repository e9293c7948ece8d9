"""
Direct check of the zero-capacity criterion: try every difference sequence up
to a length bound and compare with the subset-automaton verdict.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from core.channel.machine import NoiseMachine
from core.config.constants import ENUMERATION_CAP, ORACLE_MAX_LEN
from core.coupled.graph import CoupledGraph, build_coupled
from core.coupled.zerotest import Verdict, ZeroTestVerdict, zero_capacity_test
from core.errors import ResourceGuardError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniversalityResult:
    max_len: int
    sequences_checked: int
    counterexample: Optional[Tuple[int, ...]]    # shortest, then lexicographically least
    verdict: Verdict
    witness: Optional[Tuple[int, ...]]
    agrees: bool

    @property
    def all_realizable(self) -> bool:
        return self.counterexample is None


def _shortest_unrealizable(coupled: CoupledGraph, max_len: int) -> Tuple[Optional[Tuple[int, ...]], int]:
    # layer holds (subset, sequence) for every realizable sequence of the current
    # length in lexicographic order
    layer = [(coupled.full_mask, ())]
    checked = 0
    for _ in range(max_len):
        nxt = []
        for mask, prefix in layer:
            for d in range(coupled.q):
                checked += 1
                target = coupled.advance(mask, d)
                if not target:
                    return prefix + (d,), checked
                nxt.append((target, prefix + (d,)))
        layer = nxt
    return None, checked


def universality_oracle(machine: NoiseMachine, max_len: int = ORACLE_MAX_LEN,
                        cap: int = ENUMERATION_CAP,
                        verdict: Optional[ZeroTestVerdict] = None) -> UniversalityResult:
    """
    Check every difference sequence of length 1..max_len for realizability.

    The brute-force search can only refute CapacityZero, so agreement means:
    CapacityZero finds no counterexample; CapacityPositive finds exactly the
    zero test's witness when it is short enough, and nothing otherwise.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    needed = machine.q ** max_len
    if needed > cap:
        raise ResourceGuardError("enumeration_cap", cap, needed)

    coupled = build_coupled(machine)
    verdict = verdict or zero_capacity_test(machine, coupled=coupled)
    counterexample, checked = _shortest_unrealizable(coupled, max_len)

    if verdict.positive and len(verdict.witness) <= max_len:
        agrees = counterexample == verdict.witness
    else:
        agrees = counterexample is None
    if not agrees:
        log.warning("universality oracle disagrees: counterexample %s, verdict %s witness %s",
                    counterexample, verdict.verdict.value, verdict.witness)

    return UniversalityResult(
        max_len=max_len,
        sequences_checked=checked,
        counterexample=counterexample,
        verdict=verdict.verdict,
        witness=verdict.witness,
        agrees=agrees,
    )
