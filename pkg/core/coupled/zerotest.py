"""
Zero-capacity decision procedure.

The zero-error capacity (with or without feedback) is zero iff every
difference sequence d is carried by some walk on the coupled graph. Walks may
start at any vertex (i, j), i != j included, since the decoder knows neither
initial state. Equivalently, the subset automaton started from the full vertex
set never reaches the empty set. Breadth-first search over subsets decides
this and returns the shortest, then lexicographically least, witness.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from core.channel.machine import NoiseMachine
from core.config.constants import SUBSET_CAP
from core.coupled.graph import CoupledGraph, build_coupled
from core.errors import ResourceGuardError

log = logging.getLogger(__name__)


class Verdict(str, Enum):
    CAPACITY_ZERO = "CapacityZero"
    CAPACITY_POSITIVE = "CapacityPositive"


@dataclass(frozen=True)
class ZeroTestVerdict:
    verdict: Verdict
    witness: Optional[Tuple[int, ...]]   # present iff CapacityPositive
    subsets_explored: int

    @property
    def positive(self) -> bool:
        return self.verdict is Verdict.CAPACITY_POSITIVE


def _path(parent: Dict[int, Tuple[int, int]], mask: int) -> Tuple[int, ...]:
    symbols = []
    while parent[mask] is not None:
        mask, d = parent[mask]
        symbols.append(d)
    return tuple(reversed(symbols))


def zero_capacity_test(machine: NoiseMachine, subset_cap: int = SUBSET_CAP,
                       coupled: Optional[CoupledGraph] = None) -> ZeroTestVerdict:
    """
    Decide whether the zero-error capacity of `machine` is zero.

    machine: Validated noise machine
    subset_cap: Max distinct subsets to explore; exceeding it raises ResourceGuardError
    coupled: Prebuilt coupled graph (built from machine if omitted)

    Returns a ZeroTestVerdict; a positive verdict carries an unrealizable witness.
    """
    coupled = coupled or build_coupled(machine)
    start = coupled.full_mask
    parent: Dict[int, Optional[Tuple[int, int]]] = {start: None}
    queue = deque([start])

    while queue:
        mask = queue.popleft()
        for d in range(coupled.q):
            nxt = coupled.advance(mask, d)
            if not nxt:
                witness = _path(parent, mask) + (d,)
                log.debug("witness %s after %d subsets", witness, len(parent))
                return ZeroTestVerdict(Verdict.CAPACITY_POSITIVE, witness, len(parent))
            if nxt in parent:
                continue
            if len(parent) >= subset_cap:
                raise ResourceGuardError("subset_cap", subset_cap)
            parent[nxt] = (mask, d)
            queue.append(nxt)

    log.debug("subset family closed after %d subsets", len(parent))
    return ZeroTestVerdict(Verdict.CAPACITY_ZERO, None, len(parent))
