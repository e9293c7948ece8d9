"""
Exact maximum zero-error codebooks.

A codebook is an independent set of the confusability graph on all q^n
input words. That graph is a Cayley graph (adjacency depends only on the
difference x' ⊖ x), so some maximum codebook contains the all-zero word; the
lexicographically least one always does. The search fixes the zero word and
looks for a maximum clique among the words compatible with it, in the
complement graph, by branch and bound with a greedy-coloring upper bound.

Vertex sets are Python int bitmasks over candidate positions.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.channel.machine import NoiseMachine
from core.channel.symbols import Word, sub_words, word_at, word_index
from core.config.constants import CODEBOOK_CAP
from core.coupled.graph import CoupledGraph, build_coupled
from core.oracle.confusability import confusable, realizable_differences

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Codebook:
    n: int
    q: int
    words: Tuple[Word, ...]      # sorted lexicographically

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def rate(self) -> float:
        """log2 |words| / n bits per channel use."""
        return math.log2(self.size) / self.n if self.n else 0.0


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _coloring_bound(candidates: int, compat: List[int]) -> int:
    # each color class is an independent set of the compatibility graph, so a
    # clique uses at most one vertex per class
    colors = 0
    left = candidates
    while left:
        colors += 1
        open_ = left
        while open_:
            v = _lowest(open_)
            open_ &= ~compat[v] & ~(1 << v)
            left &= ~(1 << v)
    return colors


class _CliqueSearch:
    """Lexicographically first maximum clique."""

    def __init__(self, compat: List[int]):
        self.compat = compat
        self.best: List[int] = []
        self.nodes = 0

    def run(self, candidates: int) -> List[int]:
        self._expand([], candidates)
        return self.best

    def _expand(self, clique: List[int], candidates: int) -> None:
        self.nodes += 1
        if len(clique) > len(self.best):
            self.best = clique
        while candidates:
            if len(clique) + _coloring_bound(candidates, self.compat) <= len(self.best):
                return
            v = _lowest(candidates)
            candidates &= ~(1 << v)
            self._expand(clique + [v], candidates & self.compat[v])


def max_codebook(machine: NoiseMachine, n: int, cap: int = CODEBOOK_CAP,
                 coupled: Optional[CoupledGraph] = None) -> Codebook:
    """
    Largest set of length-n inputs that no noise can confuse.

    machine: Validated noise machine
    n: Blocklength (>= 1)
    cap: Upper limit on q^n; larger requests raise ResourceGuardError

    Returns the lexicographically least maximum Codebook.
    """
    if n < 1:
        raise ValueError("Blocklength must be at least 1")
    coupled = coupled or build_coupled(machine)
    bad = realizable_differences(coupled, n, cap=cap)

    # words compatible with the zero word, in index (= lexicographic) order
    positions = np.flatnonzero(~bad)
    q = machine.q
    words = [word_at(int(w), q, n) for w in positions]

    compat = [0] * len(positions)
    for i, j in combinations(range(len(positions)), 2):
        if not bad[word_index(sub_words(words[j], words[i], q), q)]:
            compat[i] |= 1 << j
            compat[j] |= 1 << i

    search = _CliqueSearch(compat)
    chosen = search.run((1 << len(positions)) - 1)
    log.debug("n=%d: %d candidates, %d search nodes, codebook size %d",
              n, len(positions), search.nodes, len(chosen) + 1)

    codebook = [(0,) * n] + [words[i] for i in chosen]
    return Codebook(n=n, q=q, words=tuple(sorted(codebook)))


def is_zero_error_codebook(machine: NoiseMachine, words: Sequence[Sequence[int]],
                           coupled: Optional[CoupledGraph] = None) -> bool:
    """True iff no two distinct words in `words` are confusable."""
    coupled = coupled or build_coupled(machine)
    unique = sorted({tuple(w) for w in words})
    return not any(confusable(machine, a, b, coupled=coupled) for a, b in combinations(unique, 2))
