"""
Coupled graph: the tensor product of a noise machine with itself.

Vertex (i, j) pairs the states of two copies of the channel. An edge
(i, j) -> (k, m) carries d = z ⊖ z' (mod q) when i -> k emits z and j -> m
emits z'. Vertex (i, j) has index i * |S| + j; vertex subsets are int bitmasks
over those indices (Python ints, so any |S| works).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Set, Tuple

import numpy as np

from core.channel.machine import NoiseMachine

Vertex = Tuple[int, int]


@dataclass(frozen=True, order=True)
class CoupledEdge:
    source: Vertex
    target: Vertex
    label: int


@dataclass(frozen=True)
class CoupledGraph:
    q: int
    num_states: int
    edges: Tuple[CoupledEdge, ...]
    # successors[label][vertex index] -> bitmask of target vertices
    successors: Tuple[Tuple[int, ...], ...] = field(repr=False)
    _cache: Dict[Tuple[int, int], int] = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def num_vertices(self) -> int:
        return self.num_states * self.num_states

    @property
    def full_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    def index(self, vertex: Vertex) -> int:
        return vertex[0] * self.num_states + vertex[1]

    def vertex(self, index: int) -> Vertex:
        return divmod(index, self.num_states)

    def out_labels(self, vertex: Vertex) -> Set[int]:
        u = self.index(vertex)
        return {d for d in range(self.q) if self.successors[d][u]}

    def advance(self, mask: int, d: int) -> int:
        """Subset successor: vertices reachable from `mask` by one edge labeled d."""
        key = (mask, d)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        row = self.successors[d]
        result, rest = 0, mask
        while rest:
            low = rest & -rest
            result |= row[low.bit_length() - 1]
            rest ^= low
        self._cache[key] = result
        return result

    def mask_of(self, vertices: Iterable[Vertex]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return mask

    def vertices_of(self, mask: int) -> List[Vertex]:
        return [self.vertex(i) for i in range(self.num_vertices) if mask >> i & 1]

    def kron_adjacency(self) -> np.ndarray:
        """0/1 adjacency of the unlabeled coupled graph."""
        matrix = np.zeros((self.num_vertices, self.num_vertices), dtype=np.int64)
        for edge in self.edges:
            matrix[self.index(edge.source), self.index(edge.target)] = 1
        return matrix


def build_coupled(machine: NoiseMachine) -> CoupledGraph:
    """
    Build the coupled graph; parallel edges with equal (source, target, label)
    are merged.
    """
    q, n = machine.q, machine.num_states
    found = set()
    for first in machine.edges:
        for second in machine.edges:
            found.add(CoupledEdge(
                source=(first.source, second.source),
                target=(first.target, second.target),
                label=(first.noise - second.noise) % q,
            ))
    edges = tuple(sorted(found))

    rows = [[0] * (n * n) for _ in range(q)]
    for edge in edges:
        u = edge.source[0] * n + edge.source[1]
        v = edge.target[0] * n + edge.target[1]
        rows[edge.label][u] |= 1 << v
    return CoupledGraph(q=q, num_states=n, edges=edges, successors=tuple(tuple(r) for r in rows))


def realizable(coupled: CoupledGraph, d: Sequence[int]) -> bool:
    """
    True iff some walk, starting at any vertex, carries the label sequence d.
    """
    mask = coupled.full_mask
    for symbol in d:
        if not 0 <= symbol < coupled.q:
            raise ValueError(f"Difference symbol {symbol} is outside 0..{coupled.q - 1}")
        mask = coupled.advance(mask, symbol)
        if not mask:
            return False
    return True
