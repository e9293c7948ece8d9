"""
Stochastic (Markov) parametrizations of a noise machine and the ordinary
feedback capacity C_f = log q - H(Z).

Probabilities sit on the machine's edges. Each edge emits a fixed noise
symbol, so the noise entropy rate equals the entropy rate of the edge process.
"""

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np
from scipy.stats import entropy

from core.channel.machine import Edge, NoiseMachine
from core.config.constants import STOCHASTIC_TOL
from core.errors import ParameterError

EdgeKey = Union[Edge, Tuple[int, int, int]]


@dataclass(frozen=True)
class MarkovChannel:
    machine: NoiseMachine
    probs: Tuple[float, ...]      # aligned with machine.edges

    def prob(self, edge: EdgeKey) -> float:
        edge = edge if isinstance(edge, Edge) else Edge(*edge)
        return self.probs[self.machine.edges.index(edge)]

    def as_dict(self) -> Dict[Edge, float]:
        return dict(zip(self.machine.edges, self.probs))


def markov_channel(machine: NoiseMachine, prob: Mapping[EdgeKey, float]) -> MarkovChannel:
    """
    Attach probabilities to every edge of `machine`.

    prob: Edge (or (from, to, noise) triple) -> probability; every edge needs a
          strictly positive value and each state's outgoing values must sum to 1.
    """
    keyed = {(k if isinstance(k, Edge) else Edge(*k)): float(v) for k, v in prob.items()}
    unknown = set(keyed) - set(machine.edges)
    if unknown:
        raise ParameterError(f"Probabilities given for edges not in the machine: {sorted(unknown)}")

    probs = []
    for edge in machine.edges:
        if edge not in keyed:
            raise ParameterError(f"No probability for edge {edge}")
        if not keyed[edge] > 0.0:
            raise ParameterError(f"Edge {edge} has probability {keyed[edge]}; structural edges need p > 0")
        probs.append(keyed[edge])

    for state in machine.states:
        total = sum(keyed[e] for e in machine.out_edges(state))
        if abs(total - 1.0) > STOCHASTIC_TOL:
            raise ParameterError(f"Outgoing probabilities of state {state} sum to {total!r}, not 1")
    return MarkovChannel(machine=machine, probs=tuple(probs))


def transition_matrix(mc: MarkovChannel) -> np.ndarray:
    """P[i][j] = total probability of edges i -> j."""
    n = mc.machine.num_states
    P = np.zeros((n, n))
    for edge, p in zip(mc.machine.edges, mc.probs):
        P[edge.source, edge.target] += p
    return P


def stationary_distribution(mc: MarkovChannel) -> np.ndarray:
    """Solve pi P = pi with sum(pi) = 1 (one balance equation replaced by the sum)."""
    P = transition_matrix(mc)
    n = P.shape[0]
    system = P.T - np.eye(n)
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    try:
        return np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise ParameterError("Stationary distribution is not unique; the chain is not irreducible") from exc


def entropy_rate(mc: MarkovChannel) -> float:
    """
    H(Z) = sum_s pi_s * H(P(s, .)) in bits per channel use.
    """
    pi = stationary_distribution(mc)
    rate = 0.0
    for state in mc.machine.states:
        row = [mc.probs[mc.machine.edges.index(e)] for e in mc.machine.out_edges(state)]
        rate += pi[state] * entropy(row, base=2)
    return float(rate)


def feedback_capacity(mc: MarkovChannel) -> float:
    """Ordinary feedback capacity log2 q - H(Z)."""
    return math.log2(mc.machine.q) - entropy_rate(mc)


def sample_path(mc: MarkovChannel, n: int, s0: int = 0,
                seed: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw n steps of the chain from s0.

    Returns (edge indices, noise symbols), both of length n.
    """
    rng = np.random.default_rng(seed)
    machine = mc.machine
    choices = {}
    for state in machine.states:
        out = machine.out_edges(state)
        idx = np.array([machine.edges.index(e) for e in out])
        choices[state] = (idx, np.cumsum([mc.probs[i] for i in idx]))

    edge_ids = np.empty(n, dtype=np.int64)
    noise = np.empty(n, dtype=np.int64)
    state = s0
    uniforms = rng.random(n)
    for t in range(n):
        idx, cumulative = choices[state]
        pick = min(int(np.searchsorted(cumulative, uniforms[t], side="right")), len(idx) - 1)
        edge = machine.edges[idx[pick]]
        edge_ids[t] = idx[pick]
        noise[t] = edge.noise
        state = edge.target
    return edge_ids, noise


def empirical_entropy_rate(mc: MarkovChannel, steps: int, s0: int = 0,
                           seed: Optional[int] = None) -> float:
    """Monte-Carlo estimate -(1/n) sum log2 P(edge_t) along one long path."""
    edge_ids, _ = sample_path(mc, steps, s0=s0, seed=seed)
    probs = np.asarray(mc.probs)[edge_ids]
    return float(-np.log2(probs).mean())
