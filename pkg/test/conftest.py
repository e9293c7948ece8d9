"""
Pytest configuration and fixtures
"""

import pytest
import os
import sys

import numpy as np

# Ensure the project root is in the path for imports
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from core import Edge, NoiseMachine, resolve_machine, validate


def random_machine(seed: int) -> NoiseMachine:
    """
    Seeded valid machine with |S| <= 4 and q <= 4: a directed cycle through
    every state (so it is strongly connected) plus extra edges with distinct
    labels per state.
    """
    rng = np.random.default_rng(seed)
    num_states = int(rng.integers(1, 5))
    q = int(rng.integers(2, 5))
    edges = []
    for state in range(num_states):
        degree = int(rng.integers(1, q + 1))
        labels = rng.choice(q, size=degree, replace=False)
        edges.append(Edge(state, (state + 1) % num_states, int(labels[0])))
        for label in labels[1:]:
            edges.append(Edge(state, int(rng.integers(num_states)), int(label)))
    machine = NoiseMachine(q=q, num_states=num_states, edges=tuple(edges), name=f"random-{seed}")
    assert validate(machine).ok
    return machine


def tribonacci_root(tol: float = 1e-15) -> float:
    """Largest root of x^3 = x^2 + x + 1 by bisection on [1, 2]."""
    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid ** 3 - mid ** 2 - mid - 1 < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


GOLDEN = (1 + 5 ** 0.5) / 2


@pytest.fixture
def fig1():
    """Runs of at most two 1s, q = 3"""
    return resolve_machine("fig1")


@pytest.fixture
def fig2():
    """Isolated 1s, q = 3"""
    return resolve_machine("fig2")


@pytest.fixture
def fig2_binary(fig2):
    """Isolated 1s over the binary alphabet (capacity zero)"""
    return fig2.with_alphabet(2)


@pytest.fixture
def fig6():
    """Gilbert-Elliot support machine, q = 5"""
    return resolve_machine("fig6")


@pytest.fixture
def noiseless():
    """One state, always z = 0, q = 2"""
    return NoiseMachine(q=2, num_states=1, edges=(Edge(0, 0, 0),), name="noiseless")


@pytest.fixture
def corpus(fig1, fig2, fig2_binary, fig6):
    return [fig1, fig2, fig2_binary, fig6]


@pytest.fixture(scope="session")
def random_machines():
    """50 seeded random valid machines"""
    return [random_machine(seed) for seed in range(50)]


@pytest.fixture
def golden():
    return GOLDEN


@pytest.fixture
def tribonacci():
    return tribonacci_root()


@pytest.fixture
def make_random_machine():
    return random_machine
