"""
Perron value and topological entropy of a noise machine.

Power iteration runs on A + I: a strongly connected graph may be periodic, and
plain power iteration then oscillates, while A + I is primitive with the same
Perron vector and Perron value shifted by one.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.channel.machine import NoiseMachine
from core.config.constants import PERRON_MAX_ITER, PERRON_TOL
from core.errors import ConvergenceError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralSummary:
    adjacency: np.ndarray
    perron_value: float
    perron_vector: np.ndarray    # strictly positive, max component 1
    entropy_bits: float
    alpha: float                 # v_min / v_max
    beta: float                  # v_max / v_min


def adjacency_matrix(machine: NoiseMachine) -> np.ndarray:
    return machine.adjacency()


def perron(adjacency: np.ndarray, tol: float = PERRON_TOL,
           max_iter: int = PERRON_MAX_ITER) -> Tuple[float, np.ndarray]:
    """
    Perron value and max-normalized Perron vector of an irreducible matrix.

    adjacency: Square nonnegative irreducible matrix
    tol: Stop once successive normalized iterates differ by less than tol (max-norm)
    max_iter: Iteration cap; exceeding it raises ConvergenceError

    Returns (lambda, v).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = np.asarray(adjacency, dtype=float)
    shifted = A + np.eye(A.shape[0])

    v = np.ones(A.shape[0])
    for iteration in range(1, max_iter + 1):
        w = shifted @ v
        w /= w.max()
        change = np.abs(w - v).max()
        v = w
        if change < tol:
            break
    else:
        raise ConvergenceError(max_iter, tol)

    mu = float((shifted @ v).max())
    log.debug("power iteration converged after %d iterations", iteration)
    return mu - 1.0, v


def spectral_summary(machine: NoiseMachine, tol: float = PERRON_TOL,
                     max_iter: int = PERRON_MAX_ITER) -> SpectralSummary:
    A = adjacency_matrix(machine)
    lam, v = perron(A, tol=tol, max_iter=max_iter)
    v_min = float(v.min())
    return SpectralSummary(
        adjacency=A,
        perron_value=lam,
        perron_vector=v,
        entropy_bits=float(np.log2(lam)),
        alpha=v_min,
        beta=1.0 / v_min,
    )


def topological_entropy(machine: NoiseMachine, tol: float = PERRON_TOL,
                        max_iter: int = PERRON_MAX_ITER) -> float:
    """h(Z) = log2 of the Perron value, in bits per channel use."""
    return spectral_summary(machine, tol=tol, max_iter=max_iter).entropy_bits
