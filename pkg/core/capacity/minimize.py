"""
Minimum ordinary feedback capacity over the Markov parametrizations of a
noise machine.

Each state with m outgoing edges contributes m - 1 free parameters. Edges are
taken in ascending noise order; the first one keeps whatever mass the others
leave (stick-breaking):

    p(e_1) = t_1,  p(e_2) = (1 - t_1) t_2,  ...,  p(e_0) = remainder

so for a two-edge state the single parameter is the probability of the edge
with the larger noise label.
"""

import itertools
import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.optimize import minimize_scalar

from core.capacity.markov import MarkovChannel, feedback_capacity
from core.channel.machine import NoiseMachine
from core.config.constants import (
    GRID_EVAL_CAP,
    GRID_HIGH,
    GRID_LOW,
    GRID_POINTS,
    MAX_FREE_PARAMS,
    REFINE_MAX_SWEEPS,
    REFINE_TOL,
)
from core.errors import ParameterError, ResourceGuardError

log = logging.getLogger(__name__)

# open interval the refinement searches in
_EDGE = 1e-9


class EdgeProbability(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    noise: int
    probability: float


class MinimizationResult(BaseModel):
    """Minimum of C_f, where it is attained, and how the search got there."""

    model_config = ConfigDict(frozen=True)

    value_bits: float
    parameters: List[float]
    probabilities: List[EdgeProbability]
    grid_value_bits: float
    grid_points: int
    grid_evaluations: int
    sweeps: int


def free_parameters(machine: NoiseMachine) -> int:
    """Sum over states of outdeg(s) - 1."""
    return sum(machine.out_degree(s) - 1 for s in machine.states)


def channel_from_parameters(machine: NoiseMachine, params: Sequence[float]) -> MarkovChannel:
    """
    Markov channel from stick-breaking parameters, states in ascending order.

    params: free_parameters(machine) values, each strictly inside (0, 1)
    """
    expected = free_parameters(machine)
    if len(params) != expected:
        raise ParameterError(f"Machine has {expected} free parameters, got {len(params)}")
    for value in params:
        if not 0.0 < value < 1.0:
            raise ParameterError(f"Parameter {value} is outside the open interval (0, 1)")

    prob = {}
    cursor = 0
    for state in machine.states:
        out = machine.out_edges(state)
        remaining = 1.0
        for edge in out[1:]:
            share = remaining * params[cursor]
            prob[edge] = share
            remaining -= share
            cursor += 1
        prob[out[0]] = remaining

    return MarkovChannel(machine=machine, probs=tuple(prob[e] for e in machine.edges))


def _objective(machine: NoiseMachine, params: Sequence[float]) -> float:
    return feedback_capacity(channel_from_parameters(machine, params))


def _grid_search(machine: NoiseMachine, k: int, points: int) -> Tuple[float, Tuple[float, ...], int]:
    axis = np.linspace(GRID_LOW, GRID_HIGH, points)
    best_value, best_point, evaluations = math.inf, None, 0
    # product() walks the grid in lexicographic order; strict < keeps the first minimum
    for point in itertools.product(axis, repeat=k):
        value = _objective(machine, point)
        evaluations += 1
        if value < best_value:
            best_value, best_point = value, tuple(float(v) for v in point)
    return best_value, best_point, evaluations


def _refine(machine: NoiseMachine, start: Sequence[float], value: float,
            tol: float, max_sweeps: int) -> Tuple[float, List[float], int]:
    point = list(start)
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        moved = 0.0
        for i in range(len(point)):
            def along(t, i=i):
                trial = point.copy()
                trial[i] = t
                return _objective(machine, trial)

            found = minimize_scalar(along, bounds=(_EDGE, 1.0 - _EDGE), method="bounded",
                                    options={"xatol": tol})
            if found.fun < value:
                moved = max(moved, abs(found.x - point[i]))
                point[i] = float(found.x)
                value = float(found.fun)
        if moved < tol:
            break
    return value, point, sweeps


def minimize_feedback_capacity(machine: NoiseMachine, grid_points: int = GRID_POINTS,
                               refine_tol: float = REFINE_TOL,
                               max_sweeps: int = REFINE_MAX_SWEEPS) -> MinimizationResult:
    """
    min over Markov parametrizations of log2 q - H(Z).

    machine: Validated noise machine with at most MAX_FREE_PARAMS free parameters
    grid_points: Coarse grid points per parameter on [0.01, 0.99]
    refine_tol: Parameter tolerance of the coordinate-wise refinement

    Returns a MinimizationResult. The coarse grid breaks ties toward the
    lexicographically smallest parameter vector.
    """
    k = free_parameters(machine)
    if k > MAX_FREE_PARAMS:
        raise ParameterError(
            f"Machine has {k} free parameters; minimization supports at most {MAX_FREE_PARAMS}"
        )
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")

    if k == 0:
        value = _objective(machine, ())
        return MinimizationResult(
            value_bits=value, parameters=[], probabilities=_probabilities(machine, ()),
            grid_value_bits=value, grid_points=grid_points, grid_evaluations=1, sweeps=0,
        )

    needed = grid_points ** k
    if needed > GRID_EVAL_CAP:
        raise ResourceGuardError("grid_evaluations", GRID_EVAL_CAP, needed)

    grid_value, grid_point, evaluations = _grid_search(machine, k, grid_points)
    log.debug("grid minimum %.9f at %s (%d points)", grid_value, grid_point, evaluations)
    value, point, sweeps = _refine(machine, grid_point, grid_value, refine_tol, max_sweeps)
    log.debug("refined minimum %.12f at %s after %d sweeps", value, point, sweeps)

    return MinimizationResult(
        value_bits=value,
        parameters=point,
        probabilities=_probabilities(machine, point),
        grid_value_bits=grid_value,
        grid_points=grid_points,
        grid_evaluations=evaluations,
        sweeps=sweeps,
    )


def _probabilities(machine: NoiseMachine, params: Sequence[float]) -> List[EdgeProbability]:
    mc = channel_from_parameters(machine, params)
    return [
        EdgeProbability(source=e.source, target=e.target, noise=e.noise, probability=p)
        for e, p in zip(machine.edges, mc.probs)
    ]
