"""
Finite-state additive noise machines: data model, JSON documents, validation.

A machine is a labeled digraph on states 0..|S|-1. Every edge carries the
noise symbol emitted when it is taken; labels leaving a state are distinct.

Document format (JSON):

    {
      "name": "fig2",                  # optional
      "q": 3,
      "states": 2,                     # a count, or a list of state names
      "edges": [[0, 0, 0], [0, 1, 1], [1, 0, 0]]   # [from, to, noise]
    }

When "states" is a list of names, edges may refer to states by name; names
map to indices in declaration order.
"""

import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx
import numpy as np
import orjson
from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError

from core.errors import MachineSyntaxError, MachineValidationError

log = logging.getLogger(__name__)

CORPUS_PACKAGE = "data.corpus"


@dataclass(frozen=True, order=True)
class Edge:
    source: int
    target: int
    noise: int


@dataclass(frozen=True)
class NoiseMachine:
    """
    Immutable noise machine. Construction does not validate; use
    validate() or parse_machine() for checked machines.
    """

    q: int
    num_states: int
    edges: Tuple[Edge, ...]
    name: str = ""
    state_names: Tuple[str, ...] = ()
    _out: Dict[int, Tuple[Edge, ...]] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "state_names", tuple(self.state_names))
        out: Dict[int, List[Edge]] = {s: [] for s in range(self.num_states)}
        for edge in self.edges:
            out.setdefault(edge.source, []).append(edge)
        object.__setattr__(
            self, "_out", {s: tuple(sorted(es, key=lambda e: (e.noise, e.target))) for s, es in out.items()}
        )

    @property
    def states(self) -> range:
        return range(self.num_states)

    @property
    def max_label(self) -> int:
        return max((e.noise for e in self.edges), default=0)

    def out_edges(self, state: int) -> Tuple[Edge, ...]:
        """Outgoing edges of `state` in ascending noise order."""
        return self._out.get(state, ())

    def edge_for(self, state: int, noise: int) -> Optional[Edge]:
        for edge in self.out_edges(state):
            if edge.noise == noise:
                return edge
        return None

    def out_degree(self, state: int) -> int:
        return len(self.out_edges(state))

    def adjacency(self) -> np.ndarray:
        """A[i][j] = number of edges i -> j."""
        matrix = np.zeros((self.num_states, self.num_states), dtype=np.int64)
        for edge in self.edges:
            matrix[edge.source, edge.target] += 1
        return matrix

    def with_alphabet(self, q: int) -> "NoiseMachine":
        """Same graph over a larger alphabet (labels must still fit)."""
        if q <= self.max_label:
            raise ValueError(f"q={q} cannot hold noise label {self.max_label}; use q > {self.max_label}")
        return NoiseMachine(q=q, num_states=self.num_states, edges=self.edges,
                            name=self.name, state_names=self.state_names)


# ============================================================================
# Validation
# ============================================================================

@dataclass(frozen=True)
class InvariantCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[InvariantCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> Tuple[InvariantCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def check(self, name: str) -> InvariantCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)


def _strongly_connected(machine: NoiseMachine) -> Tuple[bool, str]:
    # double reachability sweep from state 0: forward, then on the reversed graph
    graph = nx.DiGraph()
    graph.add_nodes_from(machine.states)
    graph.add_edges_from((e.source, e.target) for e in machine.edges)
    everything = set(machine.states)
    forward = nx.descendants(graph, 0) | {0}
    backward = nx.descendants(graph.reverse(copy=False), 0) | {0}
    if forward != everything:
        return False, f"states {sorted(everything - forward)} unreachable from state 0"
    if backward != everything:
        return False, f"state 0 unreachable from states {sorted(everything - backward)}"
    return True, ""


def validate(machine: NoiseMachine) -> ValidationReport:
    """
    Check every machine invariant. Never raises; failures are in the report.
    """
    checks = []

    checks.append(InvariantCheck(
        "alphabet", machine.q >= 2,
        "" if machine.q >= 2 else f"q={machine.q}; alphabet size must be at least 2",
    ))

    bad_states = [e for e in machine.edges
                  if not (0 <= e.source < machine.num_states and 0 <= e.target < machine.num_states)]
    states_ok = machine.num_states >= 1 and not bad_states
    detail = ""
    if machine.num_states < 1:
        detail = "machine has no states"
    elif bad_states:
        detail = f"edge {bad_states[0]} refers to a state outside 0..{machine.num_states - 1}"
    checks.append(InvariantCheck("state_range", states_ok, detail))

    bad_labels = [e for e in machine.edges if not 0 <= e.noise < machine.q]
    checks.append(InvariantCheck(
        "label_range", not bad_labels,
        f"edge {bad_labels[0]} has noise outside 0..{machine.q - 1}" if bad_labels else "",
    ))

    dead = [s for s in machine.states if machine.out_degree(s) == 0]
    checks.append(InvariantCheck(
        "liveness", not dead,
        f"states {dead} have no outgoing edge" if dead else "",
    ))

    clashes = []
    for s in machine.states:
        labels = [e.noise for e in machine.out_edges(s)]
        if len(labels) != len(set(labels)):
            clashes.append(s)
    checks.append(InvariantCheck(
        "distinct_labels", not clashes,
        f"states {clashes} repeat a noise label on outgoing edges" if clashes else "",
    ))

    if states_ok:
        connected, detail = _strongly_connected(machine)
    else:
        connected, detail = False, "skipped: state range invalid"
    checks.append(InvariantCheck("strong_connectivity", connected, detail))

    report = ValidationReport(tuple(checks))
    log.debug("validated %s: %s", machine.name or "<machine>", "ok" if report.ok else report.failures)
    return report


# ============================================================================
# Documents
# ============================================================================

StateRef = Union[StrictInt, StrictStr]


class MachineDocument(BaseModel):
    """Shape of a machine file, before graph invariants are checked."""

    model_config = ConfigDict(extra="forbid")

    name: str = ""
    q: StrictInt
    states: Union[StrictInt, List[StrictStr]]
    edges: List[Tuple[StateRef, StateRef, StrictInt]]


def _build(document: MachineDocument) -> NoiseMachine:
    if isinstance(document.states, list):
        names = tuple(document.states)
        if len(set(names)) != len(names):
            raise MachineSyntaxError("state names must be unique", path="states")
        index = {name: i for i, name in enumerate(names)}
        count = len(names)
    else:
        names, index, count = (), {}, document.states

    def resolve(ref: StateRef, position: str) -> int:
        if isinstance(ref, str):
            if ref not in index:
                raise MachineSyntaxError(f"unknown state name '{ref}'", path=position)
            return index[ref]
        return ref

    edges = []
    for i, (source, target, noise) in enumerate(document.edges):
        edges.append(Edge(resolve(source, f"edges.{i}.0"), resolve(target, f"edges.{i}.1"), noise))
    return NoiseMachine(q=document.q, num_states=count, edges=tuple(edges),
                        name=document.name, state_names=names)


def parse_machine(text: Union[str, bytes]) -> NoiseMachine:
    """
    Parse and validate a machine document.

    text: JSON document (see module docstring)

    Returns a validated NoiseMachine. Raises MachineSyntaxError or
    MachineValidationError.
    """
    try:
        raw = orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise MachineSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    try:
        document = MachineDocument.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(part) for part in first["loc"])
        raise MachineSyntaxError(first["msg"], path=path) from exc

    machine = _build(document)
    report = validate(machine)
    if not report.ok:
        raise MachineValidationError(report)
    return machine


def render_machine(machine: NoiseMachine) -> str:
    """Canonical JSON document; parse_machine(render_machine(m)) == m."""
    def ref(state: int):
        return machine.state_names[state] if machine.state_names else state

    document = {}
    if machine.name:
        document["name"] = machine.name
    document["q"] = machine.q
    document["states"] = list(machine.state_names) if machine.state_names else machine.num_states
    document["edges"] = [[ref(e.source), ref(e.target), e.noise] for e in machine.edges]
    return orjson.dumps(document, option=orjson.OPT_INDENT_2).decode() + "\n"


def load_machine(path: Union[str, Path]) -> NoiseMachine:
    """Read and parse a machine file. OSError propagates unchanged."""
    return parse_machine(Path(path).read_bytes())


def corpus_names() -> List[str]:
    folder = resources.files(CORPUS_PACKAGE)
    return sorted(entry.name[:-5] for entry in folder.iterdir() if entry.name.endswith(".json"))


def resolve_machine(name_or_path: str) -> NoiseMachine:
    """
    Load a shipped fixture by name (fig1, fig2, fig6) or any machine file by path.
    """
    if name_or_path in corpus_names():
        fixture = resources.files(CORPUS_PACKAGE).joinpath(f"{name_or_path}.json")
        return parse_machine(fixture.read_bytes())
    return load_machine(name_or_path)
