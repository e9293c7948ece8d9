"""
Regression runner for the worked examples shipped in data/corpus/expected.

Each expected file lists cases; a case names a corpus machine, an alphabet
size and the quantities to reproduce:

    {
      "name": "example1",
      "description": "...",
      "cases": [
        {"machine": "fig2", "q": 3,
         "quantities": {"c0f_bits": {"value": 0.8907206, "tol": 1e-6},
                        "verdict": {"value": "CapacityPositive"}}}
      ]
    }
"""

from importlib import resources
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

import orjson
from pydantic import BaseModel, ConfigDict

from core.capacity.minimize import minimize_feedback_capacity
from core.capacity.report import capacity_report
from core.channel.machine import NoiseMachine, resolve_machine
from core.config.settings import Settings

EXPECTED_PACKAGE = "data.corpus"


class Expected(BaseModel):
    model_config = ConfigDict(extra="forbid")

    value: Union[float, str]
    tol: float = 0.0


class ExampleCase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    machine: str
    q: int
    quantities: Dict[str, Expected]


class ExampleFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    description: str = ""
    cases: List[ExampleCase]


def _quantities(machine: NoiseMachine, settings: Settings) -> Dict[str, Callable[[], Any]]:
    report = {}

    def capacity(field: str) -> Callable[[], Any]:
        def compute():
            if not report:
                report["value"] = capacity_report(machine, tol=settings.perron_tol,
                                                  max_iter=settings.perron_max_iter,
                                                  subset_cap=settings.subset_cap)
            value = getattr(report["value"], field)
            return value.value if field == "verdict" else value
        return compute

    def minimum():
        return minimize_feedback_capacity(machine, grid_points=settings.grid_points,
                                          refine_tol=settings.refine_tol).value_bits

    names = ("perron_value", "entropy_bits", "verdict", "c0f_bits", "c0_lower_bits", "c0_upper_bits")
    table = {name: capacity(name) for name in names}
    table["min_feedback_capacity_bits"] = minimum
    return table


def load_expected(directory: Optional[Path] = None) -> List[ExampleFile]:
    folder = directory if directory is not None else resources.files(EXPECTED_PACKAGE).joinpath("expected")
    files = sorted((entry for entry in folder.iterdir() if entry.name.endswith(".json")), key=lambda e: e.name)
    if not files:
        raise FileNotFoundError(f"No expected reports found in {folder}")
    return [ExampleFile.model_validate(orjson.loads(entry.read_bytes())) for entry in files]


def run_examples(settings: Settings, directory: Optional[Path] = None) -> List[Dict[str, Any]]:
    """
    Recompute every expected quantity.

    Returns one row per quantity: example, machine, q, quantity, expected,
    actual, tol, ok.
    """
    rows = []
    for example in load_expected(directory):
        for case in example.cases:
            machine = resolve_machine(case.machine).with_alphabet(case.q)
            compute = _quantities(machine, settings)
            for quantity, expected in sorted(case.quantities.items()):
                if quantity not in compute:
                    raise ValueError(f"{example.name}: unknown quantity '{quantity}'")
                actual = compute[quantity]()
                if isinstance(expected.value, str):
                    ok = actual == expected.value
                else:
                    ok = abs(float(actual) - expected.value) <= expected.tol
                rows.append({
                    "example": example.name,
                    "machine": case.machine,
                    "q": case.q,
                    "quantity": quantity,
                    "expected": expected.value,
                    "actual": actual,
                    "tol": expected.tol,
                    "ok": ok,
                })
    return rows
