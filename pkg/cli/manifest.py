"""
Run manifests: everything needed to reproduce one CLI invocation.
"""

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SUBCOMMANDS = ("validate", "entropy", "capacity", "zerotest", "minfc", "oracle", "simulate", "examples")


class RunManifest(BaseModel):
    """
    One subcommand run. Seeds and tolerances live in `parameters`, so two runs
    with equal manifests produce identical machine-readable output.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: Literal[SUBCOMMANDS]
    machine: Optional[str] = None          # corpus name or path
    q: Optional[int] = None                # alphabet override
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output: Literal["human", "json"] = "human"
    verbose: bool = False

    def param(self, name: str, default: Any = None) -> Any:
        value = self.parameters.get(name)
        return default if value is None else value
