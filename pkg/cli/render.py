"""
Report output: rich tables for people, one orjson document for programs.

Machine-readable layout (schema "zerocap.report/1"):

    {
      "manifest": {...},        # the RunManifest, parameters included
      "result": {...},          # subcommand-specific, stable field names
      "schema": "zerocap.report/1",
      "subcommand": "capacity"
    }

Keys are sorted and floats printed by orjson's shortest round-trip form, so
equal manifests give byte-identical documents.
"""

import logging
import sys
from typing import Any, Dict, List, Optional

import orjson
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from cli.manifest import RunManifest
from core.config.constants import REPORT_SCHEMA

stdout = Console(highlight=False)
stderr = Console(stderr=True, highlight=False)


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=stderr, show_path=False)],
        force=True,
    )


def report_document(manifest: RunManifest, result: Dict[str, Any]) -> bytes:
    document = {
        "schema": REPORT_SCHEMA,
        "subcommand": manifest.subcommand,
        "manifest": manifest.model_dump(mode="json"),
        "result": result,
    }
    options = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY
    return orjson.dumps(document, option=options) + b"\n"


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.9g}"
    if isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return escape(str(value))


def _rows_table(title: str, rows: List[Dict[str, Any]]) -> Table:
    table = Table(title=title, title_justify="left")
    for column in rows[0]:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*(_cell(v) for v in row.values()))
    return table


def render_human(title: str, result: Dict[str, Any], text: Optional[str] = None) -> None:
    """
    Key/value table of the scalar fields, then one table per list of records.
    """
    summary = Table(title=title, title_justify="left", show_header=False)
    summary.add_column("field", style="bold")
    summary.add_column("value")
    nested = []
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            nested.append((key, value))
        elif isinstance(value, dict):
            nested.append((key, [value]))
        else:
            summary.add_row(key, _cell(value))
    stdout.print(summary)
    for key, rows in nested:
        stdout.print(_rows_table(key, rows))
    if text:
        stdout.print(text, end="", markup=False)


def emit(manifest: RunManifest, title: str, result: Dict[str, Any], text: Optional[str] = None) -> None:
    if manifest.output == "json":
        sys.stdout.write(report_document(manifest, result).decode())
        sys.stdout.flush()
    else:
        render_human(title, result, text)


def error(message: str) -> None:
    stderr.print(f"[bold red]error:[/] {escape(message)}")
