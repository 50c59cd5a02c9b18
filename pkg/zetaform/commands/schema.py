"""Schema command for zetaform."""
import json

import typer

from zetaform.utils.common import fail
from zetaform.utils.output import SCHEMAS


def schema_command(
    record: str = typer.Argument(..., help=f"One of: {', '.join(SCHEMAS)}"),
):
    """Print the JSON schema of a machine-readable output record."""
    model = SCHEMAS.get(record)
    if model is None:
        fail(f"unknown record {record!r}; choose from {', '.join(SCHEMAS)}")
    typer.echo(json.dumps(model.model_json_schema(), indent=2))
